// Brute-force reference implementations for the unit tests. Nothing here
// shares code with the library beyond the integer typedefs.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 phi(u64 n) {
  u64 c = 0;
  for (u64 k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

// Order by repeated multiplication; 0 when gcd(u, n) > 1.
inline u64 order(u64 u, u64 n) {
  if (n == 1) return 1;
  u %= n;
  if (std::gcd(u, n) != 1) return 0;
  u64 x = u, m = 1;
  while (x != 1 % n) {
    x = x * u % n;
    ++m;
  }
  return m;
}

// Exponent of the unit group as the largest unit order.
inline u64 lambda(u64 n) {
  u64 best = 1;
  for (u64 a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) best = std::max(best, order(a, n));
  return best;
}

inline bool prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> primes_below(u64 x) {
  std::vector<u64> out;
  for (u64 n = 2; n <= x; ++n)
    if (prime(n)) out.push_back(n);
  return out;
}

inline std::vector<u64> integers_with_root(u64 u, u64 x) {
  std::vector<u64> out;
  for (u64 n = 2; n <= x; ++n) {
    const u64 o = order(u, n);
    if (o && o == lambda(n)) out.push_back(n);
  }
  return out;
}

// li(x) - li(2) through the exponential integral.
inline long double li(long double x) { return std::expintl(std::log(x)) - std::expintl(std::log(2.0L)); }

// Gamma by upward recurrence to z >= 30 followed by the Stirling series.
inline long double gamma(long double s) {
  long double shift = 0;
  long double z = s;
  while (z < 30) {
    shift += std::log(z);
    z += 1;
  }
  const long double z2 = z * z;
  const long double series =
      1 / (12 * z) - 1 / (360 * z * z2) + 1 / (1260 * z * z2 * z2) - 1 / (1680 * z * z2 * z2 * z2);
  const long double lg = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * 3.14159265358979323846264338327950288L) + series;
  return std::exp(lg - shift);
}

inline int mobius(u64 n) {
  int m = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

// Ramanujan sum c_m(v): sum over j coprime to m of e^{2 pi i j v / m}.
inline long double ramanujan(u64 m, u64 v) {
  const u64 g = std::gcd(m, v % m == 0 ? m : v % m);
  const u64 q = m / g;
  return static_cast<long double>(mobius(q)) * phi(m) / phi(q);
}

// Discrete log of u base g mod p by search.
inline u64 dlog(u64 g, u64 u, u64 p) {
  u64 x = 1;
  for (u64 v = 0; v < p - 1; ++v) {
    if (x == u % p) return v;
    x = x * g % p;
  }
  return p;
}

}  // namespace oracle
