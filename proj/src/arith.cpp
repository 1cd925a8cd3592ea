#include "artin/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace artin {

namespace {

constexpr u64 kTrialBound = 1000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = simple_prime_list(kTrialBound);
  return primes;
}

u64 checked_pow(u64 p, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / p) throw std::overflow_error("prime power exceeds 64 bits");
    r *= p;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho; returns a nontrivial divisor of composite n.
u64 rho_divisor(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_prime_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = rho_divisor(n);
  collect_prime_factors(d, out);
  collect_prime_factors(n / d, out);
}

}  // namespace

FactoredInteger FactoredInteger::from_factors(std::span<const PrimePower> factors) {
  if (factors.size() > kMaxFactors) throw std::invalid_argument("too many prime factors");
  FactoredInteger f;
  u64 prev = 0;
  for (const auto& [p, e] : factors) {
    if (e == 0) throw std::invalid_argument("zero exponent");
    if (p <= prev) throw std::invalid_argument("primes must be strictly increasing");
    if (!is_prime(p)) throw std::invalid_argument("factor is not prime");
    u64 pe = checked_pow(p, e);
    if (f.n_ > UINT64_MAX / pe) throw std::overflow_error("product exceeds 64 bits");
    f.n_ *= pe;
    f.factors_[f.count_++] = {p, e};
    prev = p;
  }
  return f;
}

void FactoredInteger::push_trusted(u64 p, unsigned e) {
  factors_[count_++] = {p, e};
  for (unsigned i = 0; i < e; ++i) n_ *= p;
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  if (mod <= UINT32_MAX) {
    while (exp) {
      if (exp & 1) result = result * base % mod;
      base = base * base % mod;
      exp >>= 1;
    }
    return result;
  }
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit to avoid overflow near 2^64.
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw NotCoprime("inverse_mod: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  // Jim Sinclair's base set: deterministic below 2^64.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

FactoredInteger factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  FactoredInteger f;
  for (std::uint32_t p : small_primes()) {
    if (static_cast<u64>(p) * p > n) break;
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_trusted(p, e);
  }
  if (n == 1) return f;
  if (n < kTrialBound * kTrialBound || is_prime(n)) {
    f.push_trusted(n, 1);
    return f;
  }
  std::vector<u64> rest;
  collect_prime_factors(n, rest);
  std::sort(rest.begin(), rest.end());
  for (std::size_t i = 0; i < rest.size();) {
    std::size_t j = i;
    while (j < rest.size() && rest[j] == rest[i]) ++j;
    f.push_trusted(rest[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return f;
}

u64 euler_phi(const FactoredInteger& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors()) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

u64 carmichael_lambda(u64 p, unsigned e) {
  if (p == 2) {
    if (e <= 2) return e == 1 ? 1 : 2;
    return u64{1} << (e - 2);
  }
  u64 l = p - 1;
  for (unsigned i = 1; i < e; ++i) l *= p;
  return l;
}

u64 carmichael_lambda(const FactoredInteger& f) {
  u64 l = 1;
  for (const auto& [p, e] : f.factors()) l = lcm(l, carmichael_lambda(p, e));
  return l;
}

bool has_order_exactly(u64 u_mod_n, u64 n, u64 m, const FactoredInteger& m_factors) {
  for (const auto& pe : m_factors.factors()) {
    if (pow_mod(u_mod_n, m / pe.p, n) == 1) return false;
  }
  return true;
}

std::optional<u64> mult_order(u64 u_mod_n, u64 n, u64 lambda,
                              const FactoredInteger& lambda_factors) {
  if (n == 1) return 1;
  if (std::gcd(u_mod_n, n) != 1) return std::nullopt;
  u64 m = lambda;
  for (const auto& [q, e] : lambda_factors.factors()) {
    for (unsigned i = 0; i < e && pow_mod(u_mod_n, m / q, n) == 1; ++i) m /= q;
  }
  return m;
}

std::optional<u64> mult_order(i64 u, const FactoredInteger& f) {
  u64 n = f.value();
  if (n == 1) return 1;
  u64 lambda = carmichael_lambda(f);
  return mult_order(reduce(u, n), n, lambda, factorize(lambda));
}

SpfTable::SpfTable(u64 limit, u64 ceiling) : limit_(limit) {
  if (limit < 2 || limit > ceiling || limit > UINT32_MAX) {
    throw std::length_error("SpfTable: limit out of range");
  }
  spf_.assign(limit + 1, 0);
  primes_.reserve(static_cast<std::size_t>(1.26 * limit / std::log(static_cast<double>(limit))) + 16);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t si = spf_[i];
    for (std::uint32_t p : primes_) {
      if (p > si || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

FactoredInteger SpfTable::factor(u64 n) const {
  if (n == 0 || n > limit_) throw std::out_of_range("SpfTable::factor: n outside table");
  FactoredInteger f;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    f.push_trusted(p, e);
  }
  return f;
}

SpfTable build_spf(u64 limit, u64 ceiling) { return SpfTable(limit, ceiling); }

std::vector<std::uint32_t> simple_prime_list(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes) {
  std::vector<u64> out;
  if (hi <= lo) return out;
  lo = std::max<u64>(lo, 2);
  if (hi <= lo) return out;
  std::vector<char> mark(hi - lo, 1);
  for (u64 p : base_primes) {
    if (p * p >= hi) break;
    u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 j = start; j < hi; j += p) mark[j - lo] = 0;
  }
  for (u64 i = 0; i < mark.size(); ++i)
    if (mark[i]) out.push_back(lo + i);
  return out;
}

FactoredInteger Factorizer::operator()(u64 n) {
  if (table_ && n <= table_->limit()) return table_->factor(n);
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  return memo_.emplace(n, factorize(n)).first->second;
}

}  // namespace artin
