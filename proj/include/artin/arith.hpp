// Exact 64-bit integer kernels: primality, factorization, sieves, totient,
// Carmichael lambda and multiplicative order.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace artin {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct NotCoprime : std::domain_error {
  using std::domain_error::domain_error;
};

struct PrimePower {
  u64 p = 0;
  unsigned e = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// An integer together with its canonical factorization. A 64-bit integer has
// at most 15 distinct prime factors, so storage is inline.
class FactoredInteger {
 public:
  static constexpr std::size_t kMaxFactors = 15;

  FactoredInteger() = default;  // n = 1

  // Validates every invariant (product, ordering, primality, exponents).
  static FactoredInteger from_factors(std::span<const PrimePower> factors);

  u64 value() const { return n_; }
  std::span<const PrimePower> factors() const { return {factors_.data(), count_}; }
  std::size_t omega() const { return count_; }
  bool is_one() const { return count_ == 0; }

  // Appends a factor without validation. Callers (the factorizers in this
  // module) guarantee ascending primes and overflow-free products.
  void push_trusted(u64 p, unsigned e);

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    if (a.n_ != b.n_ || a.count_ != b.count_) return false;
    for (std::size_t i = 0; i < a.count_; ++i)
      if (!(a.factors_[i] == b.factors_[i])) return false;
    return true;
  }

 private:
  u64 n_ = 1;
  std::array<PrimePower, kMaxFactors> factors_{};
  std::size_t count_ = 0;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 mod);

// Reduces a signed integer to its canonical residue in [0, m).
inline u64 reduce(i64 u, u64 m) {
  if (u >= 0) return static_cast<u64>(u) % m;
  u64 r = (static_cast<u64>(-(u + 1)) % m + 1) % m;  // |u| mod m, overflow-safe
  return r == 0 ? 0 : m - r;
}

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inverse_mod(u64 a, u64 m);

// Deterministic Miller-Rabin, valid on the whole 64-bit range.
bool is_prime(u64 n);

// Trial division for small factors, then Brent-Pollard rho with certified
// cofactors. Throws std::invalid_argument for n = 0.
FactoredInteger factorize(u64 n);

u64 euler_phi(const FactoredInteger& f);
u64 carmichael_lambda(const FactoredInteger& f);
// lambda(p^e) for a single prime power.
u64 carmichael_lambda(u64 p, unsigned e);

// Least m >= 1 with u^m = 1 mod n, or nullopt when gcd(u, n) > 1.
// ord_1(u) = 1 for every u.
std::optional<u64> mult_order(i64 u, const FactoredInteger& f);

// Same, with lambda(n) and its factorization supplied by the caller (bulk
// scans factor lambda once per value).
std::optional<u64> mult_order(u64 u_mod_n, u64 n, u64 lambda,
                              const FactoredInteger& lambda_factors);

// True iff u^(m/q) != 1 mod n for every prime q | m, i.e. ord_n(u) = m given
// u^m = 1. u must already be reduced mod n.
bool has_order_exactly(u64 u_mod_n, u64 n, u64 m, const FactoredInteger& m_factors);

// Smallest-prime-factor table over [0, limit], filled by a linear sieve.
class SpfTable {
 public:
  static constexpr u64 kDefaultCeiling = 100'000'000;

  // Throws std::length_error when limit < 2 or limit > ceiling.
  explicit SpfTable(u64 limit, u64 ceiling = kDefaultCeiling);

  u64 limit() const { return limit_; }
  std::uint32_t spf(u64 i) const { return spf_[i]; }
  bool is_prime(u64 i) const { return i >= 2 && spf_[i] == i; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  FactoredInteger factor(u64 n) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

SpfTable build_spf(u64 limit, u64 ceiling = SpfTable::kDefaultCeiling);

// Primes in [lo, hi) by a segmented sieve. base_primes must contain every
// prime up to sqrt(hi).
std::vector<u64> primes_in_range(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes);

// Plain Eratosthenes prime list up to and including limit.
std::vector<std::uint32_t> simple_prime_list(u64 limit);

// Factorizes through an SpfTable when it covers n, otherwise through
// factorize() with a memo. Not thread-safe; use one instance per worker.
class Factorizer {
 public:
  explicit Factorizer(const SpfTable* table = nullptr) : table_(table) {}
  FactoredInteger operator()(u64 n);

 private:
  const SpfTable* table_;
  std::unordered_map<u64, FactoredInteger> memo_;
};

}  // namespace artin
