// Characteristic functions of primitive roots.
//
// Four independent routes decide whether u is a primitive root mod p:
//   * the order test (ord_p(u) = p - 1), the production path;
//   * a sum over divisors d | p - 1 of mu(d)/phi(d) times the sum of all
//     multiplicative characters of order d;
//   * a divisor-free multiplicative form summing over exponents n coprime to
//     p - 1 and a full orthogonality sum of a character of order p - 1;
//   * a divisor-free additive form using the full additive character sum.
// The character routes are O(p^2) validators and are capped at p <= 10^4.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

struct SizeLimitError : std::length_error {
  using std::length_error::length_error;
};

// A complex or rational evaluation that failed to land on an integer.
struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr u64 kPsiPrimeLimit = 10'000;
inline constexpr u64 kDlogPrimeLimit = 1'000'000;
inline constexpr double kPsiResidualLimit = 1e-6;

struct PsiValue {
  int value = 0;
  // Distance of the raw evaluation from the rounded integer.
  double residual = 0;
};

class DlogTable {
 public:
  u64 p() const { return p_; }
  u64 tau() const { return tau_; }
  // Discrete logarithm base tau of u in [1, p-1].
  std::uint32_t log(u64 u) const { return log_[u]; }
  // tau^v mod p.
  u64 exp(u64 v) const { return exp_[v % (p_ - 1)]; }

 private:
  friend DlogTable build_dlog(u64 p);
  u64 p_ = 0;
  u64 tau_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

// 1 iff ord_{p^k}(u) = lambda(p^k). Throws NotCoprime when p | u.
int char_prime_power(i64 u, u64 p, unsigned k);

// gcd(u, n) = 1 and ord_n(u) = lambda(n). Non-coprime u gives false.
bool is_primitive_root_mod_n(i64 u, const FactoredInteger& f);

// Cross-check path: ord_n(u) assembled as lcm of ord_{p^k}(u) over the
// prime-power factors, compared against lambda(n) = lcm lambda(p^k).
bool is_primitive_root_by_composition(i64 u, const FactoredInteger& f);

// u is a primitive root modulo every prime-power factor of n. Sufficient for
// is_primitive_root_mod_n but not necessary: ord_21(2) = 6 = lambda(21)
// although 2 is not a primitive root mod 7.
bool primitive_on_every_prime_power(i64 u, const FactoredInteger& f);

// Smallest tau >= 1 with ord_p(tau) = p - 1.
u64 find_primitive_root(u64 p);

// Throws SizeLimitError when p > 10^6.
DlogTable build_dlog(u64 p);

PsiValue psi_divisor(u64 u, u64 p);
PsiValue psi_divisor(u64 u, const DlogTable& table);

PsiValue psi_divisor_free_mult(u64 u, u64 p);
PsiValue psi_divisor_free_mult(u64 u, const DlogTable& table);

PsiValue psi_divisor_free_add(u64 u, u64 p);
PsiValue psi_divisor_free_add(u64 u, const DlogTable& table);

// Indicator form of the additive route: the number of exponents n coprime to
// p - 1 with tau^n = u mod p.
int psi_divisor_free_add_exact(u64 u, const DlogTable& table);

}  // namespace artin
