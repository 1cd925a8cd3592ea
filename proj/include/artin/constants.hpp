// Named constants attached to the primes with a fixed primitive root, and
// the special functions they need.
//
// All prime sums accumulate in long double (64-bit mantissa on x86-64) with
// Neumaier compensation.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

struct DivergentTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConstantEstimate {
  std::string name;
  long double value = 0;
  u64 truncation = 2;
  std::optional<long double> tail_bound;
  std::string convention;
};

// Euler-Mascheroni constant.
inline constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

// prod_{p <= bound} (1 - 1/(p(p-1))).
ConstantEstimate artin_product(u64 bound);

// sum_{p <= x, p in P_u} 1/p - alpha log log x.
ConstantEstimate beta_estimate(i64 u, u64 x, long double alpha);
ConstantEstimate beta_estimate(std::span<const u64> primes_with_root, u64 x, long double alpha);

// sum_{p <= x, p in P_u} log p/(p-1) - alpha log x.
ConstantEstimate gamma_estimate(i64 u, u64 x, long double alpha);
ConstantEstimate gamma_estimate(std::span<const u64> primes_with_root, u64 x, long double alpha);

// sum_{p <= x, p in P_u} sum_{k >= 2} (1/k) (log p/(p-1))^k.
// Throws DivergentTerm if some log p/(p-1) >= 1 (only p = 2).
ConstantEstimate nu_estimate(i64 u, u64 x);
ConstantEstimate nu_estimate(std::span<const u64> primes_with_root, u64 x);

// prod_{p in W} (1 - 1/p^2), multiplied out as an exact rational.
long double wieferich_product(std::span<const u64> primes);

// e^{gamma_u - gamma alpha} / (alpha Gamma(alpha)) prod_W (1 - p^-2). With
// assume_zero_exponent the exponential factor is taken as 1.
ConstantEstimate kappa_estimate(bool assume_zero_exponent, std::span<const u64> wieferich_primes,
                                long double alpha, long double gamma_u);

// Uses artin_product(10^7) and gamma_estimate(2, 1000, alpha).
ConstantEstimate kappa_estimate(bool assume_zero_exponent, std::span<const u64> wieferich_primes);

// Standard Gamma for s > 0; std::domain_error otherwise.
long double gamma_function(long double s);

// Offset logarithmic integral, integral from 2 to x of dz/log z.
long double log_integral(long double x);

struct MertensProducts {
  // (i) prod (1 - 1/p)^-1, (ii) prod (1 + 1/p), (iii) prod (1 - log p/(p-1))^-1
  std::array<long double, 3> lhs{};
  // e^{gamma_u} (log x)^alpha, e^{gamma_u} prod(1 - p^-2) (log x)^alpha,
  // e^{nu_u - gamma_u} x^alpha
  std::array<long double, 3> rhs{};
  // prod_{p <= x, p in P_u} (1 - p^-2)
  long double square_product = 1;
};

struct MertensInputs {
  long double alpha = 0;
  long double gamma_u = 0;
  long double nu_u = 0;
};

// Throws DivergentTerm if a factor is non-positive.
MertensProducts mertens_products(std::span<const u64> primes_with_root, u64 x,
                                 const MertensInputs& in);
MertensProducts mertens_products(i64 u, u64 x, const MertensInputs& in);

// prod_{p <= bound} (1 - (1 - (1 - 1/p)^k)/(p - 1)); k = 1 is the Artin product.
ConstantEstimate totient_moment_product(int k, u64 bound);

}  // namespace artin
