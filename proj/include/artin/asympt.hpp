// Asymptotic predictions for N_u(x), pi_u(x), the harmonic sum over N_u and
// the totient moments, set against exact counts.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/arith.hpp"
#include "artin/constants.hpp"

namespace artin {

struct CountComparison {
  u64 x = 0;
  long double empirical = 0;
  long double predicted = 0;
  long double ratio = 0;  // empirical / predicted, 0 when predicted = 0
  std::string formula_id;
};

CountComparison make_comparison(std::string formula_id, u64 x, long double empirical, long double predicted);

// (exponent_const / Gamma(alpha)) x (log x)^(alpha - 1) wief_product.
long double predict_N(long double x, long double alpha, long double exponent_const, long double wief_product);

// (6/pi^2) / Gamma(alpha) x (log x)^(alpha - 1).
long double predict_N_lower(long double x, long double alpha);

// c li(x) with the offset li.
long double predict_pi(long double x, long double c);

// Compensated sum of 1/n over the members <= x of a sorted list.
long double harmonic_sum_empirical(std::span<const u64> members, u64 x);
long double harmonic_sum_empirical(i64 u, u64 x);

// sum_{p <= x} (phi(p-1)/(p-1))^k against li(x) times the Euler product
// truncated at product_bound. The table must cover x.
CountComparison totient_moment(int k, u64 x, const SpfTable& table, u64 product_bound = 1'000'000);

struct PhiOverPResult {
  CountComparison row;
  long double direct = 0;      // sum phi(p-1)/p
  long double rearranged = 0;  // sum phi(p-1)/(p-1) - sum phi(p-1)/(p(p-1))
  long double identity_rel_error = 0;
};

// sum_{p <= x} phi(p-1)/p against a0 li(x).
PhiOverPResult phi_over_p_sum(u64 x, const SpfTable& table, u64 product_bound = 1'000'000);

inline constexpr std::string_view kFormulaIds[] = {"N2", "N2_lower", "PI_U", "HARMONIC", "MOMENT_K", "PHI_P"};

struct VerificationConfig {
  i64 u = 2;
  unsigned workers = 0;
  int moment_k = 1;
  bool empirical_exponent = false;  // use e^{gamma_u - gamma alpha} instead of 1
  u64 alpha_bound = 10'000'000;
  u64 product_bound = 1'000'000;
  u64 gamma_truncation = 1000;
  u64 wieferich_limit = 1'000'000;
};

// Shared census data and constants for comparison tables up to max_x.
class VerificationContext {
 public:
  explicit VerificationContext(u64 max_x, VerificationConfig cfg = {});

  const VerificationConfig& config() const { return cfg_; }
  u64 max_x() const { return max_x_; }
  const SpfTable& table() const { return table_; }
  const std::vector<u64>& integers_with_root();
  const std::vector<u64>& primes_with_root();
  long double alpha() const { return alpha_; }
  long double gamma_u() const { return gamma_u_; }
  long double exponent_const() const;
  long double wief_product() const { return wief_product_; }
  const std::vector<u64>& wieferich_primes() const { return wieferich_; }
  long double kappa() const;

 private:
  VerificationConfig cfg_;
  u64 max_x_;
  SpfTable table_;
  std::optional<std::vector<u64>> integers_;
  std::optional<std::vector<u64>> primes_;
  long double alpha_;
  long double gamma_u_;
  std::vector<u64> wieferich_;
  long double wief_product_;
};

// One row per grid point; std::invalid_argument for an unknown formula id or
// a grid point above the context's range.
std::vector<CountComparison> comparison_table(std::string_view formula_id, std::span<const u64> grid,
                                              VerificationContext& ctx);

}  // namespace artin
