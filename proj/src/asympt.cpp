#include "artin/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "artin/census.hpp"
#include "artin/summation.hpp"

namespace artin {

namespace {

long double ld(u64 v) { return static_cast<long double>(v); }

void require_x3(long double x, const char* what) {
  if (!(x >= 3)) throw std::domain_error(std::string(what) + ": x must be >= 3");
}

}  // namespace

CountComparison make_comparison(std::string formula_id, u64 x, long double empirical, long double predicted) {
  return {x, empirical, predicted, predicted != 0 ? empirical / predicted : 0.0L, std::move(formula_id)};
}

long double predict_N(long double x, long double alpha, long double exponent_const, long double wief_product) {
  require_x3(x, "predict_N");
  return exponent_const / gamma_function(alpha) * x * std::pow(std::log(x), alpha - 1) * wief_product;
}

long double predict_N_lower(long double x, long double alpha) {
  require_x3(x, "predict_N_lower");
  constexpr long double six_over_pi2 = 6 / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
  return six_over_pi2 / gamma_function(alpha) * x * std::pow(std::log(x), alpha - 1);
}

long double predict_pi(long double x, long double c) { return c * log_integral(x); }

long double harmonic_sum_empirical(std::span<const u64> members, u64 x) {
  CompensatedSum<> sum;
  for (u64 n : members) {
    if (n > x) break;
    sum += 1.0L / ld(n);
  }
  return sum.value();
}

long double harmonic_sum_empirical(i64 u, u64 x) {
  const SpfTable table(std::max<u64>(x, 2));
  const auto census = enum_integers_with_root(u, x, table);
  return harmonic_sum_empirical(*census.members, x);
}

CountComparison totient_moment(int k, u64 x, const SpfTable& table, u64 product_bound) {
  if (k < 1 || k > 3) throw std::invalid_argument("totient_moment: k must be 1, 2 or 3");
  if (x > table.limit()) throw std::length_error("totient_moment: x exceeds sieve limit");
  CompensatedSum<> sum;
  for (u64 p : table.primes()) {
    if (p > x) break;
    const long double ratio = ld(euler_phi(table.factor(p - 1))) / ld(p - 1);
    sum += std::pow(ratio, k);
  }
  const long double predicted = log_integral(ld(x)) * totient_moment_product(k, product_bound).value;
  return make_comparison("MOMENT_K", x, sum.value(), predicted);
}

PhiOverPResult phi_over_p_sum(u64 x, const SpfTable& table, u64 product_bound) {
  if (x > table.limit()) throw std::length_error("phi_over_p_sum: x exceeds sieve limit");
  CompensatedSum<> direct, over_pm1, over_ppm1;
  for (u64 p : table.primes()) {
    if (p > x) break;
    const long double phi = ld(euler_phi(table.factor(p - 1)));
    direct += phi / ld(p);
    over_pm1 += phi / ld(p - 1);
    over_ppm1 += phi / (ld(p) * ld(p - 1));
  }
  PhiOverPResult out;
  out.direct = direct.value();
  out.rearranged = over_pm1.value() - over_ppm1.value();
  out.identity_rel_error = out.direct != 0 ? std::fabs(out.direct - out.rearranged) / std::fabs(out.direct) : 0;
  const long double a0 = artin_product(product_bound).value;
  out.row = make_comparison("PHI_P", x, out.direct, x >= 2 ? a0 * log_integral(ld(x)) : 0);
  return out;
}

VerificationContext::VerificationContext(u64 max_x, VerificationConfig cfg)
    : cfg_(cfg),
      max_x_(max_x),
      table_(std::max<u64>({max_x, cfg.gamma_truncation, 2})),
      alpha_(artin_product(cfg.alpha_bound).value),
      gamma_u_(0),
      wieferich_(wieferich_scan(cfg.u, cfg.wieferich_limit, cfg.workers)),
      wief_product_(wieferich_product(wieferich_)) {
  gamma_u_ = gamma_estimate(cfg.u, cfg.gamma_truncation, alpha_).value;
}

const std::vector<u64>& VerificationContext::integers_with_root() {
  if (!integers_) {
    integers_ = std::move(*enum_integers_with_root(cfg_.u, max_x_, table_, {.workers = cfg_.workers}).members);
  }
  return *integers_;
}

const std::vector<u64>& VerificationContext::primes_with_root() {
  if (!primes_) primes_ = std::move(*enum_primes_with_root(cfg_.u, max_x_, {.workers = cfg_.workers}).members);
  return *primes_;
}

long double VerificationContext::exponent_const() const {
  return cfg_.empirical_exponent ? std::exp(gamma_u_ - kEulerGamma * alpha_) : 1.0L;
}

long double VerificationContext::kappa() const {
  return kappa_estimate(!cfg_.empirical_exponent, wieferich_, alpha_, gamma_u_).value;
}

std::vector<CountComparison> comparison_table(std::string_view formula_id, std::span<const u64> grid,
                                              VerificationContext& ctx) {
  if (std::find(std::begin(kFormulaIds), std::end(kFormulaIds), formula_id) == std::end(kFormulaIds)) {
    throw std::invalid_argument("comparison_table: unknown formula id '" + std::string(formula_id) + "'");
  }
  std::vector<CountComparison> rows;
  const std::string id(formula_id);
  for (u64 x : grid) {
    if (x > ctx.max_x()) throw std::invalid_argument("comparison_table: grid point exceeds context range");
    if (id == "N2") {
      rows.push_back(make_comparison(id, x, ld(count_up_to(ctx.integers_with_root(), x)),
                                     predict_N(ld(x), ctx.alpha(), ctx.exponent_const(), ctx.wief_product())));
    } else if (id == "N2_lower") {
      rows.push_back(make_comparison(id, x, ld(count_up_to(ctx.integers_with_root(), x)),
                                     predict_N_lower(ld(x), ctx.alpha())));
    } else if (id == "PI_U") {
      rows.push_back(make_comparison(id, x, ld(count_up_to(ctx.primes_with_root(), x)),
                                     predict_pi(ld(x), ctx.alpha())));
    } else if (id == "HARMONIC") {
      const long double predicted = ctx.kappa() * std::pow(std::log(ld(x)), ctx.alpha()) + ctx.gamma_u();
      rows.push_back(make_comparison(id, x, harmonic_sum_empirical(ctx.integers_with_root(), x), predicted));
    } else if (id == "MOMENT_K") {
      rows.push_back(totient_moment(ctx.config().moment_k, x, ctx.table(), ctx.config().product_bound));
    } else {
      rows.push_back(phi_over_p_sum(x, ctx.table(), ctx.config().product_bound).row);
    }
  }
  return rows;
}

}  // namespace artin
