#include "artin/constants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "artin/census.hpp"
#include "artin/summation.hpp"

namespace artin {

namespace {

std::vector<u64> primes_with_root_up_to(i64 u, u64 x) {
  auto res = enum_primes_with_root(u, x, {.workers = 0, .keep_members = true});
  return std::move(*res.members);
}

// Members of a sorted list that are <= x.
std::span<const u64> prefix_up_to(std::span<const u64> sorted, u64 x) {
  return sorted.first(static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin()));
}

long double ld(u64 v) { return static_cast<long double>(v); }

std::string at_x(u64 x) { return "p <= " + std::to_string(x) + ", log terms evaluated at x = " + std::to_string(x); }

}  // namespace

ConstantEstimate artin_product(u64 bound) {
  if (bound < 2) throw std::invalid_argument("artin_product: bound must be >= 2");
  long double prod = 1;
  for (u64 p : simple_prime_list(bound)) prod *= 1.0L - 1.0L / (ld(p) * ld(p - 1));
  const long double b = ld(bound);
  return {"alpha", prod, bound, prod / (b * std::log(b)), "prod over p <= " + std::to_string(bound)};
}

ConstantEstimate beta_estimate(std::span<const u64> primes_with_root, u64 x, long double alpha) {
  if (x < 3) throw std::invalid_argument("beta_estimate: x must be >= 3");
  CompensatedSum<> sum;
  for (u64 p : prefix_up_to(primes_with_root, x)) sum += 1.0L / ld(p);
  const long double lx = std::log(ld(x));
  const long double tail = 2 * std::sqrt(alpha * (1 - alpha) / (ld(x) * lx));
  return {"beta", sum.value() - alpha * std::log(lx), x, tail, at_x(x)};
}

ConstantEstimate beta_estimate(i64 u, u64 x, long double alpha) {
  return beta_estimate(primes_with_root_up_to(u, x), x, alpha);
}

ConstantEstimate gamma_estimate(std::span<const u64> primes_with_root, u64 x, long double alpha) {
  if (x < 3) throw std::invalid_argument("gamma_estimate: x must be >= 3");
  CompensatedSum<> sum;
  for (u64 p : prefix_up_to(primes_with_root, x)) sum += std::log(ld(p)) / ld(p - 1);
  const long double lx = std::log(ld(x));
  const long double tail = 2 * std::sqrt(alpha * (1 - alpha) * (lx + 1) / ld(x));
  return {"gamma_u", sum.value() - alpha * lx, x, tail, at_x(x)};
}

ConstantEstimate gamma_estimate(i64 u, u64 x, long double alpha) {
  return gamma_estimate(primes_with_root_up_to(u, x), x, alpha);
}

ConstantEstimate nu_estimate(std::span<const u64> primes_with_root, u64 x) {
  if (x < 3) throw std::invalid_argument("nu_estimate: x must be >= 3");
  CompensatedSum<> sum;
  const auto members = prefix_up_to(primes_with_root, x);
  for (u64 p : members) {
    const long double c = std::log(ld(p)) / ld(p - 1);
    if (c >= 1) throw DivergentTerm("nu_estimate: log p/(p-1) >= 1 at p = " + std::to_string(p));
    long double power = c;
    for (int k = 2;; ++k) {
      power *= c;
      const long double term = power / k;
      if (term < 1e-30L) break;
      sum += term;
    }
  }
  // Tail over p > x: density * sum_{p > x} (log p)^2/(2 p^2) ~ density (log x + 1)/(2x),
  // doubled; the density is the observed pi_u(x)/pi(x).
  const long double lx = std::log(ld(x));
  const long double density = ld(members.size()) / ld(simple_prime_list(x).size());
  const long double tail = 2 * density * (lx + 1) / (2 * ld(x));
  return {"nu", sum.value(), x, tail, "p <= " + std::to_string(x) + ", inner series to terms < 1e-30"};
}

ConstantEstimate nu_estimate(i64 u, u64 x) { return nu_estimate(primes_with_root_up_to(u, x), x); }

long double wieferich_product(std::span<const u64> primes) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  std::set<u64> seen;
  cpp_rational prod = 1;
  for (u64 p : primes) {
    if (!seen.insert(p).second) throw std::invalid_argument("wieferich_product: primes must be distinct");
    const cpp_int p2 = cpp_int(p) * p;
    prod *= cpp_rational(p2 - 1, p2);
  }
  return prod.convert_to<long double>();
}

ConstantEstimate kappa_estimate(bool assume_zero_exponent, std::span<const u64> wieferich_primes,
                                long double alpha, long double gamma_u) {
  const long double w = wieferich_product(wieferich_primes);
  const long double exponent = assume_zero_exponent ? 0.0L : gamma_u - kEulerGamma * alpha;
  ConstantEstimate est;
  est.name = assume_zero_exponent ? "kappa" : "kappa_empirical";
  est.value = std::exp(exponent) * w / gamma_function(alpha + 1);
  est.truncation = 2;
  est.convention = assume_zero_exponent ? "gamma_u - gamma*alpha taken as 0"
                                        : "gamma_u - gamma*alpha = " + std::to_string(static_cast<double>(exponent));
  return est;
}

ConstantEstimate kappa_estimate(bool assume_zero_exponent, std::span<const u64> wieferich_primes) {
  const auto alpha = artin_product(10'000'000);
  const auto gamma_u = gamma_estimate(2, 1000, alpha.value);
  auto est = kappa_estimate(assume_zero_exponent, wieferich_primes, alpha.value, gamma_u.value);
  est.truncation = alpha.truncation;
  return est;
}

long double gamma_function(long double s) {
  if (!(s > 0)) throw std::domain_error("gamma_function: s must be positive");
  return std::tgamma(s);
}

long double log_integral(long double x) {
  if (!(x >= 2)) throw std::domain_error("log_integral: x must be >= 2");
  if (x == 2) return 0;
  // z = e^t turns the integrand into e^t / t on [log 2, log x], smooth and positive.
  using boost::math::quadrature::gauss_kronrod;
  auto f = [](long double t) { return std::exp(t) / t; };
  return gauss_kronrod<long double, 31>::integrate(f, std::log(2.0L), std::log(x), 20, 1e-15L);
}

MertensProducts mertens_products(std::span<const u64> primes_with_root, u64 x, const MertensInputs& in) {
  if (x < 3) throw std::invalid_argument("mertens_products: x must be >= 3");
  MertensProducts out;
  out.lhs = {1, 1, 1};
  for (u64 p : prefix_up_to(primes_with_root, x)) {
    const long double inv = 1.0L / ld(p);
    const long double c = std::log(ld(p)) / ld(p - 1);
    if (1 - inv <= 0 || 1 - c <= 0) throw DivergentTerm("mertens_products: non-positive factor at p = " + std::to_string(p));
    out.lhs[0] /= 1 - inv;
    out.lhs[1] *= 1 + inv;
    out.lhs[2] /= 1 - c;
    out.square_product *= 1 - inv * inv;
  }
  const long double lx = std::log(ld(x));
  const long double power = std::pow(lx, in.alpha);
  out.rhs[0] = std::exp(in.gamma_u) * power;
  out.rhs[1] = std::exp(in.gamma_u) * out.square_product * power;
  out.rhs[2] = std::exp(in.nu_u - in.gamma_u) * std::pow(ld(x), in.alpha);
  return out;
}

MertensProducts mertens_products(i64 u, u64 x, const MertensInputs& in) {
  return mertens_products(primes_with_root_up_to(u, x), x, in);
}

ConstantEstimate totient_moment_product(int k, u64 bound) {
  if (k < 1) throw std::invalid_argument("totient_moment_product: k must be >= 1");
  if (bound < 2) throw std::invalid_argument("totient_moment_product: bound must be >= 2");
  long double prod = 1;
  for (u64 p : simple_prime_list(bound)) {
    const long double keep = std::pow(1.0L - 1.0L / ld(p), k);
    prod *= 1.0L - (1.0L - keep) / ld(p - 1);
  }
  const long double b = ld(bound);
  return {"moment_product_k" + std::to_string(k), prod, bound, k * prod / (b * std::log(b)),
          "prod over p <= " + std::to_string(bound)};
}

}  // namespace artin
