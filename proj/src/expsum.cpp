#include "artin/expsum.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "artin/prchar.hpp"
#include "artin/roots_of_unity.hpp"
#include "artin/summation.hpp"

namespace artin {

namespace {

ExpSumStat make_stat(u64 p, ExpSumKind kind, i64 param, std::complex<long double> z) {
  const std::complex<double> v(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  return {p, kind, param, v, std::abs(v)};
}

void require_prime(u64 p, const char* what) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(what) + ": p must be prime");
}

u64 mulmod_small(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

}  // namespace

std::string_view to_string(ExpSumKind kind) {
  switch (kind) {
    case ExpSumKind::FullAdditive: return "FullAdditive";
    case ExpSumKind::U: return "U";
    case ExpSumKind::V: return "V";
    case ExpSumKind::ThetaPower: return "ThetaPower";
    case ExpSumKind::ExactOrderCharacter: return "ExactOrderCharacter";
  }
  return "?";
}

AdditiveSums full_additive_sum(i64 u, u64 p) {
  require_prime(p, "full_additive_sum");
  const RootsOfUnity root(p);
  const u64 r = reduce(u, p);
  CompensatedComplexSum<long double> full, punctured;
  full += root(0);
  u64 idx = 0;
  for (u64 k = 1; k < p; ++k) {
    idx = (idx + r) % p;
    full += root(idx);
    punctured += root(idx);
  }
  return {make_stat(p, ExpSumKind::FullAdditive, u, full.value()),
          make_stat(p, ExpSumKind::FullAdditive, u, punctured.value())};
}

ExpSumStat u_sum(i64 u, u64 p) {
  require_prime(p, "u_sum");
  const RootsOfUnity root(p);
  const u64 neg = (p - reduce(u, p)) % p;
  CompensatedComplexSum<long double> sum;
  u64 idx = 0;
  for (u64 k = 1; k < p; ++k) {
    idx = (idx + neg) % p;
    sum += root(idx);
  }
  return make_stat(p, ExpSumKind::U, u, sum.value());
}

ExpSumStat v_sum(u64 p, i64 k) {
  if (p > kDlogPrimeLimit) throw SizeLimitError("v_sum: p exceeds " + std::to_string(kDlogPrimeLimit));
  require_prime(p, "v_sum");
  const u64 tau = find_primitive_root(p);
  const u64 q = p - 1;
  const u64 kr = reduce(k, p);
  const RootsOfUnity root(p);
  CompensatedComplexSum<long double> sum;
  u64 power = 1;
  for (u64 n = 1; n <= q; ++n) {
    power = mulmod_small(power, tau, p);
    if (std::gcd(n, q) == 1) sum += root(mulmod_small(kr, power, p));
  }
  return make_stat(p, ExpSumKind::V, k, sum.value());
}

std::complex<double> normalized(const ExpSumStat& v, VNormalization norm) {
  switch (norm) {
    case VNormalization::None: return v.value;
    case VNormalization::InvP: return v.value / static_cast<double>(v.p);
    case VNormalization::InvSqrtP: return v.value / std::sqrt(static_cast<double>(v.p));
  }
  return v.value;
}

ExpSumStat theta_power_sum(u64 theta, u64 t, i64 a, u64 p) {
  require_prime(p, "theta_power_sum");
  if (t < 1) throw std::invalid_argument("theta_power_sum: t must be >= 1");
  PrimePower pe{p, 1};
  const auto ord = mult_order(static_cast<i64>(theta % p), FactoredInteger::from_factors({&pe, 1}));
  if (!ord || *ord < t) throw std::invalid_argument("theta_power_sum: ord_p(theta) < t");
  const RootsOfUnity root(p);
  const u64 ar = reduce(a, p);
  CompensatedComplexSum<long double> sum;
  u64 power = 1;
  for (u64 m = 1; m <= t; ++m) {
    power = mulmod_small(power, theta % p, p);
    sum += root(mulmod_small(ar, power, p));
  }
  return make_stat(p, ExpSumKind::ThetaPower, a, sum.value());
}

BoundTable bound_table(u64 x, unsigned samples) {
  if (x < 3) throw std::invalid_argument("bound_table: x must be >= 3");
  if (2 * x > kDlogPrimeLimit) throw SizeLimitError("bound_table: 2x exceeds " + std::to_string(kDlogPrimeLimit));
  BoundTable table;
  table.x = x;
  const double lx = std::log(static_cast<double>(x));
  table.envelope = static_cast<double>(x) / (std::log(lx) * lx);
  for (u64 p : simple_prime_list(2 * x)) {
    if (p < x) continue;
    const u64 q = p - 1;
    const u64 tau = find_primitive_root(p);
    std::vector<u64> generators;
    u64 power = 1;
    for (u64 n = 1; n <= q; ++n) {
      power = mulmod_small(power, tau, p);
      if (std::gcd(n, q) == 1) generators.push_back(power);
    }
    const RootsOfUnity root(p);
    double best = 0;
    for (u64 k = 1; k <= std::min<u64>(q, samples); ++k) {
      CompensatedComplexSum<long double> sum;
      for (u64 g : generators) sum += root(k * g % p);
      best = std::max(best, static_cast<double>(std::abs(sum.value())));
    }
    const double lp = std::log(static_cast<double>(p));
    table.rows.push_back({p, best, generators.size(), static_cast<double>(p) / std::log(lp)});
    table.normalized_sum += best / static_cast<double>(p);
  }
  return table;
}

ExactOrderResult exact_order_character_sum(i64 u, u64 q) {
  if (q > kPsiPrimeLimit) throw SizeLimitError("exact_order_character_sum: q exceeds " + std::to_string(kPsiPrimeLimit));
  require_prime(q, "exact_order_character_sum");
  const u64 m = q - 1;
  const u64 r = reduce(u, q);
  CompensatedComplexSum<long double> sum;
  if (r != 0) {
    const auto table = build_dlog(q);
    const RootsOfUnity root(m);
    const u64 log_u = table.log(r);
    for (u64 j = 0; j < m; ++j) {
      if (std::gcd(j, m) == 1) sum += root(j * log_u % m);
    }
  }
  ExactOrderResult out;
  out.stat = make_stat(q, ExpSumKind::ExactOrderCharacter, u, sum.value());
  out.claimed = r == 1 ? static_cast<double>(m) : -1.0;
  out.discrepancy = std::abs(out.stat.value - std::complex<double>(out.claimed, 0)) > 1e-9;
  return out;
}

}  // namespace artin
