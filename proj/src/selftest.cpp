#include "artin/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "artin/asympt.hpp"
#include "artin/census.hpp"
#include "artin/constants.hpp"
#include "artin/expsum.hpp"
#include "artin/prchar.hpp"
#include "artin/roots_of_unity.hpp"
#include "artin/summation.hpp"

namespace artin {

namespace {

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  os.precision(12);
  (os << ... << args);
  return os.str();
}

std::vector<u64> prime_powers_up_to(u64 limit) {
  std::vector<u64> out;
  for (u64 p : simple_prime_list(limit)) {
    for (u64 q = p; q <= limit; q *= p) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// n in {1, 2, 4, p^m, 2 p^m} with p odd: the moduli with a cyclic unit group.
bool has_cyclic_units(const FactoredInteger& f) {
  const u64 n = f.value();
  if (n == 1 || n == 2 || n == 4) return true;
  const auto fs = f.factors();
  if (fs.size() == 1) return fs[0].p != 2;
  return fs.size() == 2 && fs[0].p == 2 && fs[0].e == 1;
}

// ---- arith -------------------------------------------------------------

std::string check_phi_gcd(bool& ok) {
  for (u64 n = 1; n <= 10'000; ++n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    if (count != euler_phi(factorize(n))) {
      ok = false;
      return cat("phi mismatch at n = ", n);
    }
  }
  ok = true;
  return "phi(n) = #{k <= n : gcd(k, n) = 1} for n <= 10^4";
}

std::string check_lambda_exponent(bool& ok) {
  std::mt19937_64 rng(20240611);
  u64 tested = 0;
  for (u64 n = 2; n <= 10'000; ++n) {
    const u64 lambda = carmichael_lambda(factorize(n));
    auto test = [&](u64 u) {
      if (std::gcd(u, n) != 1) return true;
      ++tested;
      return pow_mod(u, lambda, n) == 1;
    };
    bool good = true;
    if (n <= 2000) {
      for (u64 u = 1; u < n && good; ++u) good = test(u);
    } else {
      for (int i = 0; i < 64 && good; ++i) good = test(rng() % n);
    }
    if (!good) {
      ok = false;
      return cat("u^lambda(n) != 1 for some u at n = ", n);
    }
  }
  ok = true;
  return cat("u^lambda(n) = 1 mod n on ", tested, " coprime pairs (all u for n <= 2000, 64 sampled above)");
}

std::string check_lambda_divides_phi(bool& ok) {
  const SpfTable table(1'000'000);
  u64 equal = 0;
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const auto f = table.factor(n);
    const u64 phi = euler_phi(f), lambda = carmichael_lambda(f);
    if (phi % lambda != 0 || (phi == lambda) != has_cyclic_units(f)) {
      ok = false;
      return cat("lambda/phi relation fails at n = ", n);
    }
    equal += phi == lambda;
  }
  ok = true;
  return cat("lambda | phi on [1, 10^6]; equality exactly on {1,2,4,p^m,2p^m} (", equal, " such n)");
}

std::string check_order_properties(bool& ok) {
  std::mt19937_64 rng(7);
  u64 tested = 0;
  for (u64 n = 2; n <= 10'000; ++n) {
    const auto f = factorize(n);
    const u64 lambda = carmichael_lambda(f);
    for (int i = 0; i < 16; ++i) {
      const i64 u = static_cast<i64>(rng() % (3 * n)) - static_cast<i64>(n);
      const auto ord = mult_order(u, f);
      const u64 r = reduce(u, n);
      if (!ord) {
        if (std::gcd(r, n) == 1) {
          ok = false;
          return cat("order missing for coprime u = ", u, " n = ", n);
        }
        continue;
      }
      ++tested;
      bool good = lambda % *ord == 0 && pow_mod(r, *ord, n) == 1;
      for (const auto& pe : factorize(*ord).factors()) good = good && pow_mod(r, *ord / pe.p, n) != 1;
      if (!good) {
        ok = false;
        return cat("order property fails for u = ", u, " n = ", n);
      }
    }
  }
  ok = true;
  return cat("ord | lambda, u^ord = 1, u^(ord/q) != 1 on ", tested, " sampled pairs, n <= 10^4");
}

std::string check_factor_reconstruction(bool& ok) {
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const auto f = factorize(n);
    u64 prod = 1;
    u64 prev = 0;
    for (const auto& [p, e] : f.factors()) {
      if (p <= prev || e == 0 || !is_prime(p)) {
        ok = false;
        return cat("non-canonical factorization at n = ", n);
      }
      prev = p;
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    if (prod != n || f.value() != n) {
      ok = false;
      return cat("reconstruction fails at n = ", n);
    }
  }
  ok = true;
  return "factorize reconstructs every n in [1, 10^6] canonically";
}

std::string check_spf_primes(bool& ok) {
  const SpfTable table(1'000'000);
  u64 fixed = 0;
  for (u64 i = 2; i <= 1'000'000; ++i) fixed += table.spf(i) == i;
  const u64 sieve = simple_prime_list(1'000'000).size();
  ok = fixed == sieve && fixed == 78'498;
  return cat("spf fixed points ", fixed, ", Eratosthenes count ", sieve);
}

// ---- prchar ------------------------------------------------------------

std::string check_psi_sweep(bool& ok) {
  const auto r = psi_equivalence_sweep(200);
  ok = r.mismatches == 0 && r.max_residual < kPsiResidualLimit;
  return cat(r.pairs_checked, " pairs over ", r.primes_checked, " primes, mismatches ", r.mismatches,
             ", max residual ", r.max_residual, r.first_mismatch.empty() ? "" : ", first: " + r.first_mismatch);
}

std::string check_vanishing_rule(bool& ok) {
  u64 checks = 0;
  for (u64 p : simple_prime_list(199)) {
    if (p <= 3) continue;
    const auto table = build_dlog(p);
    std::set<u64> squares;
    for (u64 v = 1; v < p; ++v) squares.insert(v * v % p);
    squares.insert(p - 1);
    for (u64 s : squares) {
      ++checks;
      if (psi_divisor(s, table).value != 0 || psi_divisor_free_mult(s, table).value != 0 ||
          psi_divisor_free_add(s, table).value != 0) {
        ok = false;
        return cat("Psi(", s, ") != 0 mod ", p);
      }
    }
  }
  ok = true;
  return cat("Psi vanishes on -1 and every square, ", checks, " evaluations, 3 < p < 200");
}

std::string check_multiplicativity(bool& ok) {
  const auto powers = prime_powers_up_to(100);
  u64 pairs = 0, converse_failures = 0;
  for (i64 u : {2, 3, 5, 6, 7, -3, 10}) {
    for (std::size_t i = 0; i < powers.size(); ++i) {
      for (std::size_t j = i + 1; j < powers.size(); ++j) {
        const u64 a = powers[i], b = powers[j];
        if (std::gcd(a, b) != 1) continue;
        const u64 n = a * b;
        if (std::gcd(reduce(u, n), n) != 1) continue;
        const auto fa = factorize(a), fb = factorize(b), fn = factorize(n);
        ++pairs;
        const u64 la = carmichael_lambda(fa), lb = carmichael_lambda(fb);
        const bool direct = is_primitive_root_mod_n(u, fn);
        const bool both = is_primitive_root_mod_n(u, fa) && is_primitive_root_mod_n(u, fb);
        if (lcm(la, lb) != carmichael_lambda(fn) || direct != is_primitive_root_by_composition(u, fn) ||
            (both && !direct)) {
          ok = false;
          return cat("multiplicativity fails for u = ", u, " at ", a, " * ", b);
        }
        converse_failures += direct && !both;
      }
    }
  }
  ok = true;
  return cat(pairs, " coprime prime-power pairs: f(a)f(b) = 1 implies primitive mod ab, lambda(ab) = lcm; ",
             converse_failures, " pairs primitive mod ab without f(a)f(b) = 1");
}

// ---- census ------------------------------------------------------------

std::string check_census_composition(bool& ok) {
  constexpr u64 kX = 100'000;
  const SpfTable table(kX);
  const auto census = enum_integers_with_root(2, kX, table);
  std::vector<u64> composed;
  u64 only_in_a = 0, outside_a = 0, odd_violations = 0;
  for (u64 n = 2; n <= kX; ++n) {
    const auto f = table.factor(n);
    const bool by_composition = is_primitive_root_by_composition(2, f);
    if (by_composition) composed.push_back(n);
    const bool in_a = primitive_on_every_prime_power(2, f);
    if (in_a && !by_composition) ++only_in_a;
    if (by_composition && !in_a) ++outside_a;
  }
  for (u64 n : *census.members) odd_violations += n % 2 == 0;
  ok = composed == *census.members && only_in_a == 0 && odd_violations == 0;
  return cat("N_2(10^5) = ", census.count, " by direct order test and by lcm composition; ", outside_a,
             " members have a prime-power factor without 2 as primitive root (e.g. 21); ", only_in_a,
             " prime-power-primitive n missing; even members ", odd_violations);
}

std::string check_census_membership_grid(bool& ok) {
  constexpr u64 kX = 100'000;
  const SpfTable table(kX);
  u64 prev = 0;
  std::string counts;
  for (u64 x : {10u, 100u, 1000u, 10'000u, 100'000u}) {
    const u64 c = enum_integers_with_root(2, x, table, {.keep_members = false}).count;
    if (c < prev) {
      ok = false;
      return cat("N_2 count decreased at x = ", x);
    }
    prev = c;
    counts += cat(counts.empty() ? "" : ",", c);
  }
  ok = true;
  return "N_2 counts nondecreasing over decades: " + counts;
}

std::string check_wset_identity(bool& ok) {
  std::string detail;
  ok = true;
  for (auto [u, limit] : {std::pair<i64, u64>{2, 1'000'000}, {5, 100'000}, {3, 100'000}}) {
    const auto wset = wset_scan(u, limit);
    const auto wief = wieferich_scan(u, limit);
    std::vector<u64> expected;
    for (u64 p : wief) {
      const PrimePower pe{p, 1};
      const auto ord = mult_order(u, FactoredInteger::from_factors({&pe, 1}));
      if (ord && *ord == p - 1) expected.push_back(p);
    }
    std::vector<u64> got;
    for (const auto& h : wset) got.push_back(h.p);
    ok = ok && got == expected;
    detail += cat(detail.empty() ? "" : "; ", "u=", u, " limit=", limit, " |W|=", got.size(), " |Wieferich|=", wief.size());
  }
  return "wset = Wieferich ∩ P_u: " + detail;
}

// ---- constants -----------------------------------------------------------

std::string check_artin_monotone(bool& ok) {
  long double prev = 1;
  for (u64 b : {2u, 10u, 100u, 1000u, 10'000u, 100'000u}) {
    const long double v = artin_product(b).value;
    if (!(v < prev) || (b >= 100 && v < 0.37L)) {
      ok = false;
      return cat("artin_product not decreasing / below 0.37 at bound ", b);
    }
    prev = v;
  }
  ok = true;
  return "artin_product strictly decreasing, >= 0.37 for bound >= 100";
}

std::string check_tail_self_consistency(bool& ok) {
  const long double alpha = artin_product(10'000'000).value;
  const auto primes = *enum_primes_with_root(2, 2000).members;
  const auto b1 = beta_estimate(primes, 1000, alpha), b2 = beta_estimate(primes, 2000, alpha);
  const auto g1 = gamma_estimate(primes, 1000, alpha), g2 = gamma_estimate(primes, 2000, alpha);
  const auto n1 = nu_estimate(primes, 1000), n2 = nu_estimate(primes, 2000);
  const long double db = std::fabs(b2.value - b1.value), dg = std::fabs(g2.value - g1.value),
                    dn = std::fabs(n2.value - n1.value);
  ok = db < *b1.tail_bound && dg < *g1.tail_bound && dn < *n1.tail_bound;
  return cat("doubling 10^3 -> 2*10^3: |dbeta| ", static_cast<double>(db), " < ", static_cast<double>(*b1.tail_bound),
             ", |dgamma| ", static_cast<double>(dg), " < ", static_cast<double>(*g1.tail_bound), ", |dnu| ",
             static_cast<double>(dn), " < ", static_cast<double>(*n1.tail_bound));
}

std::string check_gamma_recurrence(bool& ok) {
  double worst = 0;
  for (int i = 1; i <= 30; ++i) {
    const long double s = i / 10.0L;
    const long double rel = std::fabs(gamma_function(s + 1) - s * gamma_function(s)) / gamma_function(s + 1);
    worst = std::max(worst, static_cast<double>(rel));
  }
  ok = worst < 1e-10;
  return cat("max relative |Gamma(s+1) - s Gamma(s)| over s = 0.1..3.0: ", worst);
}

std::string check_li_derivative(bool& ok) {
  double worst = 0;
  for (long double x : {100.0L, 10'000.0L}) {
    const long double h = 1e-3L * x;
    const long double slope = (log_integral(x + h) - log_integral(x)) / h;
    // The forward difference carries an O(h/x) bias; compare against the midpoint derivative.
    const long double target = 1 / std::log(x + h / 2);
    worst = std::max(worst, static_cast<double>(std::fabs(slope - target)));
  }
  ok = worst < 1e-6;
  return cat("max |(li(x+h)-li(x))/h - 1/log(x+h/2)| at x = 10^2, 10^4: ", worst);
}

std::string check_mertens_identity(bool& ok) {
  const auto primes = *enum_primes_with_root(2, 100'000).members;
  double worst = 0;
  for (u64 x : {3u, 100u, 10'000u, 100'000u}) {
    const auto m = mertens_products(primes, x, {0.3739558136L, 0.4249022734L, 0.0L});
    const long double rel = std::fabs(m.lhs[1] - m.lhs[0] * m.square_product) / m.lhs[1];
    worst = std::max(worst, static_cast<double>(rel));
  }
  ok = worst < 1e-12;
  return cat("max relative |LHS(ii) - LHS(i) prod(1 - p^-2)|: ", worst);
}

// ---- asympt --------------------------------------------------------------

std::string check_asympt(bool& ok, unsigned workers) {
  VerificationContext ctx(1'000'000, {.workers = workers});
  VerificationContext empirical(1'000'000, {.workers = workers, .empirical_exponent = true});
  std::string detail;
  ok = true;
  for (long double x = 3; x <= 1e12L; x *= 7) {
    for (auto* c : {&ctx, &empirical}) {
      if (predict_N_lower(x, c->alpha()) > predict_N(x, c->alpha(), c->exponent_const(), c->wief_product())) {
        ok = false;
        return cat("lower bound exceeds prediction at x = ", static_cast<double>(x));
      }
    }
  }
  const std::vector<u64> grid = {1000, 3000, 10'000, 30'000, 100'000, 300'000, 1'000'000};
  for (const char* id : {"N2", "PI_U", "HARMONIC"}) {
    const auto rows = comparison_table(id, grid, ctx);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].empirical < rows[i - 1].empirical) {
        ok = false;
        return cat(id, " empirical value decreased at x = ", rows[i].x);
      }
    }
  }
  double worst = 0;
  for (u64 x : grid) worst = std::max(worst, static_cast<double>(phi_over_p_sum(x, ctx.table()).identity_rel_error));
  if (worst > 1e-12) ok = false;
  const auto density = prime_density_grid(2, {100'000, 1'000'000}, workers);
  for (const auto& row : density) {
    if (row.ratio < 0.36 || row.ratio > 0.39) ok = false;
  }
  return cat("lower <= predict_N on x = 3*7^k; N2, PI_U, HARMONIC monotone; rearrangement error ", worst,
             "; pi_2/pi at 10^5, 10^6 = ", density[0].ratio, ", ", density[1].ratio);
}

// ---- expsum --------------------------------------------------------------

std::string check_full_additive(bool& ok) {
  std::mt19937_64 rng(99);
  double worst = 0;
  u64 evaluations = 0;
  for (u64 p : simple_prime_list(9999)) {
    std::vector<i64> us = {0, 1, 2, static_cast<i64>(p - 1), static_cast<i64>(p), -1,
                           static_cast<i64>(rng() % (4 * p))};
    for (i64 u : us) {
      const auto s = full_additive_sum(u, p);
      const bool zero = reduce(u, p) == 0;
      const double full = zero ? static_cast<double>(p) : 0.0;
      const double punct = zero ? static_cast<double>(p - 1) : -1.0;
      worst = std::max({worst, std::abs(s.full.value - std::complex<double>(full, 0)),
                        std::abs(s.punctured.value - std::complex<double>(punct, 0)),
                        std::abs(s.full.value.imag())});
      ++evaluations;
    }
  }
  ok = worst < 1e-9;
  return cat(evaluations, " full/punctured additive sums over p < 10^4, max deviation ", worst);
}

std::string check_v_sum_multiset(bool& ok) {
  for (u64 p : simple_prime_list(499)) {
    const u64 tau = find_primitive_root(p);
    std::multiset<u64> from_tau;
    u64 power = 1;
    for (u64 n = 1; n <= p - 1; ++n) {
      power = power * tau % p;
      if (std::gcd(n, p - 1) == 1) from_tau.insert(power);
    }
    std::multiset<u64> by_order;
    const auto qf = factorize(p - 1);
    for (u64 g = 1; g < p; ++g)
      if (has_order_exactly(g, p, p - 1, qf)) by_order.insert(g);
    if (from_tau != by_order) {
      ok = false;
      return cat("multiset mismatch at p = ", p);
    }
    for (i64 k : {1, 2, 3}) {
      const auto v = v_sum(p, k);
      CompensatedComplexSum<long double> direct;
      const RootsOfUnity root(p);
      for (u64 g : by_order) direct += root(reduce(k, p) * g % p);
      if (std::abs(std::complex<double>(static_cast<double>(direct.value().real()),
                                        static_cast<double>(direct.value().imag())) - v.value) > 1e-9 ||
          v.modulus > static_cast<double>(euler_phi(qf)) + 1e-9) {
        ok = false;
        return cat("v_sum disagrees with primitive-root sum at p = ", p, " k = ", k);
      }
    }
  }
  ok = true;
  return "{tau^n : gcd(n, p-1) = 1} = primitive roots for p < 500; v_sum matches and is <= phi(p-1)";
}

std::string check_theta_subgroups(bool& ok) {
  double worst = 0;
  u64 sums = 0;
  for (u64 p : simple_prime_list(199)) {
    if (p < 3) continue;
    const RootsOfUnity root(p);
    for (u64 theta = 2; theta < p; ++theta) {
      const PrimePower pe{p, 1};
      const u64 t = *mult_order(static_cast<i64>(theta), FactoredInteger::from_factors({&pe, 1}));
      for (i64 a : {i64{1}, i64{2}, static_cast<i64>(p - 1)}) {
        const auto s = theta_power_sum(theta, t, a, p);
        // Oracle: the subgroup of order t is {x : x^t = 1}, enumerated by testing all residues.
        CompensatedComplexSum<long double> exact;
        for (u64 x = 1; x < p; ++x)
          if (pow_mod(x, t, p) == 1) exact += root(static_cast<u64>(a) % p * x % p);
        const std::complex<double> e(static_cast<double>(exact.value().real()), static_cast<double>(exact.value().imag()));
        double dev = std::abs(s.value - e);
        if (t == p - 1) dev = std::max(dev, std::abs(s.value - std::complex<double>(-1, 0)));
        if (s.modulus > static_cast<double>(t) + 1e-9) dev = 1;
        worst = std::max(worst, dev);
        ++sums;
      }
    }
  }
  ok = worst < 1e-9;
  return cat(sums, " full-subgroup theta sums, max deviation from subgroup oracle ", worst);
}

std::string check_bound_table(bool& ok) {
  const auto t = bound_table(1000);
  const u64 expected_rows = simple_prime_list(2000).size() - simple_prime_list(999).size();
  ok = t.rows.size() == expected_rows && t.envelope > 0;
  for (const auto& row : t.rows) ok = ok && row.max_modulus <= static_cast<double>(row.phi_bound) + 1e-9;
  return cat(t.rows.size(), " rows in [10^3, 2*10^3], sum max|V_p|/p = ", t.normalized_sum, ", envelope ", t.envelope);
}

}  // namespace

PsiSweepResult psi_equivalence_sweep(u64 bound) {
  PsiSweepResult r;
  for (u64 p : simple_prime_list(bound - 1)) {
    ++r.primes_checked;
    const auto table = build_dlog(p);
    const PrimePower pe{p, 1};
    const auto fp = FactoredInteger::from_factors({&pe, 1});
    for (u64 u = 1; u < p; ++u) {
      ++r.pairs_checked;
      const int oracle = *mult_order(static_cast<i64>(u), fp) == p - 1 ? 1 : 0;
      const auto d = psi_divisor(u, table);
      const auto m = psi_divisor_free_mult(u, table);
      const auto a = psi_divisor_free_add(u, table);
      const int exact = psi_divisor_free_add_exact(u, table);
      r.max_residual = std::max({r.max_residual, d.residual, m.residual, a.residual});
      if (d.value != oracle || m.value != oracle || a.value != oracle || exact != oracle) {
        if (r.mismatches++ == 0) r.first_mismatch = cat("u = ", u, " p = ", p);
      }
    }
  }
  return r;
}

CheckResult run_check(std::string module, std::string name, const std::function<std::string(bool&)>& body) {
  CheckResult res{std::move(module), std::move(name), false, "", 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    res.detail = body(res.passed);
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CheckResult> run_selftest(const SelfTestOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(run_check("arith", "phi_gcd_oracle", check_phi_gcd));
  out.push_back(run_check("arith", "lambda_exponent", check_lambda_exponent));
  out.push_back(run_check("arith", "lambda_divides_phi", check_lambda_divides_phi));
  out.push_back(run_check("arith", "order_properties", check_order_properties));
  out.push_back(run_check("arith", "factor_reconstruction", check_factor_reconstruction));
  out.push_back(run_check("arith", "spf_prime_count", check_spf_primes));
  out.push_back(run_check("prchar", "psi_equivalence", check_psi_sweep));
  out.push_back(run_check("prchar", "vanishing_rule", check_vanishing_rule));
  out.push_back(run_check("prchar", "multiplicativity", check_multiplicativity));
  out.push_back(run_check("census", "direct_vs_composition", check_census_composition));
  out.push_back(run_check("census", "monotone_counts", check_census_membership_grid));
  out.push_back(run_check("census", "wset_identity", check_wset_identity));
  out.push_back(run_check("constants", "artin_monotone", check_artin_monotone));
  out.push_back(run_check("constants", "tail_self_consistency", check_tail_self_consistency));
  out.push_back(run_check("constants", "gamma_recurrence", check_gamma_recurrence));
  out.push_back(run_check("constants", "li_derivative", check_li_derivative));
  out.push_back(run_check("constants", "mertens_identity", check_mertens_identity));
  out.push_back(run_check("asympt", "predictions_and_monotonicity",
                          [&](bool& ok) { return check_asympt(ok, opts.workers); }));
  out.push_back(run_check("expsum", "full_additive", check_full_additive));
  out.push_back(run_check("expsum", "v_sum_multiset", check_v_sum_multiset));
  out.push_back(run_check("expsum", "theta_subgroups", check_theta_subgroups));
  out.push_back(run_check("expsum", "bound_table", check_bound_table));
  return out;
}

}  // namespace artin
