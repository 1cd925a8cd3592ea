#include "artin/prchar.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "artin/roots_of_unity.hpp"
#include "artin/summation.hpp"

namespace artin {

namespace {

using cld = std::complex<long double>;

void check_psi_args(u64 u, u64 p) {
  if (p > kPsiPrimeLimit) throw SizeLimitError("psi: p exceeds " + std::to_string(kPsiPrimeLimit));
  if (u < 1 || u >= p) throw std::invalid_argument("psi: u must lie in [1, p-1]");
}

PsiValue finish(cld z, const char* route) {
  const long double rounded = std::round(z.real());
  const double residual = static_cast<double>(std::abs(z - cld(rounded, 0)));
  if (!(residual < kPsiResidualLimit) || (rounded != 0 && rounded != 1)) {
    throw Inconsistent(std::string(route) + ": evaluation " + std::to_string(static_cast<double>(z.real())) +
                       " is not within tolerance of 0 or 1");
  }
  return {static_cast<int>(rounded), residual};
}

}  // namespace

int char_prime_power(i64 u, u64 p, unsigned k) {
  if (k < 1) throw std::invalid_argument("char_prime_power: k must be >= 1");
  const PrimePower pe{p, k};
  const auto f = FactoredInteger::from_factors({&pe, 1});
  const auto ord = mult_order(u, f);
  if (!ord) throw NotCoprime("char_prime_power: gcd(u, p^k) > 1");
  return *ord == carmichael_lambda(p, k) ? 1 : 0;
}

bool is_primitive_root_mod_n(i64 u, const FactoredInteger& f) {
  const u64 n = f.value();
  if (n == 1) return true;
  const u64 r = reduce(u, n);
  if (std::gcd(r, n) != 1) return false;
  const u64 lambda = carmichael_lambda(f);
  return has_order_exactly(r, n, lambda, factorize(lambda));
}

bool is_primitive_root_by_composition(i64 u, const FactoredInteger& f) {
  u64 order = 1;
  u64 lambda = 1;
  for (const auto& pe : f.factors()) {
    const auto part = FactoredInteger::from_factors({&pe, 1});
    const auto ord = mult_order(u, part);
    if (!ord) return false;
    order = lcm(order, *ord);
    lambda = lcm(lambda, carmichael_lambda(pe.p, pe.e));
  }
  return order == lambda;
}

bool primitive_on_every_prime_power(i64 u, const FactoredInteger& f) {
  for (const auto& pe : f.factors()) {
    if (reduce(u, pe.p) == 0) return false;
    if (!char_prime_power(u, pe.p, pe.e)) return false;
  }
  return true;
}

u64 find_primitive_root(u64 p) {
  if (p < 2) throw std::invalid_argument("find_primitive_root: p must be >= 2");
  if (p == 2) return 1;
  const u64 q = p - 1;
  const auto qf = factorize(q);
  for (u64 g = 2; g < p; ++g) {
    if (has_order_exactly(g, p, q, qf)) return g;
  }
  throw std::invalid_argument("find_primitive_root: p is not prime");
}

DlogTable build_dlog(u64 p) {
  if (p > kDlogPrimeLimit) throw SizeLimitError("build_dlog: p exceeds " + std::to_string(kDlogPrimeLimit));
  if (!is_prime(p)) throw std::invalid_argument("build_dlog: p must be prime");
  DlogTable t;
  t.p_ = p;
  t.tau_ = find_primitive_root(p);
  t.log_.assign(p, 0);
  t.exp_.assign(p - 1, 0);
  u64 x = 1;
  for (u64 v = 0; v < p - 1; ++v) {
    t.log_[x] = static_cast<std::uint32_t>(v);
    t.exp_[v] = static_cast<std::uint32_t>(x);
    x = x * t.tau_ % p;
  }
  return t;
}

PsiValue psi_divisor(u64 u, u64 p) {
  check_psi_args(u, p);
  return psi_divisor(u, build_dlog(p));
}

PsiValue psi_divisor(u64 u, const DlogTable& table) {
  const u64 p = table.p();
  check_psi_args(u, p);
  const u64 q = p - 1;
  const auto qf = factorize(q);

  // mu(d)/phi(d) for the squarefree divisors d of q; other divisors have mu = 0.
  std::unordered_map<u64, long double> coef;
  const auto primes = qf.factors();
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    u64 d = 1, phi = 1;
    int sign = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1) {
        d *= primes[i].p;
        phi *= primes[i].p - 1;
        sign = -sign;
      }
    }
    coef[d] = static_cast<long double>(sign) / static_cast<long double>(phi);
  }

  const RootsOfUnity root(q);
  const u64 log_u = table.log(u);
  CompensatedComplexSum<long double> sum;
  for (u64 j = 0; j < q; ++j) {
    const u64 d = q / std::gcd(j, q);
    const auto it = coef.find(d);
    if (it == coef.end()) continue;
    sum += it->second * root(static_cast<u64>((static_cast<u128>(j) * log_u) % q));
  }
  const long double scale = static_cast<long double>(euler_phi(qf)) / static_cast<long double>(q);
  return finish(scale * sum.value(), "psi_divisor");
}

PsiValue psi_divisor_free_mult(u64 u, u64 p) {
  check_psi_args(u, p);
  return psi_divisor_free_mult(u, build_dlog(p));
}

PsiValue psi_divisor_free_mult(u64 u, const DlogTable& table) {
  const u64 p = table.p();
  check_psi_args(u, p);
  const u64 q = p - 1;
  const RootsOfUnity root(q);
  // log(tau^n * u^{-1}) = n - log u, so chi((tau^n u^{-1})^k) = e^{2 pi i k (n - log u) / q}.
  const u64 log_u = table.log(u);
  CompensatedComplexSum<long double> outer;
  for (u64 n = 1; n <= q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    const u64 step = (n + q - log_u) % q;
    CompensatedComplexSum<long double> inner;
    u64 idx = 0;
    for (u64 k = 0; k < q; ++k) {
      inner += root(idx);
      idx += step;
      if (idx >= q) idx -= q;
    }
    outer += inner.value() / static_cast<long double>(q);
  }
  return finish(outer.value(), "psi_divisor_free_mult");
}

PsiValue psi_divisor_free_add(u64 u, u64 p) {
  check_psi_args(u, p);
  return psi_divisor_free_add(u, build_dlog(p));
}

PsiValue psi_divisor_free_add(u64 u, const DlogTable& table) {
  const u64 p = table.p();
  check_psi_args(u, p);
  const u64 q = p - 1;
  const RootsOfUnity root(p);
  CompensatedComplexSum<long double> outer;
  for (u64 n = 1; n <= q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    const u64 step = (table.exp(n) + p - u) % p;
    CompensatedComplexSum<long double> inner;
    u64 idx = 0;
    for (u64 k = 0; k < p; ++k) {
      inner += root(idx);
      idx += step;
      if (idx >= p) idx -= p;
    }
    outer += inner.value() / static_cast<long double>(p);
  }
  return finish(outer.value(), "psi_divisor_free_add");
}

int psi_divisor_free_add_exact(u64 u, const DlogTable& table) {
  const u64 p = table.p();
  if (u < 1 || u >= p) throw std::invalid_argument("psi: u must lie in [1, p-1]");
  const u64 q = p - 1;
  int hits = 0;
  for (u64 n = 1; n <= q; ++n) {
    if (std::gcd(n, q) == 1 && table.exp(n) == u) ++hits;
  }
  return hits;
}

}  // namespace artin
