#include "artin/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "artin/parallel.hpp"

namespace artin {

namespace {

using Clock = std::chrono::steady_clock;

constexpr u64 kWieferichLimit = u64{1} << 32;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> base_primes_for(u64 hi) { return simple_prime_list(isqrt(hi) + 1); }

// Factorization of m by trial division; base must cover sqrt(m).
FactoredInteger factor_by_trial(u64 m, std::span<const std::uint32_t> base) {
  FactoredInteger f;
  for (u64 p : base) {
    if (p * p > m) break;
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.push_trusted(p, e);
  }
  if (m > 1) f.push_trusted(m, 1);
  return f;
}

bool prime_has_root(i64 u, u64 p, std::span<const std::uint32_t> base) {
  const u64 r = reduce(u, p);
  if (r == 0) return false;
  return has_order_exactly(r, p, p - 1, factor_by_trial(p - 1, base));
}

std::vector<u64> flatten(std::vector<std::vector<u64>>&& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  std::vector<u64> out;
  out.reserve(total);
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

bool is_admissible(i64 u) {
  if (u == 0 || u == 1 || u == -1) return false;
  if (u < 0) return true;
  const u64 r = isqrt(static_cast<u64>(u));
  return r * r != static_cast<u64>(u);
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::InN: return "InN";
    case Membership::InAOnly: return "InAOnly";
    case Membership::Neither: return "Neither";
  }
  return "?";
}

CensusResult enum_primes_with_root(i64 u, u64 x, ScanOptions opts) {
  const auto start = Clock::now();
  CensusResult res;
  res.u = u;
  res.x = x;
  res.admissible = is_admissible(u);
  const auto base = base_primes_for(x + 1);
  auto blocks = map_blocks(2, x + 1, opts.workers, [&](u64 lo, u64 hi) {
    std::vector<u64> hits;
    for (u64 p : primes_in_range(lo, hi, base))
      if (prime_has_root(u, p, base)) hits.push_back(p);
    return hits;
  });
  auto members = flatten(std::move(blocks));
  res.count = members.size();
  if (opts.keep_members) res.members = std::move(members);
  res.elapsed = Clock::now() - start;
  return res;
}

CensusResult enum_integers_with_root(i64 u, u64 x, const SpfTable& table, ScanOptions opts) {
  if (x > table.limit()) throw std::length_error("enum_integers_with_root: x exceeds sieve limit");
  const auto start = Clock::now();
  CensusResult res;
  res.u = u;
  res.x = x;
  res.admissible = is_admissible(u);
  auto blocks = map_blocks(2, x + 1, opts.workers, [&](u64 lo, u64 hi) {
    std::vector<u64> hits;
    for (u64 n = lo; n < hi; ++n) {
      const u64 r = reduce(u, n);
      if (std::gcd(r, n) != 1) continue;
      const auto f = table.factor(n);
      const u64 lambda = carmichael_lambda(f);
      if (has_order_exactly(r, n, lambda, table.factor(lambda))) hits.push_back(n);
    }
    return hits;
  });
  auto members = flatten(std::move(blocks));
  res.count = members.size();
  if (opts.keep_members) res.members = std::move(members);
  res.elapsed = Clock::now() - start;
  return res;
}

MembershipRecord classify(i64 u, u64 n) {
  if (n == 0) throw std::invalid_argument("classify: n must be positive");
  MembershipRecord rec;
  rec.n = n;
  if (n == 1) {
    rec.order = 1;
    return rec;
  }
  const auto f = factorize(n);
  rec.lambda = carmichael_lambda(f);
  rec.order = mult_order(reduce(u, n), n, rec.lambda, factorize(rec.lambda));
  if (rec.order && *rec.order == rec.lambda) {
    rec.cls = Membership::InN;
    return rec;
  }
  bool all_in_p = true;
  for (const auto& [p, e] : f.factors()) {
    const u64 r = reduce(u, p);
    if (r == 0 || !has_order_exactly(r, p, p - 1, factorize(p - 1))) {
      all_in_p = false;
      break;
    }
  }
  rec.cls = all_in_p ? Membership::InAOnly : Membership::Neither;
  return rec;
}

std::vector<u64> wieferich_scan(i64 u, u64 limit, unsigned workers) {
  if (limit >= kWieferichLimit) throw std::length_error("wieferich_scan: limit must be < 2^32");
  const auto base = base_primes_for(limit + 1);
  auto blocks = map_blocks(2, limit + 1, workers, [&](u64 lo, u64 hi) {
    std::vector<u64> hits;
    for (u64 p : primes_in_range(lo, hi, base)) {
      const u64 p2 = p * p;
      const u64 r = reduce(u, p2);
      if (r % p == 0) continue;
      if (pow_mod(r, p - 1, p2) == 1) hits.push_back(p);
    }
    return hits;
  });
  return flatten(std::move(blocks));
}

std::vector<WsetHit> wset_scan(i64 u, u64 limit, unsigned workers) {
  if (limit >= kWieferichLimit) throw std::length_error("wset_scan: limit must be < 2^32");
  const auto base = base_primes_for(limit + 1);
  auto blocks = map_blocks(2, limit + 1, workers, [&](u64 lo, u64 hi) {
    std::vector<WsetHit> hits;
    for (u64 p : primes_in_range(lo, hi, base)) {
      if (!prime_has_root(u, p, base)) continue;
      // Order mod p^2 from lambda(p^2) = p(p-1), independent of the Fermat-quotient test.
      const u64 p2 = p * p;
      const u64 lambda = carmichael_lambda(p, 2);
      const auto ord2 = mult_order(reduce(u, p2), p2, lambda, factorize(lambda));
      if (ord2 && *ord2 != p * (p - 1)) hits.push_back({p, p - 1, *ord2});
    }
    return hits;
  });
  std::vector<WsetHit> out;
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<DensityRow> prime_density_grid(i64 u, const std::vector<u64>& grid, unsigned workers) {
  std::vector<DensityRow> rows;
  if (grid.empty()) return rows;
  const u64 top = *std::max_element(grid.begin(), grid.end());
  const auto census = enum_primes_with_root(u, top, {.workers = workers, .keep_members = true});
  const auto primes = simple_prime_list(top);
  for (u64 x : grid) {
    DensityRow row;
    row.x = x;
    row.pi_u = count_up_to(*census.members, x);
    row.pi = static_cast<u64>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
    row.ratio = row.pi ? static_cast<double>(row.pi_u) / static_cast<double>(row.pi) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

u64 count_up_to(const std::vector<u64>& sorted, u64 x) {
  return static_cast<u64>(std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

}  // namespace artin
