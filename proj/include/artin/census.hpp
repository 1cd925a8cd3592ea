// Bulk enumeration of primes and integers with a fixed primitive root, and
// the Wieferich-type prime scans.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

// u != 0, +-1 and u not a perfect square.
bool is_admissible(i64 u);

enum class Membership {
  InN,      // ord_n(u) = lambda(n)
  InAOnly,  // every prime factor has u as a primitive root, but ord_n(u) != lambda(n)
  Neither,
};

std::string_view to_string(Membership m);

struct MembershipRecord {
  u64 n = 0;
  Membership cls = Membership::Neither;
  u64 lambda = 1;
  std::optional<u64> order;  // absent when gcd(u, n) > 1
};

struct CensusResult {
  i64 u = 0;
  u64 x = 0;
  u64 count = 0;
  std::optional<std::vector<u64>> members;
  std::chrono::duration<double, std::milli> elapsed{};
  bool admissible = true;
};

struct ScanOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
  bool keep_members = true;
};

// Primes p <= x, p not dividing u, with ord_p(u) = p - 1.
CensusResult enum_primes_with_root(i64 u, u64 x, ScanOptions opts = {});

// 2 <= n <= x with gcd(u, n) = 1 and ord_n(u) = lambda(n). The table must
// cover x; otherwise std::length_error.
CensusResult enum_integers_with_root(i64 u, u64 x, const SpfTable& table, ScanOptions opts = {});

MembershipRecord classify(i64 u, u64 n);

// Primes p <= limit, p not dividing u, with u^(p-1) = 1 mod p^2.
std::vector<u64> wieferich_scan(i64 u, u64 limit, unsigned workers = 0);

struct WsetHit {
  u64 p = 0;
  u64 order_mod_p = 0;
  u64 order_mod_p2 = 0;
  friend bool operator==(const WsetHit&, const WsetHit&) = default;
};

// Primes with ord_p(u) = p - 1 and ord_{p^2}(u) != p(p - 1).
std::vector<WsetHit> wset_scan(i64 u, u64 limit, unsigned workers = 0);

struct DensityRow {
  u64 x = 0;
  u64 pi_u = 0;
  u64 pi = 0;
  double ratio = 0;
};

// pi_u(x) / pi(x) on a grid, from one scan up to the largest grid point.
std::vector<DensityRow> prime_density_grid(i64 u, const std::vector<u64>& grid, unsigned workers = 0);

// Number of members <= x in a sorted member list.
u64 count_up_to(const std::vector<u64>& sorted, u64 x);

}  // namespace artin
