#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "artin/census.hpp"
#include "artin/prchar.hpp"
#include "oracle.hpp"

using namespace artin;

namespace {
const std::vector<u64> kP2Below100 = {3, 5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83};
const std::vector<u64> kN2Below75 = {3,  5,  9,  11, 13, 15, 19, 21, 25, 27, 29, 33, 35,
                                     37, 39, 45, 53, 55, 57, 59, 61, 63, 65, 67, 69, 75};
}  // namespace

TEST_CASE("admissibility") {
  CHECK(is_admissible(2));
  CHECK(is_admissible(-3));
  CHECK(is_admissible(-4));
  CHECK_FALSE(is_admissible(0));
  CHECK_FALSE(is_admissible(1));
  CHECK_FALSE(is_admissible(-1));
  CHECK_FALSE(is_admissible(4));
  CHECK_FALSE(is_admissible(1093 * 1093));
}

TEST_CASE("enum_primes_with_root") {
  auto r = enum_primes_with_root(2, 100);
  CHECK(r.count == 12);
  CHECK(*r.members == kP2Below100);
  CHECK(enum_primes_with_root(2, 2).count == 0);
  const auto big = enum_primes_with_root(2, 1'000'000);
  CHECK(big.count == 29341);
  CHECK(std::abs(static_cast<double>(big.count) / (0.373956 * 78498) - 1) < 0.01);
  for (i64 u : {2, 3, 5, 6, -2}) {
    std::vector<u64> want;
    for (u64 p : oracle::primes_below(3000))
      if (oracle::order(reduce(u, p), p) == p - 1) want.push_back(p);
    REQUIRE(*enum_primes_with_root(u, 3000).members == want);
  }
}

TEST_CASE("enum_integers_with_root") {
  const SpfTable table(200'000);
  auto r = enum_integers_with_root(2, 30, table);
  CHECK(*r.members == std::vector<u64>{3, 5, 9, 11, 13, 15, 19, 21, 25, 27, 29});
  CHECK(*enum_integers_with_root(2, 75, table).members == kN2Below75);
  const auto m57 = *enum_integers_with_root(2, 57, table).members;
  CHECK(std::binary_search(m57.begin(), m57.end(), 57));
  CHECK(enum_integers_with_root(2, 2, table).count == 0);
  CHECK(enum_integers_with_root(2, 1000, table).count == 293);
  CHECK(enum_integers_with_root(2, 10'000, table).count == 2645);
  CHECK(enum_integers_with_root(2, 100'000, table).count == 24465);
  CHECK(*enum_integers_with_root(3, 600, table).members == oracle::integers_with_root(3, 600));
  CHECK_THROWS_AS(enum_integers_with_root(2, 300'000, table), std::length_error);
  ScanOptions counts{.workers = 0, .keep_members = false};
  const auto c = enum_integers_with_root(2, 100'000, table, counts);
  CHECK(c.count == 24465);
  CHECK_FALSE(c.members.has_value());
}

TEST_CASE("worker count does not change results") {
  const SpfTable table(300'000);
  const auto one = enum_integers_with_root(2, 300'000, table, {.workers = 1});
  const auto four = enum_integers_with_root(2, 300'000, table, {.workers = 4});
  CHECK(*one.members == *four.members);
  CHECK(*enum_primes_with_root(5, 300'000, {.workers = 1}).members ==
        *enum_primes_with_root(5, 300'000, {.workers = 3}).members);
  CHECK(wieferich_scan(2, 200'000, 1) == wieferich_scan(2, 200'000, 5));
}

TEST_CASE("classify") {
  CHECK(classify(2, 45).cls == Membership::InN);
  CHECK(classify(2, 7).cls == Membership::Neither);
  const auto r = classify(2, 3 * 3511ULL * 3511ULL);
  CHECK(r.cls == Membership::Neither);
  CHECK(r.order.has_value());
  CHECK(classify(2, 10).cls == Membership::Neither);
  CHECK_FALSE(classify(2, 10).order.has_value());
  const auto one = classify(2, 1);
  CHECK(one.cls == Membership::Neither);
  CHECK(one.order == 1u);
  // 5 is a primitive root mod 2 but not mod 4.
  CHECK(classify(5, 4).cls == Membership::InAOnly);
  CHECK(classify(2, 21).cls == Membership::InN);
  for (u64 n : kN2Below75) CHECK(classify(2, n).cls == Membership::InN);
  for (u64 n : {3ULL, 5ULL, 9ULL, 11ULL, 15ULL, 19ULL, 25ULL, 27ULL, 29ULL, 33ULL, 37ULL, 45ULL, 53ULL, 55ULL,
                57ULL, 61ULL, 65ULL, 67ULL, 75ULL})
    CHECK(classify(2, n).cls == Membership::InN);
}

TEST_CASE("classify agrees with the brute-force order") {
  for (u64 n = 1; n <= 600; ++n) {
    const auto r = classify(2, n);
    const u64 o = oracle::order(2, n);
    if (r.cls == Membership::InN) {
      REQUIRE(r.order == r.lambda);
      REQUIRE(n % 2 == 1);
    }
    REQUIRE((r.cls == Membership::InN) == (n > 1 && o == oracle::lambda(n)));
    if (r.cls == Membership::InAOnly) {
      for (auto [p, e] : factorize(n).factors()) REQUIRE(oracle::order(2, p) == p - 1);
    }
  }
}

TEST_CASE("wieferich_scan") {
  CHECK(wieferich_scan(2, 10'000) == std::vector<u64>{1093, 3511});
  CHECK(wieferich_scan(2, 1000).empty());
  CHECK(wieferich_scan(3, 1'100'000) == std::vector<u64>{11, 1006003});
  CHECK(wieferich_scan(3, 1'000'000) == std::vector<u64>{11});
  CHECK(wieferich_scan(5, 50'000) == std::vector<u64>{2, 20771, 40487});
  CHECK_THROWS(wieferich_scan(2, 1ULL << 32));
}

TEST_CASE("wset_scan") {
  CHECK(wset_scan(2, 100'000).empty());
  const auto w5 = wset_scan(5, 10'000);
  REQUIRE(w5.size() == 1);
  CHECK(w5[0] == WsetHit{2, 1, 1});
  for (i64 u : {2, 3, 5, 7, 10}) {
    const u64 L = 200'000;
    const auto wief = wieferich_scan(u, L);
    std::vector<u64> want;
    for (u64 p : wief)
      if (oracle::order(reduce(u, p), p) == p - 1) want.push_back(p);
    std::vector<u64> got;
    for (const auto& h : wset_scan(u, L)) {
      got.push_back(h.p);
      CHECK(h.order_mod_p == h.p - 1);
      CHECK(h.order_mod_p2 != h.p * (h.p - 1));
    }
    CHECK(got == want);
  }
}

TEST_CASE("prime density grid") {
  const auto rows = prime_density_grid(2, {1000, 100'000, 1'000'000});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].pi == 168);
  CHECK(rows[2].pi == 78498);
  CHECK(rows[2].pi_u == 29341);
  CHECK(rows[1].ratio > 0.36);
  CHECK(rows[1].ratio < 0.39);
  CHECK(rows[2].ratio > 0.36);
  CHECK(rows[2].ratio < 0.39);
}

TEST_CASE("counts are monotone in x") {
  const SpfTable table(50'000);
  const auto all = *enum_integers_with_root(2, 50'000, table).members;
  u64 prev = 0;
  for (u64 x = 1; x <= 50'000; x += 97) {
    const u64 c = count_up_to(all, x);
    CHECK(c >= prev);
    CHECK(c == enum_integers_with_root(2, x, table).count);
    prev = c;
    if (x > 5000) x += 2000;
  }
}
