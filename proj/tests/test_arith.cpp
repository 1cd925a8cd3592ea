#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/arith.hpp"
#include "oracle.hpp"

using namespace artin;

TEST_CASE("is_prime") {
  CHECK(is_prime(1093));
  CHECK(is_prime(3511));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1194649));
  CHECK(is_prime(2));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  for (u64 n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::prime(n));
}

TEST_CASE("factorize") {
  auto f = factorize(45);
  REQUIRE(f.omega() == 2);
  CHECK(f.factors()[0] == PrimePower{3, 2});
  CHECK(f.factors()[1] == PrimePower{5, 1});
  CHECK(factorize(1).is_one());
  auto g = factorize(1194649);
  REQUIRE(g.omega() == 1);
  CHECK(g.factors()[0] == PrimePower{1093, 2});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  // Semiprimes with two large factors exercise rho.
  const u64 a = 4294967291ULL, b = 4294967279ULL;
  auto h = factorize(a * b);
  REQUIRE(h.omega() == 2);
  CHECK(h.factors()[0].p == b);
  CHECK(h.factors()[1].p == a);
  CHECK(factorize(18446744073709551615ULL).omega() == 7);
}

TEST_CASE("factorize reconstructs random 64-bit inputs") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng() | 1;
    const auto f = factorize(n);
    u128 prod = 1;
    u64 last = 0;
    for (auto [p, e] : f.factors()) {
      CHECK(p > last);
      CHECK(is_prime(p));
      CHECK(e >= 1);
      last = p;
      for (unsigned k = 0; k < e; ++k) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("FactoredInteger::from_factors validates") {
  const PrimePower ok[] = {{2, 3}, {5, 1}};
  CHECK(FactoredInteger::from_factors(ok).value() == 40);
  const PrimePower unordered[] = {{5, 1}, {2, 3}};
  CHECK_THROWS(FactoredInteger::from_factors(unordered));
  const PrimePower composite[] = {{4, 1}};
  CHECK_THROWS(FactoredInteger::from_factors(composite));
  const PrimePower zero_exp[] = {{3, 0}};
  CHECK_THROWS(FactoredInteger::from_factors(zero_exp));
  CHECK(FactoredInteger::from_factors({}).is_one());
}

TEST_CASE("euler_phi and carmichael_lambda") {
  CHECK(euler_phi(factorize(1)) == 1);
  CHECK(euler_phi(factorize(9)) == 6);
  CHECK(euler_phi(factorize(32)) == 16);
  CHECK(carmichael_lambda(factorize(8)) == 2);
  CHECK(carmichael_lambda(factorize(45)) == 12);
  CHECK(carmichael_lambda(factorize(1)) == 1);
  CHECK(carmichael_lambda(factorize(4)) == 2);
  CHECK(carmichael_lambda(factorize(2)) == 1);
  CHECK(carmichael_lambda(2, 5) == 8);
  CHECK(carmichael_lambda(factorize(561)) == 80);
}

TEST_CASE("phi matches gcd count up to 10^4") {
  for (u64 n = 1; n <= 10'000; ++n) REQUIRE(euler_phi(factorize(n)) == oracle::phi(n));
}

TEST_CASE("lambda matches the largest unit order up to 600") {
  for (u64 n = 1; n <= 600; ++n) REQUIRE(carmichael_lambda(factorize(n)) == oracle::lambda(n));
}

TEST_CASE("u^lambda(n) = 1 for units, n <= 10^4") {
  std::mt19937_64 rng(7);
  for (u64 n = 2; n <= 10'000; ++n) {
    const auto f = factorize(n);
    const u64 lam = carmichael_lambda(f);
    CHECK(euler_phi(f) % lam == 0);
    for (int i = 0; i < 4; ++i) {
      const u64 u = rng() % n;
      if (gcd(u, n) == 1) REQUIRE(pow_mod(u, lam, n) == 1);
    }
  }
}

TEST_CASE("lambda = phi exactly on 1, 2, 4, p^m, 2p^m") {
  for (u64 n = 1; n <= 100'000; ++n) {
    const auto f = factorize(n);
    auto fs = f.factors();
    bool cyclic = n == 1 || n == 2 || n == 4 || (fs.size() == 1 && fs[0].p > 2) ||
                  (fs.size() == 2 && fs[0] == PrimePower{2, 1});
    REQUIRE((carmichael_lambda(f) == euler_phi(f)) == cyclic);
  }
}

TEST_CASE("mult_order") {
  CHECK(mult_order(2, factorize(7)) == 3u);
  CHECK(mult_order(2, factorize(11)) == 10u);
  CHECK(mult_order(2, factorize(25)) == 20u);
  CHECK(mult_order(5, factorize(1)) == 1u);
  CHECK_FALSE(mult_order(2, factorize(10)).has_value());
  CHECK(mult_order(-1, factorize(7)) == 2u);
  CHECK(mult_order(2, factorize(1093)) == 364u);
  CHECK(mult_order(2, factorize(3511)) == 1755u);
}

TEST_CASE("mult_order agrees with brute force and divides lambda") {
  for (u64 n = 1; n <= 400; ++n) {
    const auto f = factorize(n);
    const u64 lam = carmichael_lambda(f);
    for (u64 u = 0; u < n; ++u) {
      const auto o = mult_order(static_cast<i64>(u), f);
      const u64 want = oracle::order(u, n);
      if (!want) {
        REQUIRE_FALSE(o.has_value());
        continue;
      }
      REQUIRE(o.has_value());
      REQUIRE(*o == want);
      REQUIRE(lam % *o == 0);
      for (auto [q, e] : factorize(*o).factors()) REQUIRE(pow_mod(u, *o / q, n) != 1 % n);
    }
  }
}

TEST_CASE("inverse_mod and reduce") {
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS_AS(inverse_mod(4, 8), NotCoprime);
  CHECK(reduce(-1, 7) == 6);
  CHECK(reduce(INT64_MIN, 3) == (3 - (9223372036854775808ULL % 3)) % 3);
  CHECK(mul_mod(18446744073709551557ULL - 1, 18446744073709551557ULL - 1, 18446744073709551557ULL) == 1);
}

TEST_CASE("SpfTable") {
  const SpfTable small(10);
  CHECK(small.spf(9) == 3);
  CHECK(small.spf(7) == 7);
  CHECK(small.spf(10) == 2);
  CHECK_THROWS_AS(SpfTable(1), std::length_error);
  CHECK_THROWS_AS(SpfTable(1000, 100), std::length_error);

  const auto table = build_spf(1'000'000);
  u64 primes = 0;
  for (u64 i = 2; i <= 1'000'000; ++i) primes += table.spf(i) == i;
  CHECK(primes == 78498);
  CHECK(table.primes().size() == 78498);
  CHECK(simple_prime_list(1'000'000).size() == 78498);
  for (u64 n = 1; n <= 1'000'000; ++n) REQUIRE(table.factor(n).value() == n);
  for (u64 n = 1; n <= 20'000; ++n) REQUIRE(table.factor(n) == factorize(n));
}

TEST_CASE("segmented prime ranges") {
  const auto base = simple_prime_list(1000);
  const auto seg = primes_in_range(999'000, 1'000'000, base);
  const auto table = build_spf(1'000'000);
  std::vector<u64> want;
  for (u64 n = 999'000; n <= 1'000'000; ++n)
    if (table.is_prime(n)) want.push_back(n);
  CHECK(seg == want);
  CHECK(primes_in_range(0, 30, base) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("Factorizer agrees with factorize beyond the table") {
  const auto table = build_spf(1000);
  Factorizer fz(&table);
  for (u64 n : {1ULL, 997ULL, 1000ULL, 1001ULL, 1194649ULL, 600851475143ULL}) CHECK(fz(n) == factorize(n));
}
