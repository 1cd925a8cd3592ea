// Additive character sums and exponential sums over F_p.
#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

enum class ExpSumKind { FullAdditive, U, V, ThetaPower, ExactOrderCharacter };

std::string_view to_string(ExpSumKind kind);

struct ExpSumStat {
  u64 p = 0;
  ExpSumKind kind = ExpSumKind::FullAdditive;
  i64 param = 0;
  std::complex<double> value;
  double modulus = 0;
};

struct AdditiveSums {
  ExpSumStat full;       // sum_{0 <= k < p} e^{2 pi i u k / p}
  ExpSumStat punctured;  // sum_{0 < k <= p-1}
};

AdditiveSums full_additive_sum(i64 u, u64 p);

// U_p = sum_{0 < k <= p-1} e^{-2 pi i u k / p}.
ExpSumStat u_sum(i64 u, u64 p);

// Normalizations appearing for V_p; the raw sum is always what v_sum returns.
enum class VNormalization { None, InvP, InvSqrtP };

// sum_{1 <= n <= p-1, gcd(n, p-1) = 1} e^{2 pi i k tau^n / p}, unnormalized.
// Throws SizeLimitError for p > 10^6.
ExpSumStat v_sum(u64 p, i64 k);

std::complex<double> normalized(const ExpSumStat& v, VNormalization norm);

// sum_{1 <= m <= t} e^{2 pi i a theta^m / p}. Throws std::invalid_argument
// when ord_p(theta) < t.
ExpSumStat theta_power_sum(u64 theta, u64 t, i64 a, u64 p);

struct BoundRow {
  u64 p = 0;
  double max_modulus = 0;  // max over sampled k of |sum_{gcd(n,p-1)=1} e^{2 pi i k tau^n/p}|
  u64 phi_bound = 0;       // phi(p-1), the number of terms
  double envelope = 0;     // p / log log p, the unnormalized trivial bound
};

struct BoundTable {
  u64 x = 0;
  std::vector<BoundRow> rows;  // one per prime in [x, 2x]
  double normalized_sum = 0;   // sum_p max_k |V_p| / p
  double envelope = 0;         // x / ((log log x)(log x))
};

// Requires x >= 3. k is sampled over 1..min(p-1, samples).
BoundTable bound_table(u64 x, unsigned samples = 8);

struct ExactOrderResult {
  ExpSumStat stat;
  double claimed = 0;  // phi(q) if u = 1 mod q, else -1
  bool discrepancy = false;
};

// Sum of chi(u) over the multiplicative characters mod q of exact order q - 1.
// Computed and compared against the claimed closed form; never asserted.
ExactOrderResult exact_order_character_sum(i64 u, u64 q);

}  // namespace artin
