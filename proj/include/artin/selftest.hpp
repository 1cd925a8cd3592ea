// Invariant suite shared by the `selftest` subcommand and the acceptance
// tests. Every check compares two independent computations.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct PsiSweepResult {
  u64 primes_checked = 0;
  u64 pairs_checked = 0;
  u64 mismatches = 0;
  double max_residual = 0;
  std::string first_mismatch;
};

// For every prime p < bound and every u in [1, p-1]: order test, divisor sum,
// divisor-free multiplicative and additive forms (complex and indicator).
PsiSweepResult psi_equivalence_sweep(u64 bound);

struct SelfTestOptions {
  unsigned workers = 0;
};

std::vector<CheckResult> run_selftest(const SelfTestOptions& opts = {});

// Runs one named check with timing and exception capture.
CheckResult run_check(std::string module, std::string name, const std::function<std::string(bool&)>& body);

}  // namespace artin
