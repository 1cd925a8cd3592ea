#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "output.hpp"

namespace artin::cli {

enum class Subcommand { Primes, Integers, Classify, Wieferich, Wset, Constants, Verify, Expsum, PsiCheck, Selftest };

struct RunConfig {
  Subcommand subcommand = Subcommand::Selftest;
  std::int64_t u = 2;
  bool allow_inadmissible = false;
  std::uint64_t limit = 0;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> grid;
  Format format = Format::Csv;
  std::string output = "-";
  unsigned workers = 0;
  bool gzip = false;
  bool counts_only = false;
  std::string count_file;
  // verify
  std::vector<std::string> formulas;
  bool plot_data = false;
  bool empirical_exponent = false;
  int moment_k = 1;
  // constants
  std::uint64_t alpha_bound = 10'000'000;
  // expsum
  std::string kind = "full";
  std::int64_t param = 0;
  std::uint64_t p = 0;
  std::uint64_t theta = 0;
  std::uint64_t t = 0;
  unsigned samples = 8;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInconsistent = 2;

// Parses argv and runs; returns the process exit code.
int main_entry(int argc, char** argv);
int run(const std::vector<std::string>& args);
int run(const RunConfig& config);

// Sieve ceiling, from ARTIN_SIEVE_LIMIT when set.
std::uint64_t sieve_ceiling();

}  // namespace artin::cli
