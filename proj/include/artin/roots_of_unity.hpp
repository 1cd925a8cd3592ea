// Table of the m-th roots of unity e^{2 pi i j / m}, indexed exactly.
#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace artin {

class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::uint64_t m) : m_(m), table_(m) {
    constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (std::uint64_t j = 0; j < m; ++j) {
      long double t = two_pi * static_cast<long double>(j) / static_cast<long double>(m);
      table_[j] = {cosl(t), sinl(t)};
    }
    if (m % 4 == 0) {
      table_[m / 4] = {0, 1};
      table_[3 * m / 4] = {0, -1};
    }
    if (m % 2 == 0 && m > 0) table_[m / 2] = {-1, 0};
    if (m > 0) table_[0] = {1, 0};
  }

  std::uint64_t modulus() const { return m_; }
  // e^{2 pi i k / m} for any k; reduced mod m.
  const std::complex<long double>& operator()(std::uint64_t k) const { return table_[k % m_]; }

 private:
  std::uint64_t m_;
  std::vector<std::complex<long double>> table_;
};

}  // namespace artin
