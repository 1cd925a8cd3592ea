// Neumaier-compensated accumulation.
#pragma once

#include <cmath>
#include <complex>

namespace artin {

template <class T = long double>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

template <class T = long double>
class CompensatedComplexSum {
 public:
  void add(std::complex<T> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedComplexSum& operator+=(std::complex<T> z) {
    add(z);
    return *this;
  }
  std::complex<T> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<T> re_, im_;
};

}  // namespace artin
