#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

namespace fredent {

using Complex = std::complex<double>;

// Kahan-compensated accumulator. Used wherever long alternating or
// small-term sums feed a tight tolerance (Newton's identities, spectral
// entropy sums).
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// x * ln(1+x) evaluated stably near 0 is never needed by itself; the
// recurring primitive is (1+x)*ln(1+x), exact at x=0.
inline double xlog1p_shifted(double x) { return (1.0 + x) * std::log1p(x); }

// f+(x) = (1+x)^{1+x} - 1 and f-(x) = (1+x)^{-(1+x)} - 1, both exactly 0 at
// x = 0 thanks to expm1.
inline double entropy_f_plus(double x) { return std::expm1(xlog1p_shifted(x)); }
inline double entropy_f_minus(double x) { return std::expm1(-xlog1p_shifted(x)); }

}  // namespace fredent
