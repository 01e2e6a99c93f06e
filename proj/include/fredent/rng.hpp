#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fredent/linalg.hpp"

namespace fredent {

// Deterministic sampler. mt19937_64 output is pinned by the standard, and
// the uniform / normal transforms below are written out by hand, so a fixed
// seed reproduces the exact same stream on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit mantissa.
  double uniform() { return std::ldexp(static_cast<double>(engine_() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer uniform on [0, n), n >= 1. Modulo bias is irrelevant at the
  // ranges used here (n far below 2^32).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  // Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    // u1 in (0, 1] keeps the log finite.
    double u1 = std::ldexp(static_cast<double>((engine_() >> 11) + 1), -53);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  Complex complex_normal() {
    double re = normal();
    double im = normal();
    return Complex(re, im) / std::sqrt(2.0);
  }

  ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = complex_normal();
    return g;
  }

  ComplexVector unit_vector(Eigen::Index dim) {
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_normal();
    return v / v.norm();
  }

  // Haar-ish unitary: QR of a Ginibre matrix with the R diagonal phases
  // folded into Q so the distribution does not depend on QR's sign choices.
  ComplexMatrix unitary(Eigen::Index dim) {
    ComplexMatrix g = ginibre(dim, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
      Complex d = r(k, k);
      double a = std::abs(d);
      q.col(k) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return q;
  }

  // Random full-rank state, G G^dagger normalized to unit trace.
  DensityMatrix density(Eigen::Index dim) {
    ComplexMatrix g = ginibre(dim, dim);
    ComplexMatrix w = g * g.adjoint();
    w /= w.trace().real();
    return make_density(0.5 * (w + w.adjoint()));
  }

  // Random PSD trace-class operator with trace norm `scale`.
  TraceClassOperator psd(Eigen::Index dim, double scale = 1.0) {
    ComplexMatrix g = ginibre(dim, dim);
    ComplexMatrix w = g * g.adjoint();
    w *= scale / w.trace().real();
    return make_trace_class(0.5 * (w + w.adjoint()));
  }

  // Random probability vector (uniform gaps, normalized).
  std::vector<double> simplex(std::size_t n) {
    std::vector<double> p(n);
    double total = 0.0;
    for (double& x : p) {
      x = uniform();
      total += x;
    }
    if (total <= 0.0) total = 1.0;
    for (double& x : p) x /= total;
    return p;
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace fredent
