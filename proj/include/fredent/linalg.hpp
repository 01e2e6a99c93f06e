#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "fredent/errors.hpp"
#include "fredent/numeric.hpp"

namespace fredent {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Eigenvalues below this (relative to the largest magnitude) are clamped to
// zero when a nonnegative spectrum is required; anything more negative is a
// genuine PSD violation.
inline constexpr double kPsdClampTol = 1e-10;
// Relative max-norm tolerance for Hermiticity and related structural checks.
inline constexpr double kHermTol = 1e-12;
// |trace - 1| tolerance for density matrices.
inline constexpr double kTraceTol = 1e-10;

// Finite, non-increasing sequence of real values. Construction sorts.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;
  // Largest value, 0 for an empty spectrum.
  double top() const noexcept { return values_.empty() ? 0.0 : values_.front(); }

  // Returns a copy with values in (-kPsdClampTol*scale, 0) clamped to 0;
  // throws Error("NotPSD") if any value is more negative. `scale` defaults
  // to max(1, top magnitude).
  Spectrum clamped_nonnegative() const;

 private:
  std::vector<double> values_;
};

struct EigResult {
  Spectrum eigenvalues;      // non-increasing
  ComplexMatrix eigenbasis;  // unitary; column k pairs with eigenvalues[k]
};

struct SvdResult {
  ComplexMatrix u;          // rows x rows, unitary
  Spectrum singular_values; // length min(rows, cols), non-increasing
  ComplexMatrix v;          // cols x cols, unitary; m = u * diag(s) * v^dagger
};

// Hermitian PSD operator with unit trace, carrying its eigendecomposition.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const ComplexMatrix& eigenbasis() const noexcept { return basis_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }

 private:
  friend DensityMatrix make_density(const ComplexMatrix& m);
  DensityMatrix(ComplexMatrix m, Spectrum s, ComplexMatrix b)
      : matrix_(std::move(m)), spectrum_(std::move(s)), basis_(std::move(b)) {}

  ComplexMatrix matrix_;
  Spectrum spectrum_;
  ComplexMatrix basis_;
};

// Hermitian PSD operator of finite trace; trace norm equals the eigenvalue
// sum. Densities embed (every state is trace class).
class TraceClassOperator {
 public:
  TraceClassOperator(const DensityMatrix& q);  // intentional implicit embed

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const ComplexMatrix& eigenbasis() const noexcept { return basis_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  double trace_norm() const { return spectrum_.sum(); }
  // Spectral radius; for PSD operators this is the top eigenvalue.
  double spectral_radius() const noexcept { return spectrum_.top(); }

 private:
  friend TraceClassOperator make_trace_class(const ComplexMatrix& m);
  TraceClassOperator(ComplexMatrix m, Spectrum s, ComplexMatrix b)
      : matrix_(std::move(m)), spectrum_(std::move(s)), basis_(std::move(b)) {}

  ComplexMatrix matrix_;
  Spectrum spectrum_;
  ComplexMatrix basis_;
};

// Throws Error("NonFinite") when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what = "matrix");
// Throws Error("NotSquare").
void require_square(const ComplexMatrix& m, const char* what = "matrix");

bool is_hermitian(const ComplexMatrix& m, double rel_tol = kHermTol);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted
// non-increasing with matching eigenvector columns.
// Errors: NotSquare, NonFinite, NotHermitian.
EigResult hermitian_eig(const ComplexMatrix& m);

// Full singular value decomposition, m = u * diag(s) * v^dagger.
// Errors: NonFinite.
SvdResult svd(const ComplexMatrix& m);

// Validates square / finite / Hermitian / PSD (clamping eigenvalues in
// (-1e-10, 0)) / unit trace, in that order.
// Errors: NotSquare, NonFinite, NotHermitian, NotPSD, TraceNotOne.
DensityMatrix make_density(const ComplexMatrix& m);

// Validates square / finite / Hermitian / PSD.
// Errors: NotSquare, NonFinite, NotHermitian, NotPSD.
TraceClassOperator make_trace_class(const ComplexMatrix& m);

// U f(Lambda) U^dagger through the cached eigendecomposition. f must be
// finite on the spectrum; a NaN/Inf image throws Error("FunctionDomainError").
ComplexMatrix matrix_function(const TraceClassOperator& q,
                              const std::function<double(double)>& f);

// Sum of singular values. Errors: NotSquare (contract is square inputs),
// NonFinite.
double trace_norm(const ComplexMatrix& m);

// Largest singular value. Errors: NonFinite.
double operator_norm(const ComplexMatrix& m);

// Kronecker product, row-major pair convention:
// (a kron b)((i,j),(k,l)) = a(i,k) * b(j,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace fredent
