#include "fredent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fredent {

namespace {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error("NonFinite", "spectrum value");
  }
  std::sort(values_.begin(), values_.end(), std::greater<double>());
}

double Spectrum::sum() const {
  KahanSum acc;
  for (double v : values_) acc.add(v);
  return acc.value();
}

Spectrum Spectrum::clamped_nonnegative() const {
  double scale = std::max(1.0, values_.empty() ? 0.0 : std::abs(values_.front()));
  std::vector<double> out = values_;
  for (double& v : out) {
    if (v < 0.0) {
      if (v < -kPsdClampTol * scale) {
        throw Error("NotPSD",
                    "eigenvalue " + std::to_string(v) + " below clamp window");
      }
      v = 0.0;
    }
  }
  return Spectrum(std::move(out));
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw Error("NonFinite", what);
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error("NotSquare", std::string(what) + " is " +
                                 std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()));
  }
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix g = m.adjoint() * m;
  g -= ComplexMatrix::Identity(m.rows(), m.cols());
  return max_abs(g) <= tol;
}

EigResult hermitian_eig(const ComplexMatrix& m) {
  require_square(m);
  require_finite(m);
  if (!is_hermitian(m)) throw Error("NotHermitian");

  // Hermitize exactly so the solver sees a clean input; the asymmetry is
  // already known to be below tolerance.
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("EigFailed", "self-adjoint eigensolver did not converge");
  }

  // Eigen sorts ascending; the contract is non-increasing.
  Eigen::Index n = m.rows();
  std::vector<double> vals(static_cast<std::size_t>(n));
  ComplexMatrix basis(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    vals[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    basis.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return EigResult{Spectrum(std::move(vals)), std::move(basis)};
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m);
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = solver.singularValues();
  std::vector<double> vals(sv.data(), sv.data() + sv.size());
  return SvdResult{solver.matrixU(), Spectrum(std::move(vals)), solver.matrixV()};
}

DensityMatrix make_density(const ComplexMatrix& m) {
  require_square(m, "density matrix");
  require_finite(m, "density matrix");
  if (!is_hermitian(m)) throw Error("NotHermitian", "density matrix");

  EigResult eig = hermitian_eig(m);
  Spectrum clamped = eig.eigenvalues.clamped_nonnegative();
  double tr = clamped.sum();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error("TraceNotOne", "trace = " + std::to_string(tr));
  }
  return DensityMatrix(0.5 * (m + m.adjoint()), std::move(clamped),
                       std::move(eig.eigenbasis));
}

TraceClassOperator make_trace_class(const ComplexMatrix& m) {
  require_square(m, "operator");
  require_finite(m, "operator");
  if (!is_hermitian(m)) throw Error("NotHermitian", "operator");

  EigResult eig = hermitian_eig(m);
  Spectrum clamped = eig.eigenvalues.clamped_nonnegative();
  return TraceClassOperator(0.5 * (m + m.adjoint()), std::move(clamped),
                            std::move(eig.eigenbasis));
}

TraceClassOperator::TraceClassOperator(const DensityMatrix& q)
    : matrix_(q.matrix()), spectrum_(q.spectrum()), basis_(q.eigenbasis()) {}

ComplexMatrix matrix_function(const TraceClassOperator& q,
                              const std::function<double(double)>& f) {
  const auto& vals = q.spectrum().values();
  RealVector fv(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t k = 0; k < vals.size(); ++k) {
    double y = f(vals[k]);
    if (!std::isfinite(y)) {
      throw Error("FunctionDomainError",
                  "f(" + std::to_string(vals[k]) + ") is not finite");
    }
    fv(static_cast<Eigen::Index>(k)) = y;
  }
  const ComplexMatrix& u = q.eigenbasis();
  return u * fv.asDiagonal() * u.adjoint();
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace norm argument");
  require_finite(m, "trace norm argument");
  return svd(m).singular_values.sum();
}

double operator_norm(const ComplexMatrix& m) {
  require_finite(m, "operator norm argument");
  if (m.size() == 0) return 0.0;
  return svd(m).singular_values.top();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

}  // namespace fredent
