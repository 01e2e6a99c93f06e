#include "fredent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fredent/io.hpp"

namespace fredent::entropy {

namespace {

FenValue fen_from_values(std::span<const double> values, double tail_bound) {
  KahanSum acc;
  for (double lam : values) acc.add(xlog1p_shifted(lam));
  FenValue out;
  out.plus = acc.value();
  out.minus = -out.plus;
  out.tail_bound = tail_bound;
  return out;
}

}  // namespace

FenValue fen(const DensityMatrix& q) {
  return fen_from_values(q.spectrum().values(), 0.0);
}

FenValue fen_of_sequence(std::span<const double> spectrum) {
  return fen_from_values(spectrum, 0.0);
}

FenValue fen_truncated(const Spectrum& spectrum, std::size_t keep) {
  if (keep > spectrum.size()) {
    throw Error("KeepOutOfRange", std::to_string(keep) + " of " +
                                      std::to_string(spectrum.size()));
  }
  // Spectrum is sorted non-increasing, so the smallest entry is last.
  if (spectrum.size() > 0 && spectrum[spectrum.size() - 1] < 0.0) {
    throw Error("NegativeValue", "spectrum has a negative entry");
  }
  KahanSum partial;
  for (std::size_t k = 0; k < keep; ++k) partial.add(spectrum[k]);
  // Each dropped term (1+lam)ln(1+lam) <= 2 lam, so the tail is bounded by
  // twice the unaccounted mass.
  double tail = 2.0 * std::max(0.0, 1.0 - partial.value());
  return fen_from_values(
      std::span<const double>(spectrum.values().data(), keep), tail);
}

double fen_uniform(double n) { return (n + 1.0) * std::log1p(1.0 / n); }

EntropyOperator entropy_operator(const DensityMatrix& q, EntropySign sign) {
  TraceClassOperator t(q);
  ComplexMatrix m = matrix_function(
      t, sign == EntropySign::Plus ? entropy_f_plus : entropy_f_minus);
  return EntropyOperator{std::move(m), sign};
}

ComplexMatrix renorm_log(const TraceClassOperator& q) {
  return matrix_function(q, [](double x) { return std::log1p(x); });
}

ComplexMatrix frechet_derivative_log(const TraceClassOperator& q0,
                                     const TraceClassOperator& q1) {
  if (q0.dim() != q1.dim()) throw Error("DimMismatch");
  const ComplexMatrix& u = q0.eigenbasis();
  const auto& lam = q0.spectrum().values();
  const Eigen::Index n = q0.dim();

  // Divided differences of ln(1+x), written as log1p(d/(1+b))/d so the
  // near-degenerate case loses no precision and the limit 1/(1+a) is exact.
  ComplexMatrix direction = u.adjoint() * q1.matrix() * u;
  ComplexMatrix scaled(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double a = lam[static_cast<std::size_t>(i)];
      double b = lam[static_cast<std::size_t>(j)];
      double d = a - b;
      double kernel = (d == 0.0) ? 1.0 / (1.0 + a) : std::log1p(d / (1.0 + b)) / d;
      scaled(i, j) = direction(i, j) * kernel;
    }
  }
  return u * scaled * u.adjoint();
}

ClaimReport log_continuity_probe(const DensityMatrix& q, const DensityMatrix& q2) {
  if (q.dim() != q2.dim()) throw Error("DimMismatch");
  double tau = std::max(q.spectrum().top(), q2.spectrum().top());
  if (tau >= 1.0 - 1e-12) {
    throw Error("SpectralRadiusOne", "tau = " + std::to_string(tau));
  }
  double lhs = trace_norm(renorm_log(TraceClassOperator(q)) -
                          renorm_log(TraceClassOperator(q2)));
  double rhs = trace_norm(q.matrix() - q2.matrix()) / (1.0 - tau);

  ClaimReport report;
  report.claim_id = "log-continuity";
  report.record(rhs - lhs, 1e-12,
                io::witness_text({{"q", io::matrix_to_json(q.matrix())},
                                  {"q2", io::matrix_to_json(q2.matrix())}}));
  return report;
}

}  // namespace fredent::entropy
