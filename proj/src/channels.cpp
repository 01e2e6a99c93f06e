#include "fredent/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fredent/entropy.hpp"
#include "fredent/fredholm.hpp"
#include "fredent/io.hpp"

namespace fredent::channels {

namespace {

constexpr double kChannelTol = 1e-10;

// min eigenvalue of I - S, with S Hermitian PSD-ish; used for "<= I" tests.
double contraction_slack(const ComplexMatrix& s) {
  ComplexMatrix gap = ComplexMatrix::Identity(s.rows(), s.cols()) - s;
  return hermitian_eig(0.5 * (gap + gap.adjoint()))
      .eigenvalues.values()
      .back();
}

}  // namespace

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> ops) {
  if (ops.empty()) throw Error("EmptyKraus");
  Eigen::Index in_dim = ops.front().cols();
  Eigen::Index out_dim = ops.front().rows();
  for (const ComplexMatrix& a : ops) {
    if (a.cols() != in_dim || a.rows() != out_dim) {
      throw Error("DimMismatch", "Kraus operators must share one shape");
    }
    require_finite(a, "Kraus operator");
  }

  ComplexMatrix in_sum = ComplexMatrix::Zero(in_dim, in_dim);
  ComplexMatrix out_sum = ComplexMatrix::Zero(out_dim, out_dim);
  for (const ComplexMatrix& a : ops) {
    in_sum += a.adjoint() * a;
    out_sum += a * a.adjoint();
  }

  KrausChannel phi;
  phi.ops_ = std::move(ops);
  phi.in_dim_ = in_dim;
  phi.out_dim_ = out_dim;

  double preserving_gap =
      (in_sum - ComplexMatrix::Identity(in_dim, in_dim)).norm();
  if (preserving_gap <= kChannelTol) {
    phi.completeness_ = Completeness::TracePreserving;
  } else if (contraction_slack(in_sum) >= -kChannelTol) {
    phi.completeness_ = Completeness::TraceNonIncreasing;
  } else {
    throw Error("KrausNotContractive",
                "sum of A^dagger A exceeds the identity");
  }
  phi.unital_ =
      (out_sum - ComplexMatrix::Identity(out_dim, out_dim)).norm() <= kChannelTol;
  phi.output_sum_contractive_ = contraction_slack(out_sum) >= -kChannelTol;
  return phi;
}

KrausChannel mixed_unitary(const std::vector<double>& weights,
                           const std::vector<ComplexMatrix>& unitaries) {
  if (weights.size() != unitaries.size() || weights.empty()) {
    throw Error("WeightsInvalid", "need one weight per unitary");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error("WeightsInvalid", "negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error("WeightsInvalid", "weights sum to " + std::to_string(total));
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!is_unitary(unitaries[i])) throw Error("NotUnitary");
    ops.push_back(std::sqrt(weights[i]) * unitaries[i]);
  }
  return make_kraus_channel(std::move(ops));
}

KrausChannel identity_channel(Eigen::Index dim) {
  return make_kraus_channel({ComplexMatrix::Identity(dim, dim)});
}

KrausChannel partial_trace_channel(Eigen::Index dim_a, Eigen::Index dim_b,
                                   Subsystem keep) {
  if (dim_a < 1 || dim_b < 1) throw Error("DimTooSmall");
  std::vector<ComplexMatrix> ops;
  if (keep == Subsystem::A) {
    // A_i = I_A kron <i|_B, shape dA x dA*dB.
    for (Eigen::Index i = 0; i < dim_b; ++i) {
      ComplexMatrix bra = ComplexMatrix::Zero(1, dim_b);
      bra(0, i) = 1.0;
      ops.push_back(kron(ComplexMatrix::Identity(dim_a, dim_a), bra));
    }
  } else {
    for (Eigen::Index i = 0; i < dim_a; ++i) {
      ComplexMatrix bra = ComplexMatrix::Zero(1, dim_a);
      bra(0, i) = 1.0;
      ops.push_back(kron(bra, ComplexMatrix::Identity(dim_b, dim_b)));
    }
  }
  return make_kraus_channel(std::move(ops));
}

KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.kraus_ops().size() * b.kraus_ops().size());
  for (const ComplexMatrix& ka : a.kraus_ops()) {
    for (const ComplexMatrix& kb : b.kraus_ops()) ops.push_back(kron(ka, kb));
  }
  return make_kraus_channel(std::move(ops));
}

TraceClassOperator apply_channel(const KrausChannel& phi, const DensityMatrix& q) {
  if (phi.input_dim() != q.dim()) {
    throw Error("DimMismatch", "channel input dim " +
                                   std::to_string(phi.input_dim()) +
                                   " vs state dim " + std::to_string(q.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(phi.output_dim(), phi.output_dim());
  for (const ComplexMatrix& a : phi.kraus_ops()) {
    out += a * q.matrix() * a.adjoint();
  }
  return make_trace_class(0.5 * (out + out.adjoint()));
}

DensityMatrix partial_trace(const DensityMatrix& q, Eigen::Index dim_a,
                            Eigen::Index dim_b, Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != q.dim()) {
    throw Error("DimFactorizationMismatch",
                std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                    " does not factor dim " + std::to_string(q.dim()));
  }
  TraceClassOperator reduced =
      apply_channel(partial_trace_channel(dim_a, dim_b, keep), q);
  return make_density(reduced.matrix());
}

ClaimReport check_det_contraction(const KrausChannel& phi, const DensityMatrix& q) {
  if (!phi.output_sum_contractive()) {
    throw Error("KrausConditionUnmet",
                "sum of A A^dagger must be contractive for this claim");
  }
  double before = fredholm::det_spectral(TraceClassOperator(q)).value.real();
  double after = fredholm::det_spectral(apply_channel(phi, q)).value.real();

  ClaimReport report;
  report.claim_id = "thm38-det-contraction";
  io::json kraus = io::json::array();
  for (const ComplexMatrix& a : phi.kraus_ops()) kraus.push_back(io::matrix_to_json(a));
  report.record(before - after, kChannelTol,
                io::witness_text({{"kraus_ops", kraus},
                                  {"q", io::matrix_to_json(q.matrix())},
                                  {"det_before", before},
                                  {"det_after", after}}));
  return report;
}

ClaimReport check_separable_contraction(const KrausChannel& phi_a,
                                        const KrausChannel& phi_b,
                                        const DensityMatrix& q) {
  if (phi_a.input_dim() * phi_b.input_dim() != q.dim()) {
    throw Error("DimMismatch", "product channel does not match state dim");
  }
  KrausChannel product = tensor_channel(phi_a, phi_b);
  double before = fredholm::det_spectral(TraceClassOperator(q)).value.real();
  double after = fredholm::det_spectral(apply_channel(product, q)).value.real();

  ClaimReport report;
  report.claim_id = "separable-det-contraction";
  io::json kraus_a = io::json::array();
  for (const ComplexMatrix& a : phi_a.kraus_ops()) kraus_a.push_back(io::matrix_to_json(a));
  io::json kraus_b = io::json::array();
  for (const ComplexMatrix& b : phi_b.kraus_ops()) kraus_b.push_back(io::matrix_to_json(b));
  report.record(before - after, kChannelTol,
                io::witness_text({{"kraus_ops_a", kraus_a},
                                  {"kraus_ops_b", kraus_b},
                                  {"q", io::matrix_to_json(q.matrix())},
                                  {"det_before", before},
                                  {"det_after", after}}));
  return report;
}

ClaimReport check_fen_reduction(const DensityMatrix& q, Eigen::Index dim_a,
                                Eigen::Index dim_b) {
  double whole = entropy::fen(q).plus;
  double part_a =
      entropy::fen(partial_trace(q, dim_a, dim_b, Subsystem::A)).plus;
  double part_b =
      entropy::fen(partial_trace(q, dim_a, dim_b, Subsystem::B)).plus;
  double margin = std::min(whole - part_a, whole - part_b);

  ClaimReport report;
  report.claim_id = "fen-partial-trace";
  report.record(margin, kChannelTol,
                io::witness_text({{"q", io::matrix_to_json(q.matrix())},
                                  {"dim_a", dim_a},
                                  {"dim_b", dim_b},
                                  {"fen_whole", whole},
                                  {"fen_reduced_a", part_a},
                                  {"fen_reduced_b", part_b}}));
  return report;
}

}  // namespace fredent::channels
