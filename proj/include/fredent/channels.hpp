#pragma once

#include <vector>

#include "fredent/claim_report.hpp"
#include "fredent/linalg.hpp"

namespace fredent::channels {

enum class Completeness { TracePreserving, TraceNonIncreasing };
enum class Subsystem { A, B };

// Kraus-form operation Phi(Q) = sum_i A_i Q A_i^dagger. Construction
// classifies sum A_i^dagger A_i (= I: trace preserving; <= I: trace
// non-increasing) and records whether the transposed sum A_i A_i^dagger is
// contractive, the hypothesis some determinant claims gate on.
class KrausChannel {
 public:
  const std::vector<ComplexMatrix>& kraus_ops() const noexcept { return ops_; }
  Completeness completeness() const noexcept { return completeness_; }
  Eigen::Index input_dim() const noexcept { return in_dim_; }
  Eigen::Index output_dim() const noexcept { return out_dim_; }
  // sum A_i A_i^dagger == I within tolerance.
  bool unital() const noexcept { return unital_; }
  // sum A_i A_i^dagger <= I within tolerance.
  bool output_sum_contractive() const noexcept { return output_sum_contractive_; }

 private:
  friend KrausChannel make_kraus_channel(std::vector<ComplexMatrix> ops);
  KrausChannel() = default;

  std::vector<ComplexMatrix> ops_;
  Completeness completeness_ = Completeness::TracePreserving;
  Eigen::Index in_dim_ = 0;
  Eigen::Index out_dim_ = 0;
  bool unital_ = false;
  bool output_sum_contractive_ = false;
};

// Validates shapes, finiteness, and sum A_i^dagger A_i <= I (within 1e-10;
// == I classifies as trace preserving).
// Errors: EmptyKraus, DimMismatch, NonFinite, KrausNotContractive.
KrausChannel make_kraus_channel(std::vector<ComplexMatrix> ops);

// Convex mixture of unitaries sqrt(w_i) U_i; bistochastic.
// Errors: WeightsInvalid (negative, not summing to 1 within 1e-12, or
// count mismatch), NotUnitary.
KrausChannel mixed_unitary(const std::vector<double>& weights,
                           const std::vector<ComplexMatrix>& unitaries);

KrausChannel identity_channel(Eigen::Index dim);

// Partial trace over the complement of `keep`, in Kraus form
// (A_i = <i| on the traced factor). Errors: DimTooSmall.
KrausChannel partial_trace_channel(Eigen::Index dim_a, Eigen::Index dim_b,
                                   Subsystem keep);

// Tensor product channel with Kraus family {A_i kron B_j}.
KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b);

// Output is Hermitian PSD with trace <= input trace; returned as trace
// class (a trace non-increasing channel may leave a sub-normalized state).
// Errors: DimMismatch.
TraceClassOperator apply_channel(const KrausChannel& phi, const DensityMatrix& q);

// Reduced state on `keep`; realized through partial_trace_channel.
// Errors: DimFactorizationMismatch.
DensityMatrix partial_trace(const DensityMatrix& q, Eigen::Index dim_a,
                            Eigen::Index dim_b, Subsystem keep);

// Probes det(I + Phi(Q)) <= det(I + Q) for one (channel, state) pair;
// margin = det before - det after. Requires the transposed-sum hypothesis
// sum A_i A_i^dagger <= I. Documented counterexamples exist (the claim is
// false in general). Errors: KrausConditionUnmet, DimMismatch.
ClaimReport check_det_contraction(const KrausChannel& phi, const DensityMatrix& q);

// Same probe for a product channel phi_a kron phi_b acting on a bipartite
// state; no Kraus-condition gate (the product construction is the
// hypothesis here). Errors: DimMismatch.
ClaimReport check_separable_contraction(const KrausChannel& phi_a,
                                        const KrausChannel& phi_b,
                                        const DensityMatrix& q);

// Probes fen(Q) >= fen of each partial trace; margin is the smaller of the
// two slacks. Documented counterexamples exist. Errors:
// DimFactorizationMismatch.
ClaimReport check_fen_reduction(const DensityMatrix& q, Eigen::Index dim_a,
                                Eigen::Index dim_b);

}  // namespace fredent::channels
