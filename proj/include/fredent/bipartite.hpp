#pragma once

#include <vector>

#include "fredent/channels.hpp"
#include "fredent/claim_report.hpp"
#include "fredent/entropy.hpp"
#include "fredent/linalg.hpp"

namespace fredent::bipartite {

// Pure state on H_A tensor H_B stored as its coefficient matrix
// psi(i, j) = <e_i^A tensor e_j^B | Psi>; rows index A. Unit Frobenius
// norm; Schmidt coefficients cached from the SVD.
class PureBipartiteState {
 public:
  const ComplexMatrix& coeffs() const noexcept { return coeffs_; }
  const Spectrum& schmidt() const noexcept { return schmidt_; }
  Eigen::Index dim_a() const noexcept { return coeffs_.rows(); }
  Eigen::Index dim_b() const noexcept { return coeffs_.cols(); }

 private:
  friend PureBipartiteState make_pure_state(const ComplexMatrix& coeffs);
  PureBipartiteState(ComplexMatrix c, Spectrum s)
      : coeffs_(std::move(c)), schmidt_(std::move(s)) {}

  ComplexMatrix coeffs_;
  Spectrum schmidt_;
};

// Errors: DimTooSmall, NonFinite, NormNotOne (Frobenius norm off 1 by more
// than 1e-10).
PureBipartiteState make_pure_state(const ComplexMatrix& coeffs);

struct SchmidtDecomposition {
  Spectrum coefficients;  // tau_n, non-increasing, sum of squares 1
  ComplexMatrix left;     // dA x dA unitary
  ComplexMatrix right;    // dB x dB unitary; coeffs = left diag(tau) right^dagger
};

SchmidtDecomposition schmidt_decompose(const PureBipartiteState& psi);

// delta_a(i,j) = <F_j^B, F_i^B> over the rows of psi (= psi psi^dagger);
// delta_b(i,j) = <F_j^A, F_i^A> over the columns (= transpose of
// psi^dagger psi). Both are trace-1 PSD with nonzero spectrum tau_n^2, and
// equal the reduced states of |psi><psi|.
struct GramOperators {
  TraceClassOperator delta_a;
  TraceClassOperator delta_b;
};

GramOperators gram_operators(const PureBipartiteState& psi);

// G(psi)(z) = prod_n (1 + z tau_n^2) = det(I + z delta_a).
Complex gramian_function(const PureBipartiteState& psi, Complex z = Complex(1, 0));

// g = ln G(psi)(1), in [ln 2, 1].
double log_gramian(const PureBipartiteState& psi);

// sum_n (1 + tau_n^2) ln(1 + tau_n^2), in (0, 2]; the fen of delta_a.
double fen_pure(const PureBipartiteState& psi);

// Minus-variant entropy operator of delta_a; trace norm <= 2.
entropy::EntropyOperator s_minus_pure(const PureBipartiteState& psi);

// Non-identity part of (I+Q_A) tensor_r (I+Q_B) = I + kron(Q_A, Q_B).
TraceClassOperator renorm_kronecker(const TraceClassOperator& qa,
                                    const TraceClassOperator& qb);

// Verifies det(kron(A, B)) = det(kron(I, B)) * det(kron(A, I))
// (= det(B)^{dim A} * det(A)^{dim B}) by direct determinants; margin is the
// negated relative deviation, tolerance 1e-8. Errors: NotSquare, NonFinite.
ClaimReport kronecker_det_identity_check(const ComplexMatrix& qa,
                                         const ComplexMatrix& qb);

// Block-diagonal additivity: fen(direct sum of w_i Q_i).plus equals the sum
// of the scaled per-block entropies within 1e-10. Weights >= 0, sum 1
// within 1e-10. Errors: WeightsInvalid.
ClaimReport fen_block_additivity(
    const std::vector<std::pair<double, DensityMatrix>>& blocks);

// One eigenterm of a mixed state: eigenvalue weight plus the reduced-state
// pair of the corresponding eigenvector.
struct RdmTerm {
  double weight;
  DensityMatrix state_a;
  DensityMatrix state_b;
};

// Spectral decomposition of q with each eigenvector Schmidt-analyzed;
// sum_n weight_n state_b_n reproduces the B-side partial trace.
// Errors: DimFactorizationMismatch.
std::vector<RdmTerm> mixed_state_rdm_decomposition(const DensityMatrix& q,
                                                   Eigen::Index dim_a,
                                                   Eigen::Index dim_b);

struct OperatorSchmidt {
  Spectrum coefficients;                 // non-increasing, sum of squares = ||Q||_2^2
  std::vector<ComplexMatrix> factors_a;  // dA x dA
  std::vector<ComplexMatrix> factors_b;  // dB x dB; Q = sum tau_n A_n kron B_n
};

// Realigns q (rows (i,i') of A, columns (j,j') of B, row-major pairs) and
// SVDs. Errors: DimFactorizationMismatch.
OperatorSchmidt operator_schmidt(const DensityMatrix& q, Eigen::Index dim_a,
                                 Eigen::Index dim_b);

// Same decomposition through an orthonormal Hermitian operator basis per
// factor and a real SVD; all returned factors are Hermitian.
// Errors: DimFactorizationMismatch.
OperatorSchmidt hermitian_operator_schmidt(const DensityMatrix& q,
                                           Eigen::Index dim_a, Eigen::Index dim_b);

// Orthonormal Hermitian basis under the Hilbert-Schmidt inner product:
// normalized identity, symmetric/antisymmetric off-diagonal pairs, diagonal
// differences. d*d elements.
std::vector<ComplexMatrix> hermitian_basis(Eigen::Index d);

struct RealignmentResult {
  double schmidt_sum;
  bool entanglement_detected;  // schmidt_sum > 1 + 1e-10
};

// Sum of operator-Schmidt coefficients; separable states never exceed 1.
// Errors: DimFactorizationMismatch.
RealignmentResult realignment_criterion(const DensityMatrix& q, Eigen::Index dim_a,
                                        Eigen::Index dim_b);

// (U_A tensor U_B) action on the coefficient matrix: psi' = U_A psi U_B^T.
PureBipartiteState apply_local_unitaries(const PureBipartiteState& psi,
                                         const ComplexMatrix& u_a,
                                         const ComplexMatrix& u_b);

// Compares G, g, fen_pure before/after local unitaries; margin is the
// negated worst absolute difference, tolerance 1e-10.
// Errors: DimMismatch, NotUnitary.
ClaimReport local_unitary_invariance_check(const PureBipartiteState& psi,
                                           const ComplexMatrix& u_a,
                                           const ComplexMatrix& u_b);

// Probe (not an invariant): does det(I + reduced A-state) decrease when a
// local channel acts on |psi><psi|? The natural reading admits increases
// under local mixing, so this only records the margin
// G(psi) - det(I + reduced output). Errors: DimMismatch.
ClaimReport gramian_local_channel_probe(const PureBipartiteState& psi,
                                        const channels::KrausChannel& phi_a);

}  // namespace fredent::bipartite
