#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fredent/claim_report.hpp"
#include "fredent/linalg.hpp"

namespace fredent::fredholm {

enum class DetRoute { Spectral, Grothendieck, Plemelj, Direct };

// Value of det(I + zA) together with the route that produced it and the
// entire-function bound exp(|z| * ||A||_1), which always dominates |value|.
struct DeterminantResult {
  Complex value;
  DetRoute route;
  std::optional<int> truncation_order;  // set by truncated routes
  double bound;
};

// Eigenvalue-product route: det(I + zA) = prod_k (1 + z lambda_k).
DeterminantResult det_spectral(const TraceClassOperator& a, Complex z = Complex(1, 0));

// Exterior-power route: det(I + zA) = sum_n z^n Tr[wedge^n A], evaluated
// through Newton's identities on traces of matrix powers (no
// eigendecomposition). order >= dim already gives the exact finite sum.
// Errors: NegativeOrder.
DeterminantResult det_grothendieck(const TraceClassOperator& a, Complex z, int order);

// Carleman / trace-log route: det(I + zA) = exp(sum_n (-1)^{n+1}/n z^n
// Tr[A^n]), valid for |z| * rho(A) < 1. Terms below 1e-15 end the sum early.
// Errors: ConvergenceDomainError when |z| * rho(A) >= 1, NegativeOrder.
DeterminantResult det_plemelj(const TraceClassOperator& a, Complex z = Complex(1, 0),
                              int order = 200);

// LU route on the assembled matrix I + zA; works for any square matrix.
// Errors: NotSquare, NonFinite.
DeterminantResult det_direct(const ComplexMatrix& a, Complex z = Complex(1, 0));

// Tr[wedge^n A] = e_n(spectrum), the n-th elementary symmetric polynomial,
// via Newton's identities with compensated summation. Results with
// |e_n| < 1e-14 are flushed to zero. Errors: NegativeOrder.
double wedge_trace(const TraceClassOperator& a, int n);

// Brute-force oracle: assembles the antisymmetric projector P on the n-fold
// tensor power and returns Tr[P A^{kron n} P]. Exponentially sized, so
// guarded to dim <= 6, n <= 3. Errors: NegativeOrder, DimensionTooLarge.
double wedge_trace_oracle(const TraceClassOperator& a, int n);

// <f_1 ^ ... ^ f_n, g_1 ^ ... ^ g_n> = (1/n!) det(R), R_ij = <f_i, g_j>.
// Errors: LengthMismatch (between the two families or among vector dims).
Complex wedge_inner_product(std::span<const ComplexVector> ff,
                            std::span<const ComplexVector> gg);

// det(I + A (+) B) = det(I + A) * det(I + B); returns the left side
// evaluated on the assembled block-diagonal operator.
double det_direct_sum(const TraceClassOperator& a, const TraceClassOperator& b);

// Checks det((I+A)(I+B)) = det(I+A) det(I+B) on one pair; margin is the
// negated relative deviation, tolerance 1e-9. Errors: DimMismatch.
ClaimReport det_product_identity_check(const TraceClassOperator& a,
                                       const TraceClassOperator& b);

}  // namespace fredent::fredholm
