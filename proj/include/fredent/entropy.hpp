#pragma once

#include <cstddef>
#include <span>

#include "fredent/claim_report.hpp"
#include "fredent/linalg.hpp"

namespace fredent::entropy {

// Renormalized entropy pair. plus = sum_k (1 + lambda_k) ln(1 + lambda_k),
// minus = -plus; tail_bound caps the contribution of spectrum not included
// in the sum (0 when the full spectrum was used).
struct FenValue {
  double plus = 0.0;
  double minus = 0.0;
  double tail_bound = 0.0;
};

enum class EntropySign { Plus, Minus };

// S_pm(Q) = (I+Q)^{pm(I+Q)} - I. Plus variant is PSD with norm
// (1+lambda_1)^{1+lambda_1} - 1; Minus variant has spectrum in [-0.75, 0]
// for states.
struct EntropyOperator {
  ComplexMatrix matrix;
  EntropySign sign;
};

// Full-spectrum renormalized entropy of a state. 0 < plus <= 2.
FenValue fen(const DensityMatrix& q);

// Entropy of an explicit nonnegative sequence (no matrix needed).
FenValue fen_of_sequence(std::span<const double> spectrum);

// First `keep` terms of a non-increasing nonnegative spectrum summing to
// <= 1; tail_bound = 2 * max(0, 1 - partial sum), from term <= 2 lambda.
// Errors: KeepOutOfRange, NegativeValue.
FenValue fen_truncated(const Spectrum& spectrum, std::size_t keep);

// Closed form for the uniform spectrum (1/n repeated n times):
// (n+1) ln(1+1/n). Decreases to 1 as n grows.
double fen_uniform(double n);

EntropyOperator entropy_operator(const DensityMatrix& q, EntropySign sign);

// log(I + Q) through the eigendecomposition; Q PSD trace class.
ComplexMatrix renorm_log(const TraceClassOperator& q);

// Frechet derivative of Q -> log(I+Q) at q0 in direction q1, via the
// divided-difference kernel (ln(1+a) - ln(1+b)) / (a - b) in q0's
// eigenbasis. Errors: DimMismatch.
ComplexMatrix frechet_derivative_log(const TraceClassOperator& q0,
                                     const TraceClassOperator& q1);

// Checks ||log(I+Q) - log(I+Q2)||_1 <= ||Q - Q2||_1 / (1 - tau), tau the
// larger spectral radius. Margin = rhs - lhs. Errors: SpectralRadiusOne
// when tau >= 1 - 1e-12.
ClaimReport log_continuity_probe(const DensityMatrix& q, const DensityMatrix& q2);

}  // namespace fredent::entropy
