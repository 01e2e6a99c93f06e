#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fredent/claim_report.hpp"
#include "fredent/linalg.hpp"

namespace fredent::majorization {

// Non-increasing nonnegative sequence; construction sorts and rejects
// negative values (entries above -1e-15 are clamped to 0).
class OrderedSequence {
 public:
  explicit OrderedSequence(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;

 private:
  std::vector<double> values_;
};

enum class MajorizationRelation { Additive, Multiplicative };

// margins[n] is the prefix-n slack (dominating side minus dominated side;
// log-domain for the multiplicative relation). holds iff every margin is
// >= -1e-12. first_violation_index is the smallest violating prefix length
// (1-based).
struct MajorizationVerdict {
  MajorizationRelation relation;
  bool holds = false;
  std::optional<std::size_t> first_violation_index;
  std::vector<double> margins;
};

// a is additively majorized by b: every prefix sum of a is dominated by
// the matching prefix sum of b. Weak relation, no total constraint;
// shorter sequences are zero-padded.
MajorizationVerdict additive_majorizes(const OrderedSequence& a,
                                       const OrderedSequence& b);

// a is multiplicatively majorized by b: prefix products of (1 + a_i)
// dominated by those of (1 + b_i), all prefixes including the last
// (no total constraint). Compared in the log domain.
MajorizationVerdict multiplicative_majorizes(const OrderedSequence& a,
                                             const OrderedSequence& b);

// Samples random sequence pairs, keeps those where the multiplicative
// relation holds, and checks the additive relation on ln(1 + values)
// follows. trials counts sampled pairs; margin is the worst additive slack
// among multiplicative-holding pairs.
ClaimReport m_implies_additive_probe(std::int64_t trials, int dim, std::uint64_t seed);

// Gram numbers g_n = prod_{i<=n} (1 + lambda_i) = det(I + Q P_n), P_n the
// projector onto the top-n eigenspace. Non-decreasing; g_dim = det(I + Q).
std::vector<double> gram_numbers(const DensityMatrix& q);

// Multiplicative majorization of states through their Gram numbers:
// holds iff g_n(q1) <= g_n(q2) + 1e-12 for every n. Shorter Gram sequences
// are padded with their final value.
MajorizationVerdict state_m_majorizes(const DensityMatrix& q1, const DensityMatrix& q2);

// d^2/dt^2 of t -> fen of the interpolated spectrum t lambda + (1-t) mu
// (co-sorted non-increasing): sum (lambda_n - mu_n)^2 / (1 + t lambda_n +
// (1-t) mu_n). Nonnegative, so fen is convex along spectral lines.
// Errors: DimMismatch.
double fen_interpolation_second_derivative(const DensityMatrix& q1,
                                           const DensityMatrix& q2, double t);

// One factor of a mixed-permutation channel: apply `permutation` with
// probability `weight`. permutation[i] = source index, i.e. the factor
// matrix P has P(i, permutation[i]) = 1.
struct PermutationFactor {
  double weight;
  std::vector<std::size_t> permutation;
};

// Constructive conversion for a <= b (additive majorization, equal sums
// within 1e-10): builds a doubly stochastic D with D b = a from
// T-transforms (sorting permutations interleaved) and Birkhoff-decomposes
// D into at most (len-1)^2 + 1 permutations with convex weights (sum 1
// within 1e-12). Shorter input is zero-padded.
// Errors: SumMismatch, NotMajorized.
std::vector<PermutationFactor> construct_conversion_channel(const OrderedSequence& a,
                                                            const OrderedSequence& b);

// Hypothesis-conditional probe of entropy monotonicity: samples state
// pairs, counts those whose entropy-operator spectra satisfy the
// multiplicative relation (reported in trials), and on those checks
// fen(q1).plus <= fen(q2).plus. Margin is the conditional fen slack.
ClaimReport fen_monotonicity_probe(std::int64_t trials, int dim, std::uint64_t seed);

}  // namespace fredent::majorization
