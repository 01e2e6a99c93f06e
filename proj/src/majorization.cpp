#include "fredent/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fredent/entropy.hpp"
#include "fredent/io.hpp"
#include "fredent/rng.hpp"

namespace fredent::majorization {

namespace {

constexpr double kPrefixTol = 1e-12;
constexpr double kSumTol = 1e-10;

std::vector<double> padded(const OrderedSequence& s, std::size_t len) {
  std::vector<double> out = s.values();
  out.resize(len, 0.0);
  return out;
}

MajorizationVerdict prefix_verdict(MajorizationRelation relation,
                                   const std::vector<double>& a,
                                   const std::vector<double>& b) {
  MajorizationVerdict v;
  v.relation = relation;
  v.holds = true;
  KahanSum pa, pb;
  for (std::size_t n = 0; n < a.size(); ++n) {
    pa.add(a[n]);
    pb.add(b[n]);
    double margin = pb.value() - pa.value();
    v.margins.push_back(margin);
    if (margin < -kPrefixTol && v.holds) {
      v.holds = false;
      v.first_violation_index = n + 1;
    }
  }
  return v;
}

}  // namespace

OrderedSequence::OrderedSequence(std::vector<double> values)
    : values_(std::move(values)) {
  for (double& v : values_) {
    if (!std::isfinite(v)) throw Error("NonFinite", "sequence value");
    if (v < 0.0) {
      if (v < -1e-15) {
        throw Error("NegativeValue", "sequence value " + std::to_string(v));
      }
      v = 0.0;
    }
  }
  std::stable_sort(values_.begin(), values_.end(), std::greater<double>());
}

double OrderedSequence::sum() const {
  KahanSum acc;
  for (double v : values_) acc.add(v);
  return acc.value();
}

MajorizationVerdict additive_majorizes(const OrderedSequence& a,
                                       const OrderedSequence& b) {
  std::size_t len = std::max(a.size(), b.size());
  return prefix_verdict(MajorizationRelation::Additive, padded(a, len),
                        padded(b, len));
}

MajorizationVerdict multiplicative_majorizes(const OrderedSequence& a,
                                             const OrderedSequence& b) {
  std::size_t len = std::max(a.size(), b.size());
  std::vector<double> la = padded(a, len);
  std::vector<double> lb = padded(b, len);
  // Compare prefix products as prefix sums of ln(1+x); zero pads map to 0.
  for (double& x : la) x = std::log1p(x);
  for (double& x : lb) x = std::log1p(x);
  return prefix_verdict(MajorizationRelation::Multiplicative, la, lb);
}

ClaimReport m_implies_additive_probe(std::int64_t trials, int dim,
                                     std::uint64_t seed) {
  Sampler rng(seed);
  ClaimReport report;
  report.claim_id = "m-implies-additive";
  for (std::int64_t t = 0; t < trials; ++t) {
    std::size_t len = 1 + static_cast<std::size_t>(rng.below(
                              static_cast<std::uint64_t>(std::max(1, dim))));
    std::vector<double> av(len), bv(len);
    for (double& x : av) x = rng.uniform();
    for (double& x : bv) x = rng.uniform();
    OrderedSequence a(std::move(av)), b(std::move(bv));
    ++report.trials;
    if (!multiplicative_majorizes(a, b).holds) continue;

    MajorizationVerdict add = additive_majorizes(a, b);
    double margin = *std::min_element(add.margins.begin(), add.margins.end());
    if (margin < report.worst_margin) report.worst_margin = margin;
    if (!add.holds) {
      ++report.violations;
      if (!report.witness) {
        report.witness = io::witness_text({{"a", io::json(a.values())},
                                           {"b", io::json(b.values())}});
      }
    }
  }
  return report;
}

std::vector<double> gram_numbers(const DensityMatrix& q) {
  std::vector<double> g;
  g.reserve(q.spectrum().size());
  double prod = 1.0;
  for (double lam : q.spectrum().values()) {
    prod *= (1.0 + lam);
    g.push_back(prod);
  }
  return g;
}

MajorizationVerdict state_m_majorizes(const DensityMatrix& q1,
                                      const DensityMatrix& q2) {
  std::vector<double> g1 = gram_numbers(q1);
  std::vector<double> g2 = gram_numbers(q2);
  // A missing trailing block contributes factor 1, so pad with the final
  // value.
  std::size_t len = std::max(g1.size(), g2.size());
  g1.resize(len, g1.empty() ? 1.0 : g1.back());
  g2.resize(len, g2.empty() ? 1.0 : g2.back());

  MajorizationVerdict v;
  v.relation = MajorizationRelation::Multiplicative;
  v.holds = true;
  for (std::size_t n = 0; n < len; ++n) {
    double margin = g2[n] - g1[n];
    v.margins.push_back(margin);
    if (margin < -kPrefixTol && v.holds) {
      v.holds = false;
      v.first_violation_index = n + 1;
    }
  }
  return v;
}

double fen_interpolation_second_derivative(const DensityMatrix& q1,
                                           const DensityMatrix& q2, double t) {
  if (q1.dim() != q2.dim()) throw Error("DimMismatch");
  const auto& lam = q1.spectrum().values();
  const auto& mu = q2.spectrum().values();
  KahanSum acc;
  for (std::size_t n = 0; n < lam.size(); ++n) {
    double diff = lam[n] - mu[n];
    acc.add(diff * diff / (1.0 + t * lam[n] + (1.0 - t) * mu[n]));
  }
  return acc.value();
}

namespace {

using RealMatrix = Eigen::MatrixXd;

// Kuhn augmenting-path matching on the support graph R(i,j) > threshold.
// match_col[j] = row matched to column j, or -1.
bool try_augment(const RealMatrix& r, double threshold, Eigen::Index row,
                 std::vector<bool>& visited, std::vector<Eigen::Index>& match_col) {
  for (Eigen::Index j = 0; j < r.cols(); ++j) {
    if (visited[static_cast<std::size_t>(j)] || r(row, j) <= threshold) continue;
    visited[static_cast<std::size_t>(j)] = true;
    if (match_col[static_cast<std::size_t>(j)] < 0 ||
        try_augment(r, threshold, match_col[static_cast<std::size_t>(j)], visited,
                    match_col)) {
      match_col[static_cast<std::size_t>(j)] = row;
      return true;
    }
  }
  return false;
}

// Perfect matching as perm[i] = column matched to row i; empty on failure.
std::vector<std::size_t> support_matching(const RealMatrix& r, double threshold) {
  const Eigen::Index d = r.rows();
  std::vector<Eigen::Index> match_col(static_cast<std::size_t>(d), -1);
  for (Eigen::Index i = 0; i < d; ++i) {
    std::vector<bool> visited(static_cast<std::size_t>(d), false);
    if (!try_augment(r, threshold, i, visited, match_col)) return {};
  }
  std::vector<std::size_t> perm(static_cast<std::size_t>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    perm[static_cast<std::size_t>(match_col[static_cast<std::size_t>(j)])] =
        static_cast<std::size_t>(j);
  }
  return perm;
}

// Caratheodory reduction: while more factors remain than the Birkhoff
// polytope dimension + 1, find an affine dependence among the permutation
// vertices and shift weights along it until one hits zero.
void reduce_to_caratheodory(std::vector<PermutationFactor>& factors,
                            std::size_t len, std::size_t cap) {
  const auto d = static_cast<Eigen::Index>(len);
  while (factors.size() > cap) {
    const auto n = static_cast<Eigen::Index>(factors.size());
    RealMatrix a = RealMatrix::Zero(d * d + 1, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < len; ++i) {
        auto j = static_cast<Eigen::Index>(
            factors[static_cast<std::size_t>(c)].permutation[i]);
        a(static_cast<Eigen::Index>(i) * d + j, c) = 1.0;
      }
      a(d * d, c) = 1.0;
    }
    Eigen::FullPivLU<RealMatrix> lu(a);
    if (lu.dimensionOfKernel() == 0) break;  // affinely independent already
    Eigen::VectorXd dep = lu.kernel().col(0);
    dep /= dep.cwiseAbs().maxCoeff();

    // Entries of dep sum to 0 and are not all 0, so one orientation has a
    // usable negative direction; take the finite step that zeroes a weight.
    auto step_for = [&](const Eigen::VectorXd& c) {
      double s = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < n; ++i) {
        if (c(i) < -1e-12) {
          s = std::min(s, factors[static_cast<std::size_t>(i)].weight / -c(i));
        }
      }
      return s;
    };
    double step = step_for(dep);
    if (!std::isfinite(step)) {
      dep = -dep;
      step = step_for(dep);
    }
    if (!std::isfinite(step)) break;  // numerically degenerate dependence

    for (Eigen::Index i = 0; i < n; ++i) {
      factors[static_cast<std::size_t>(i)].weight += step * dep(i);
    }
    std::size_t before = factors.size();
    std::erase_if(factors, [](const PermutationFactor& f) {
      return f.weight <= 1e-14;
    });
    if (factors.size() == before) break;  // no progress; avoid spinning
  }
}

}  // namespace

std::vector<PermutationFactor> construct_conversion_channel(
    const OrderedSequence& a, const OrderedSequence& b) {
  const std::size_t len = std::max(a.size(), b.size());
  std::vector<double> target = padded(a, len);
  std::vector<double> x = padded(b, len);
  const auto d = static_cast<Eigen::Index>(len);

  if (std::abs(a.sum() - b.sum()) > kSumTol) {
    throw Error("SumMismatch", "sequence sums differ by " +
                                   std::to_string(std::abs(a.sum() - b.sum())));
  }
  if (!additive_majorizes(a, b).holds) throw Error("NotMajorized");

  RealMatrix dsm = RealMatrix::Identity(d, d);

  // Muirhead chain: keep x sorted (folding the sorting permutation into the
  // accumulated matrix), then move mass from the first over-target
  // coordinate to the first under-target one. Sortedness of both vectors
  // guarantees the donor exceeds the receiver, so each move is a
  // T-transform, and each move pins one more coordinate to the target.
  const std::size_t step_cap = 4 * len * len + 4;
  for (std::size_t step = 0;; ++step) {
    if (step > step_cap) {
      throw Error("InternalError", "conversion chain failed to converge");
    }

    std::vector<std::size_t> order(len);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return x[i] > x[j]; });
    bool already_sorted = true;
    for (std::size_t i = 0; i < len; ++i) {
      if (order[i] != i) already_sorted = false;
    }
    if (!already_sorted) {
      RealMatrix p = RealMatrix::Zero(d, d);
      std::vector<double> sorted_x(len);
      for (std::size_t i = 0; i < len; ++i) {
        p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(order[i])) = 1.0;
        sorted_x[i] = x[order[i]];
      }
      dsm = p * dsm;
      x = std::move(sorted_x);
    }

    std::size_t j = len;
    for (std::size_t i = 0; i < len; ++i) {
      if (x[i] - target[i] > kPrefixTol) {
        j = i;
        break;
      }
    }
    if (j == len) break;  // equal sums: no excess means no deficit either

    std::size_t k = len;
    for (std::size_t i = j + 1; i < len; ++i) {
      if (target[i] - x[i] > kPrefixTol) {
        k = i;
        break;
      }
    }
    if (k == len) {
      throw Error("InternalError", "excess without matching deficit");
    }

    double delta = std::min(x[j] - target[j], target[k] - x[k]);
    double gap = x[j] - x[k];  // >= excess + deficit > delta
    double t = delta / gap;
    RealMatrix tm = RealMatrix::Identity(d, d);
    auto ej = static_cast<Eigen::Index>(j);
    auto ek = static_cast<Eigen::Index>(k);
    tm(ej, ej) = 1.0 - t;
    tm(ej, ek) = t;
    tm(ek, ej) = t;
    tm(ek, ek) = 1.0 - t;
    dsm = tm * dsm;
    x[j] -= delta;
    x[k] += delta;
  }

  // Birkhoff decomposition of the accumulated doubly stochastic matrix.
  std::vector<PermutationFactor> factors;
  RealMatrix residual = dsm;
  double remaining = 1.0;
  const std::size_t factor_cap = (len > 0 ? (len - 1) * (len - 1) : 0) + 1;
  while (remaining > 1e-12) {
    if (factors.size() > len * len + 1) {
      throw Error("InternalError", "Birkhoff decomposition failed to terminate");
    }
    std::vector<std::size_t> perm = support_matching(residual, 1e-13);
    if (perm.empty()) {
      throw Error("InternalError", "no matching in doubly stochastic support");
    }
    double w = remaining;
    for (std::size_t i = 0; i < len; ++i) {
      w = std::min(w, residual(static_cast<Eigen::Index>(i),
                               static_cast<Eigen::Index>(perm[i])));
    }
    for (std::size_t i = 0; i < len; ++i) {
      auto& cell = residual(static_cast<Eigen::Index>(i),
                            static_cast<Eigen::Index>(perm[i]));
      cell = std::max(0.0, cell - w);
    }
    factors.push_back(PermutationFactor{w, std::move(perm)});
    remaining -= w;
  }
  // Give rounding dust to the heaviest factor so weights sum to 1 exactly.
  if (!factors.empty() && remaining != 0.0) {
    auto heaviest = std::max_element(
        factors.begin(), factors.end(),
        [](const auto& f, const auto& g) { return f.weight < g.weight; });
    heaviest->weight += remaining;
  }
  reduce_to_caratheodory(factors, len, factor_cap);
  return factors;
}

ClaimReport fen_monotonicity_probe(std::int64_t trials, int dim,
                                   std::uint64_t seed) {
  Sampler rng(seed);
  ClaimReport report;
  report.claim_id = "fen-monotonicity";
  for (std::int64_t t = 0; t < trials; ++t) {
    DensityMatrix q1 = rng.density(dim);
    DensityMatrix q2 = rng.density(dim);
    // Hypothesis: the entropy-operator spectra satisfy the multiplicative
    // relation, i.e. prefix products of (1+lambda)^{1+lambda} dominate.
    auto lifted = [](const DensityMatrix& q) {
      std::vector<double> out;
      for (double lam : q.spectrum().values()) out.push_back(entropy_f_plus(lam));
      return OrderedSequence(std::move(out));
    };
    if (!multiplicative_majorizes(lifted(q1), lifted(q2)).holds) continue;

    double margin = entropy::fen(q2).plus - entropy::fen(q1).plus;
    report.record(margin, 1e-10,
                  io::witness_text({{"q1", io::matrix_to_json(q1.matrix())},
                                    {"q2", io::matrix_to_json(q2.matrix())}}));
  }
  return report;
}

}  // namespace fredent::majorization
