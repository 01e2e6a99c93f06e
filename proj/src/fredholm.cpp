#include "fredent/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fredent/io.hpp"

namespace fredent::fredholm {

namespace {

constexpr double kWedgeFlushTol = 1e-14;
constexpr double kPlemeljTermTol = 1e-15;

// p_k = Tr[A^k], k = 1..count, by iterated multiplication. Deliberately
// avoids the cached eigendecomposition so truncated routes stay independent
// of the spectral route.
std::vector<double> power_sums(const ComplexMatrix& a, int count) {
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(count));
  ComplexMatrix pow = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int k = 1; k <= count; ++k) {
    pow = pow * a;
    p.push_back(pow.trace().real());
  }
  return p;
}

// Newton's identities: n e_n = sum_{k=1..n} (-1)^{k-1} e_{n-k} p_k.
std::vector<double> elementary_from_power_sums(const std::vector<double>& p) {
  std::vector<double> e(p.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t n = 1; n < e.size(); ++n) {
    KahanSum acc;
    double sign = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc.add(sign * e[n - k] * p[k - 1]);
      sign = -sign;
    }
    e[n] = acc.value() / static_cast<double>(n);
  }
  return e;
}

double entire_bound(double trace_norm, Complex z) {
  return std::exp(std::abs(z) * trace_norm);
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

DeterminantResult det_spectral(const TraceClassOperator& a, Complex z) {
  Complex value(1.0, 0.0);
  for (double lam : a.spectrum().values()) value *= (1.0 + z * lam);
  return DeterminantResult{value, DetRoute::Spectral, std::nullopt,
                           entire_bound(a.trace_norm(), z)};
}

DeterminantResult det_grothendieck(const TraceClassOperator& a, Complex z, int order) {
  if (order < 0) throw Error("NegativeOrder");
  int n_max = std::min<int>(order, static_cast<int>(a.dim()));
  std::vector<double> e =
      elementary_from_power_sums(power_sums(a.matrix(), n_max));
  Complex value(0.0, 0.0);
  Complex zn(1.0, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    double en = (std::abs(e[static_cast<std::size_t>(n)]) < kWedgeFlushTol)
                    ? 0.0
                    : e[static_cast<std::size_t>(n)];
    value += zn * en;
    zn *= z;
  }
  return DeterminantResult{value, DetRoute::Grothendieck, n_max,
                           entire_bound(a.trace_norm(), z)};
}

DeterminantResult det_plemelj(const TraceClassOperator& a, Complex z, int order) {
  if (order < 0) throw Error("NegativeOrder");
  double radius = std::abs(z) * a.spectral_radius();
  if (radius >= 1.0) {
    throw Error("ConvergenceDomainError",
                "|z| * spectral radius = " + std::to_string(radius));
  }
  ComplexMatrix pow = ComplexMatrix::Identity(a.dim(), a.dim());
  Complex zn(1.0, 0.0);
  Complex log_sum(0.0, 0.0);
  double sign = 1.0;
  int used = 0;
  for (int n = 1; n <= order; ++n) {
    pow = pow * a.matrix();
    zn *= z;
    Complex term = sign * zn * pow.trace() / static_cast<double>(n);
    log_sum += term;
    sign = -sign;
    used = n;
    if (std::abs(term) < kPlemeljTermTol) break;
  }
  return DeterminantResult{std::exp(log_sum), DetRoute::Plemelj, used,
                           entire_bound(a.trace_norm(), z)};
}

DeterminantResult det_direct(const ComplexMatrix& a, Complex z) {
  require_square(a, "determinant argument");
  require_finite(a, "determinant argument");
  ComplexMatrix m = ComplexMatrix::Identity(a.rows(), a.cols()) + z * a;
  Complex value = m.determinant();
  double tn = svd(a).singular_values.sum();
  return DeterminantResult{value, DetRoute::Direct, std::nullopt,
                           entire_bound(tn, z)};
}

double wedge_trace(const TraceClassOperator& a, int n) {
  if (n < 0) throw Error("NegativeOrder");
  if (n == 0) return 1.0;
  if (n > a.dim()) return 0.0;
  std::vector<double> e = elementary_from_power_sums(power_sums(a.matrix(), n));
  double en = e[static_cast<std::size_t>(n)];
  return (std::abs(en) < kWedgeFlushTol) ? 0.0 : en;
}

double wedge_trace_oracle(const TraceClassOperator& a, int n) {
  if (n < 0) throw Error("NegativeOrder");
  if (n == 0) return 1.0;
  if (n > a.dim()) return 0.0;
  if (a.dim() > 6 || n > 3) {
    throw Error("DimensionTooLarge", "oracle is limited to dim <= 6, n <= 3");
  }

  const Eigen::Index d = a.dim();
  Eigen::Index dn = 1;
  for (int k = 0; k < n; ++k) dn *= d;

  // Antisymmetric projector P = (1/n!) sum_pi sgn(pi) R_pi, where R_pi
  // permutes tensor factors: component k of the image index equals
  // component pi^{-1}(k) of the source index.
  ComplexMatrix proj = ComplexMatrix::Zero(dn, dn);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    double sgn = (inversions % 2 == 0) ? 1.0 : -1.0;

    for (Eigen::Index col = 0; col < dn; ++col) {
      // Decode col as (j_1..j_n), row-major.
      std::vector<Eigen::Index> j(static_cast<std::size_t>(n));
      Eigen::Index rem = col;
      for (int k = n - 1; k >= 0; --k) {
        j[static_cast<std::size_t>(k)] = rem % d;
        rem /= d;
      }
      Eigen::Index row = 0;
      for (int k = 0; k < n; ++k) {
        // image component k = source component perm[k]
        row = row * d + j[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
      }
      proj(row, col) += sgn;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  proj /= factorial(n);

  ComplexMatrix tensor_power = a.matrix();
  for (int k = 1; k < n; ++k) tensor_power = kron(tensor_power, a.matrix());

  return (proj * tensor_power * proj).trace().real();
}

Complex wedge_inner_product(std::span<const ComplexVector> ff,
                            std::span<const ComplexVector> gg) {
  if (ff.size() != gg.size()) {
    throw Error("LengthMismatch", "wedge factor counts differ");
  }
  const std::size_t n = ff.size();
  if (n == 0) return Complex(1.0, 0.0);
  Eigen::Index dim = ff[0].size();
  for (const auto& v : ff)
    if (v.size() != dim) throw Error("LengthMismatch", "vector dims differ");
  for (const auto& v : gg)
    if (v.size() != dim) throw Error("LengthMismatch", "vector dims differ");

  ComplexMatrix r(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          ff[i].dot(gg[j]);
  return r.determinant() / factorial(static_cast<int>(n));
}

double det_direct_sum(const TraceClassOperator& a, const TraceClassOperator& b) {
  Eigen::Index da = a.dim();
  Eigen::Index db = b.dim();
  ComplexMatrix block = ComplexMatrix::Zero(da + db, da + db);
  block.topLeftCorner(da, da) = a.matrix();
  block.bottomRightCorner(db, db) = b.matrix();
  return det_spectral(make_trace_class(block)).value.real();
}

ClaimReport det_product_identity_check(const TraceClassOperator& a,
                                       const TraceClassOperator& b) {
  if (a.dim() != b.dim()) throw Error("DimMismatch");
  ComplexMatrix ia = ComplexMatrix::Identity(a.dim(), a.dim()) + a.matrix();
  ComplexMatrix ib = ComplexMatrix::Identity(b.dim(), b.dim()) + b.matrix();
  Complex lhs = ComplexMatrix(ia * ib).determinant();
  Complex rhs = ia.determinant() * ib.determinant();
  double deviation = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));

  ClaimReport report;
  report.claim_id = "appA-product-identity";
  report.record(-deviation, 1e-9,
                io::witness_text({{"a", io::matrix_to_json(a.matrix())},
                                  {"b", io::matrix_to_json(b.matrix())}}));
  return report;
}

}  // namespace fredent::fredholm
