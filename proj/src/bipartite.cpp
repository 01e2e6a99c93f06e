#include "fredent/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fredent/fredholm.hpp"
#include "fredent/io.hpp"

namespace fredent::bipartite {

namespace {

void require_factor(const DensityMatrix& q, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != q.dim()) {
    throw Error("DimFactorizationMismatch",
                std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                    " does not factor dim " + std::to_string(q.dim()));
  }
}

// |psi> as a dA*dB vector in the kron basis (row-major pairs).
ComplexVector vectorize(const ComplexMatrix& coeffs) {
  ComplexVector v(coeffs.size());
  for (Eigen::Index i = 0; i < coeffs.rows(); ++i)
    for (Eigen::Index j = 0; j < coeffs.cols(); ++j)
      v(i * coeffs.cols() + j) = coeffs(i, j);
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index rows,
                          Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

}  // namespace

PureBipartiteState make_pure_state(const ComplexMatrix& coeffs) {
  if (coeffs.rows() < 1 || coeffs.cols() < 1) throw Error("DimTooSmall");
  require_finite(coeffs, "pure state coefficients");
  double norm = coeffs.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw Error("NormNotOne", "Frobenius norm = " + std::to_string(norm));
  }
  SvdResult s = svd(coeffs);
  return PureBipartiteState(coeffs, std::move(s.singular_values));
}

SchmidtDecomposition schmidt_decompose(const PureBipartiteState& psi) {
  SvdResult s = svd(psi.coeffs());
  return SchmidtDecomposition{std::move(s.singular_values), std::move(s.u),
                              std::move(s.v)};
}

GramOperators gram_operators(const PureBipartiteState& psi) {
  const ComplexMatrix& c = psi.coeffs();
  // Entrywise: delta_a(i,j) = <row_j, row_i>, delta_b(i,j) = <col_j, col_i>.
  ComplexMatrix da = c * c.adjoint();
  ComplexMatrix db = (c.adjoint() * c).transpose();
  return GramOperators{make_trace_class(da), make_trace_class(db)};
}

Complex gramian_function(const PureBipartiteState& psi, Complex z) {
  Complex g(1.0, 0.0);
  for (double tau : psi.schmidt().values()) g *= (1.0 + z * tau * tau);
  return g;
}

double log_gramian(const PureBipartiteState& psi) {
  KahanSum acc;
  for (double tau : psi.schmidt().values()) acc.add(std::log1p(tau * tau));
  return acc.value();
}

double fen_pure(const PureBipartiteState& psi) {
  KahanSum acc;
  for (double tau : psi.schmidt().values()) acc.add(xlog1p_shifted(tau * tau));
  return acc.value();
}

entropy::EntropyOperator s_minus_pure(const PureBipartiteState& psi) {
  GramOperators gram = gram_operators(psi);
  ComplexMatrix m = matrix_function(gram.delta_a, entropy_f_minus);
  return entropy::EntropyOperator{std::move(m), entropy::EntropySign::Minus};
}

TraceClassOperator renorm_kronecker(const TraceClassOperator& qa,
                                    const TraceClassOperator& qb) {
  return make_trace_class(kron(qa.matrix(), qb.matrix()));
}

ClaimReport kronecker_det_identity_check(const ComplexMatrix& qa,
                                         const ComplexMatrix& qb) {
  require_square(qa, "Kronecker factor");
  require_square(qb, "Kronecker factor");
  require_finite(qa, "Kronecker factor");
  require_finite(qb, "Kronecker factor");
  Eigen::Index da = qa.rows();
  Eigen::Index db = qb.rows();

  Complex lhs = kron(qa, qb).determinant();
  Complex rhs = kron(ComplexMatrix::Identity(da, da), qb).determinant() *
                kron(qa, ComplexMatrix::Identity(db, db)).determinant();
  double deviation = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));

  ClaimReport report;
  report.claim_id = "kronecker-formula";
  report.record(-deviation, 1e-8,
                io::witness_text({{"qa", io::matrix_to_json(qa)},
                                  {"qb", io::matrix_to_json(qb)}}));
  return report;
}

ClaimReport fen_block_additivity(
    const std::vector<std::pair<double, DensityMatrix>>& blocks) {
  if (blocks.empty()) throw Error("WeightsInvalid", "no blocks");
  double total = 0.0;
  Eigen::Index dim = 0;
  for (const auto& [w, q] : blocks) {
    if (!(w >= 0.0)) throw Error("WeightsInvalid", "negative weight");
    total += w;
    dim += q.dim();
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error("WeightsInvalid", "weights sum to " + std::to_string(total));
  }

  ComplexMatrix assembled = ComplexMatrix::Zero(dim, dim);
  Eigen::Index offset = 0;
  KahanSum per_block;
  for (const auto& [w, q] : blocks) {
    assembled.block(offset, offset, q.dim(), q.dim()) = w * q.matrix();
    offset += q.dim();
    for (double mu : q.spectrum().values()) per_block.add(xlog1p_shifted(w * mu));
  }
  double whole = entropy::fen(make_density(assembled)).plus;
  double deviation = std::abs(whole - per_block.value());

  ClaimReport report;
  report.claim_id = "fen-block-additivity";
  io::json jblocks = io::json::array();
  for (const auto& [w, q] : blocks) {
    jblocks.push_back(
        io::json{{"weight", w}, {"q", io::matrix_to_json(q.matrix())}});
  }
  report.record(-deviation, 1e-10, io::witness_text({{"blocks", jblocks}}));
  return report;
}

std::vector<RdmTerm> mixed_state_rdm_decomposition(const DensityMatrix& q,
                                                   Eigen::Index dim_a,
                                                   Eigen::Index dim_b) {
  require_factor(q, dim_a, dim_b);
  std::vector<RdmTerm> terms;
  terms.reserve(static_cast<std::size_t>(q.dim()));
  for (Eigen::Index n = 0; n < q.dim(); ++n) {
    ComplexVector vec = q.eigenbasis().col(n);
    PureBipartiteState eigenstate =
        make_pure_state(unvectorize(vec / vec.norm(), dim_a, dim_b));
    GramOperators gram = gram_operators(eigenstate);
    terms.push_back(RdmTerm{q.spectrum()[static_cast<std::size_t>(n)],
                            make_density(gram.delta_a.matrix()),
                            make_density(gram.delta_b.matrix())});
  }
  return terms;
}

OperatorSchmidt operator_schmidt(const DensityMatrix& q, Eigen::Index dim_a,
                                 Eigen::Index dim_b) {
  require_factor(q, dim_a, dim_b);
  // Realignment: R((i,i'), (j,j')) = Q((i,j), (i',j')).
  ComplexMatrix r(dim_a * dim_a, dim_b * dim_b);
  for (Eigen::Index i = 0; i < dim_a; ++i)
    for (Eigen::Index ip = 0; ip < dim_a; ++ip)
      for (Eigen::Index j = 0; j < dim_b; ++j)
        for (Eigen::Index jp = 0; jp < dim_b; ++jp)
          r(i * dim_a + ip, j * dim_b + jp) =
              q.matrix()(i * dim_b + j, ip * dim_b + jp);

  SvdResult s = svd(r);
  OperatorSchmidt out;
  std::size_t count = s.singular_values.size();
  out.factors_a.reserve(count);
  out.factors_b.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    out.factors_a.push_back(
        unvectorize(s.u.col(static_cast<Eigen::Index>(n)), dim_a, dim_a));
    out.factors_b.push_back(unvectorize(
        s.v.col(static_cast<Eigen::Index>(n)).conjugate(), dim_b, dim_b));
  }
  out.coefficients = std::move(s.singular_values);
  return out;
}

std::vector<ComplexMatrix> hermitian_basis(Eigen::Index d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d * d));
  basis.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(i, j) = inv_sqrt2;
      sym(j, i) = inv_sqrt2;
      basis.push_back(sym);
      ComplexMatrix antisym = ComplexMatrix::Zero(d, d);
      antisym(i, j) = Complex(0.0, -inv_sqrt2);
      antisym(j, i) = Complex(0.0, inv_sqrt2);
      basis.push_back(antisym);
    }
  }
  for (Eigen::Index l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (Eigen::Index k = 0; k < l; ++k) diag(k, k) = scale;
    diag(l, l) = -static_cast<double>(l) * scale;
    basis.push_back(diag);
  }
  return basis;
}

OperatorSchmidt hermitian_operator_schmidt(const DensityMatrix& q,
                                           Eigen::Index dim_a, Eigen::Index dim_b) {
  require_factor(q, dim_a, dim_b);
  std::vector<ComplexMatrix> basis_a = hermitian_basis(dim_a);
  std::vector<ComplexMatrix> basis_b = hermitian_basis(dim_b);

  // Coefficients Tr[(E_a kron F_b)^dagger Q] are real for Hermitian Q and
  // Hermitian basis elements. Contract one factor at a time:
  // partial(a)(j, j') = sum_{i,i'} conj(E_a(i, i')) Q((i,j), (i',j')).
  Eigen::MatrixXd coeff(static_cast<Eigen::Index>(basis_a.size()),
                        static_cast<Eigen::Index>(basis_b.size()));
  for (std::size_t a = 0; a < basis_a.size(); ++a) {
    ComplexMatrix partial = ComplexMatrix::Zero(dim_b, dim_b);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      for (Eigen::Index ip = 0; ip < dim_a; ++ip)
        partial += std::conj(basis_a[a](i, ip)) *
                   q.matrix().block(i * dim_b, ip * dim_b, dim_b, dim_b);
    for (std::size_t b = 0; b < basis_b.size(); ++b) {
      Complex c = (basis_b[b].adjoint() * partial).trace();
      coeff(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = c.real();
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> s(coeff,
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
  OperatorSchmidt out;
  const auto& sv = s.singularValues();
  std::vector<double> taus(sv.data(), sv.data() + sv.size());
  out.coefficients = Spectrum(std::move(taus));
  for (Eigen::Index n = 0; n < sv.size(); ++n) {
    ComplexMatrix fa = ComplexMatrix::Zero(dim_a, dim_a);
    for (std::size_t a = 0; a < basis_a.size(); ++a) {
      fa += s.matrixU()(static_cast<Eigen::Index>(a), n) * basis_a[a];
    }
    ComplexMatrix fb = ComplexMatrix::Zero(dim_b, dim_b);
    for (std::size_t b = 0; b < basis_b.size(); ++b) {
      fb += s.matrixV()(static_cast<Eigen::Index>(b), n) * basis_b[b];
    }
    out.factors_a.push_back(std::move(fa));
    out.factors_b.push_back(std::move(fb));
  }
  return out;
}

RealignmentResult realignment_criterion(const DensityMatrix& q, Eigen::Index dim_a,
                                        Eigen::Index dim_b) {
  OperatorSchmidt schmidt = operator_schmidt(q, dim_a, dim_b);
  double sum = schmidt.coefficients.sum();
  return RealignmentResult{sum, sum > 1.0 + 1e-10};
}

PureBipartiteState apply_local_unitaries(const PureBipartiteState& psi,
                                         const ComplexMatrix& u_a,
                                         const ComplexMatrix& u_b) {
  // (U_A kron U_B)|psi> has coefficients U_A psi U_B^T.
  return make_pure_state(u_a * psi.coeffs() * u_b.transpose());
}

ClaimReport local_unitary_invariance_check(const PureBipartiteState& psi,
                                           const ComplexMatrix& u_a,
                                           const ComplexMatrix& u_b) {
  if (u_a.rows() != psi.dim_a() || u_b.rows() != psi.dim_b()) {
    throw Error("DimMismatch", "local unitary dims must match the state");
  }
  if (!is_unitary(u_a) || !is_unitary(u_b)) throw Error("NotUnitary");

  PureBipartiteState rotated = apply_local_unitaries(psi, u_a, u_b);
  double dg = std::abs(gramian_function(psi) - gramian_function(rotated));
  double dlg = std::abs(log_gramian(psi) - log_gramian(rotated));
  double dfen = std::abs(fen_pure(psi) - fen_pure(rotated));
  double worst = std::max({dg, dlg, dfen});

  ClaimReport report;
  report.claim_id = "local-unitary-invariance";
  report.record(-worst, 1e-10,
                io::witness_text({{"psi", io::matrix_to_json(psi.coeffs())},
                                  {"u_a", io::matrix_to_json(u_a)},
                                  {"u_b", io::matrix_to_json(u_b)}}));
  return report;
}

ClaimReport gramian_local_channel_probe(const PureBipartiteState& psi,
                                        const channels::KrausChannel& phi_a) {
  if (phi_a.input_dim() != psi.dim_a() || phi_a.output_dim() != psi.dim_a()) {
    throw Error("DimMismatch", "local channel must act on the A factor");
  }
  ComplexVector vec = vectorize(psi.coeffs());
  DensityMatrix rho = make_density(vec * vec.adjoint());
  channels::KrausChannel lifted = channels::tensor_channel(
      phi_a, channels::identity_channel(psi.dim_b()));
  TraceClassOperator out = channels::apply_channel(lifted, rho);
  DensityMatrix reduced = channels::partial_trace(
      make_density(out.matrix() / out.matrix().trace().real()), psi.dim_a(),
      psi.dim_b(), channels::Subsystem::A);

  double before = gramian_function(psi).real();
  double after =
      fredholm::det_spectral(TraceClassOperator(reduced)).value.real();

  ClaimReport report;
  report.claim_id = "gramian-local-channel";
  io::json kraus = io::json::array();
  for (const ComplexMatrix& a : phi_a.kraus_ops()) kraus.push_back(io::matrix_to_json(a));
  report.record(before - after, 1e-10,
                io::witness_text({{"psi", io::matrix_to_json(psi.coeffs())},
                                  {"kraus_ops_a", kraus},
                                  {"g_before", before},
                                  {"g_after", after}}));
  return report;
}

}  // namespace fredent::bipartite
