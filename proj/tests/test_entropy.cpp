#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "fredent/entropy.hpp"
#include "fredent/errors.hpp"
#include "fredent/fredholm.hpp"
#include "fredent/linalg.hpp"
#include "fredent/numeric.hpp"
#include "fredent/rng.hpp"

using namespace fredent;

namespace {

ComplexMatrix diag(const std::vector<double>& v) {
  auto n = static_cast<Eigen::Index>(v.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = v[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix pure_density(Eigen::Index dim) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(0, 0) = 1.0;
  return m;
}

bool throws_code(const std::function<void()>& f, const std::string& code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("pointwise entropy maps hit their anchors") {
  CHECK(entropy_f_plus(0.0) == 0.0);
  CHECK(entropy_f_minus(0.0) == 0.0);
  CHECK(entropy_f_plus(1.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(entropy_f_minus(1.0) == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(xlog1p_shifted(1.0) ==
        doctest::Approx(2 * std::numbers::ln2).epsilon(1e-15));
}

TEST_CASE("fen of a pure state is 2 ln 2 in any dimension") {
  for (Eigen::Index d : {2, 3, 8, 64}) {
    auto q = make_density(pure_density(d));
    auto v = entropy::fen(q);
    CHECK(std::abs(v.plus - 2 * std::numbers::ln2) < 1e-10);
    CHECK(v.minus == doctest::Approx(-v.plus).epsilon(1e-15));
    CHECK(v.tail_bound == 0.0);
  }
}

TEST_CASE("fen closed-form anchors") {
  auto mixed2 = make_density(diag({0.5, 0.5}));
  CHECK(entropy::fen(mixed2).plus ==
        doctest::Approx(3 * std::log(1.5)).epsilon(1e-14));

  auto mixed4 = make_density(0.25 * ComplexMatrix::Identity(4, 4));
  CHECK(entropy::fen(mixed4).plus ==
        doctest::Approx(5 * std::log(1.25)).epsilon(1e-14));

  auto q = make_density(diag({0.5, 0.3, 0.2}));
  CHECK(entropy::fen(q).plus ==
        doctest::Approx(1.1680570741227305).epsilon(1e-14));

  std::vector<double> seq = {0.5, 0.3, 0.2};
  CHECK(entropy::fen_of_sequence(seq).plus ==
        doctest::Approx(entropy::fen(q).plus).epsilon(1e-15));
}

TEST_CASE("truncated fen carries an explicit tail bound") {
  Spectrum s({0.5, 0.3, 0.2});
  auto v = entropy::fen_truncated(s, 2);
  double expect = 1.5 * std::log(1.5) + 1.3 * std::log(1.3);
  CHECK(v.plus == doctest::Approx(expect).epsilon(1e-14));
  CHECK(v.tail_bound == doctest::Approx(2 * 0.2).epsilon(1e-12));

  auto full = entropy::fen_truncated(s, 3);
  CHECK(full.tail_bound == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(throws_code([&] { entropy::fen_truncated(s, 4); }, "KeepOutOfRange"));
  Spectrum bad({0.5, -0.1});
  CHECK(throws_code([&] { entropy::fen_truncated(bad, 1); }, "NegativeValue"));
}

TEST_CASE("uniform-spectrum closed form decreases to 1") {
  CHECK(entropy::fen_uniform(1) ==
        doctest::Approx(2 * std::numbers::ln2).epsilon(1e-15));
  CHECK(entropy::fen_uniform(2) ==
        doctest::Approx(3 * std::log(1.5)).epsilon(1e-15));
  CHECK(std::abs(entropy::fen_uniform(1e6) - 1.0) < 1e-6);
  double prev = entropy::fen_uniform(1);
  for (double n : {2.0, 5.0, 10.0, 100.0, 1e4, 1e6}) {
    double cur = entropy::fen_uniform(n);
    CHECK(cur < prev);
    prev = cur;
  }
  // Closed form agrees with the explicit finite sum.
  std::vector<double> uniform(1000, 1.0 / 1000.0);
  CHECK(entropy::fen_of_sequence(uniform).plus ==
        doctest::Approx(entropy::fen_uniform(1000)).epsilon(1e-12));
}

TEST_CASE("entropy operators exponentiate the spectrum") {
  auto q = make_density(diag({1.0, 0.0}));
  auto plus = entropy::entropy_operator(q, entropy::EntropySign::Plus);
  auto minus = entropy::entropy_operator(q, entropy::EntropySign::Minus);
  CHECK(std::abs(plus.matrix(0, 0) - Complex(3, 0)) < 1e-13);
  CHECK(std::abs(plus.matrix(1, 1)) < 1e-13);
  CHECK(std::abs(minus.matrix(0, 0) - Complex(-0.75, 0)) < 1e-13);
}

TEST_CASE("log-determinant of the entropy operators reproduces fen") {
  Sampler sampler(1123);
  for (int t = 0; t < 25; ++t) {
    int d = 1 + static_cast<int>(sampler.below(6));
    auto q = sampler.density(d);
    auto v = entropy::fen(q);

    auto plus = entropy::entropy_operator(q, entropy::EntropySign::Plus);
    double det_plus =
        fredholm::det_spectral(make_trace_class(plus.matrix)).value.real();
    CHECK(std::log(det_plus) == doctest::Approx(v.plus).epsilon(1e-10));

    auto minus = entropy::entropy_operator(q, entropy::EntropySign::Minus);
    double det_minus = fredholm::det_direct(minus.matrix).value.real();
    CHECK(std::log(det_minus) == doctest::Approx(v.minus).epsilon(1e-10));
  }
}

TEST_CASE("renormalized log anchors and bounds") {
  auto q = make_trace_class(diag({0.5, 0.5}));
  ComplexMatrix lg = entropy::renorm_log(q);
  CHECK(lg.trace().real() ==
        doctest::Approx(2 * std::log(1.5)).epsilon(1e-14));

  Sampler sampler(1789);
  for (int t = 0; t < 30; ++t) {
    int d = 1 + static_cast<int>(sampler.below(6));
    auto state = sampler.density(d);
    ComplexMatrix l = entropy::renorm_log(state);
    CHECK(trace_norm(l) <= trace_norm(state.matrix()) + 1e-10);
    CHECK(l.trace().real() <= 1.0 + 1e-10);
  }
}

TEST_CASE("Frechet derivative of the log matches finite differences") {
  Sampler sampler(2461);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + static_cast<int>(sampler.below(4));
    auto q0 = sampler.psd(d, 0.8);
    auto q1 = sampler.psd(d, 0.5);
    ComplexMatrix analytic = entropy::frechet_derivative_log(q0, q1);

    const double h = 1e-6;
    ComplexMatrix up =
        entropy::renorm_log(make_trace_class(q0.matrix() + h * q1.matrix()));
    ComplexMatrix down =
        entropy::renorm_log(make_trace_class(q0.matrix() - h * q1.matrix()));
    ComplexMatrix numeric = (up - down) / (2 * h);
    CHECK((analytic - numeric).cwiseAbs().maxCoeff() < 1e-4);
  }

  // Degenerate spectrum exercises the diagonal (limit) kernel: at q0 = I/2
  // the derivative is q1 / 1.5 exactly.
  auto flat = make_trace_class(0.5 * ComplexMatrix::Identity(3, 3));
  auto dir = Sampler(99).psd(3, 1.0);
  ComplexMatrix deriv = entropy::frechet_derivative_log(flat, dir);
  CHECK((deriv - dir.matrix() / 1.5).cwiseAbs().maxCoeff() < 1e-12);

  auto wrong = Sampler(7).psd(2, 1.0);
  CHECK(throws_code([&] { entropy::frechet_derivative_log(flat, wrong); },
                    "DimMismatch"));
}

TEST_CASE("log continuity bound holds with the frozen margin") {
  auto q = make_density(diag({0.6, 0.4}));
  auto q2 = make_density(diag({0.5, 0.5}));
  auto report = entropy::log_continuity_probe(q, q2);
  CHECK(report.trials == 1);
  CHECK(report.violations == 0);
  // lhs = |ln 1.6 - ln 1.5| + |ln 1.4 - ln 1.5|, rhs = 0.2 / (1 - 0.6).
  double lhs = 0.13353139262452274;
  CHECK(report.worst_margin == doctest::Approx(0.5 - lhs).epsilon(1e-12));

  auto pure = make_density(diag({1.0, 0.0}));
  CHECK(throws_code([&] { entropy::log_continuity_probe(pure, q2); },
                    "SpectralRadiusOne"));
}
