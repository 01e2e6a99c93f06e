#include <doctest.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fredent/channels.hpp"
#include "fredent/entropy.hpp"
#include "fredent/errors.hpp"
#include "fredent/io.hpp"
#include "fredent/linalg.hpp"
#include "fredent/majorization.hpp"
#include "fredent/rng.hpp"

using namespace fredent;
using channels::Completeness;
using channels::Subsystem;

namespace {

ComplexMatrix diag(const std::vector<double>& v) {
  auto n = static_cast<Eigen::Index>(v.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = v[static_cast<std::size_t>(i)];
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

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

DensityMatrix bell_state() {
  ComplexMatrix q = ComplexMatrix::Zero(4, 4);
  q(0, 0) = q(0, 3) = q(3, 0) = q(3, 3) = 0.5;
  return make_density(q);
}

// Fully depolarizing qubit channel as four weighted unitaries.
channels::KrausChannel depolarizing_qubit() {
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix y(2, 2);
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return channels::mixed_unitary({0.25, 0.25, 0.25, 0.25},
                                 {i2, pauli_x(), y, z});
}

}  // namespace

TEST_CASE("kraus construction classifies completeness and unitality") {
  auto id = channels::identity_channel(3);
  CHECK(id.completeness() == Completeness::TracePreserving);
  CHECK(id.unital());
  CHECK(id.output_sum_contractive());
  CHECK(id.input_dim() == 3);
  CHECK(id.output_dim() == 3);
  CHECK(id.kraus_ops().size() == 1);

  // A single contraction is trace non-increasing, not trace preserving.
  ComplexMatrix half(1, 1);
  half(0, 0) = 0.5;
  auto shrink = channels::make_kraus_channel({half});
  CHECK(shrink.completeness() == Completeness::TraceNonIncreasing);
  CHECK_FALSE(shrink.unital());
  CHECK(shrink.output_sum_contractive());
}

TEST_CASE("kraus construction rejects invalid families") {
  CHECK(throws_code([] { channels::make_kraus_channel({}); }, "EmptyKraus"));

  ComplexMatrix two(1, 1);
  two(0, 0) = 2.0;
  CHECK(throws_code([&] { channels::make_kraus_channel({two}); },
                    "KrausNotContractive"));

  ComplexMatrix a = ComplexMatrix::Identity(2, 2);
  ComplexMatrix b = ComplexMatrix::Identity(3, 3);
  CHECK(throws_code([&] { channels::make_kraus_channel({a, b}); },
                    "DimMismatch"));

  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK(throws_code([&] { channels::make_kraus_channel({bad}); }, "NonFinite"));
}

TEST_CASE("mixed unitary channels validate weights and unitarity") {
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x = pauli_x();

  auto phi = channels::mixed_unitary({0.5, 0.5}, {i2, x});
  CHECK(phi.completeness() == Completeness::TracePreserving);
  CHECK(phi.unital());

  CHECK(throws_code([&] { channels::mixed_unitary({0.5}, {i2, x}); },
                    "WeightsInvalid"));
  CHECK(throws_code([&] { channels::mixed_unitary({}, {}); }, "WeightsInvalid"));
  CHECK(throws_code([&] { channels::mixed_unitary({1.2, -0.2}, {i2, x}); },
                    "WeightsInvalid"));
  CHECK(throws_code([&] { channels::mixed_unitary({0.5, 0.4}, {i2, x}); },
                    "WeightsInvalid"));
  CHECK(throws_code([&] { channels::mixed_unitary({0.5, 0.5}, {i2, 2.0 * x}); },
                    "NotUnitary"));
}

TEST_CASE("channel application matches hand-computed mixtures") {
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x = pauli_x();
  auto q = make_density(diag({1.0, 0.0}));

  auto balanced = channels::mixed_unitary({0.5, 0.5}, {i2, x});
  auto out = channels::apply_channel(balanced, q);
  CHECK((out.matrix() - 0.5 * i2).norm() < 1e-12);

  auto tilted = channels::mixed_unitary({0.75, 0.25}, {i2, x});
  auto out2 = channels::apply_channel(tilted, q);
  CHECK((out2.matrix() - diag({0.75, 0.25})).norm() < 1e-12);

  auto idem = channels::apply_channel(channels::identity_channel(2), q);
  CHECK((idem.matrix() - q.matrix()).norm() < 1e-14);

  CHECK(throws_code(
      [&] {
        channels::apply_channel(channels::identity_channel(3), q);
      },
      "DimMismatch"));
}

TEST_CASE("trace-preserving channels keep trace and positivity") {
  Sampler sampler(1211);
  for (int t = 0; t < 50; ++t) {
    int d = 2 + static_cast<int>(sampler.below(4));
    auto q = sampler.density(d);
    int k = 2 + static_cast<int>(sampler.below(3));
    std::vector<double> w = sampler.simplex(static_cast<std::size_t>(k));
    std::vector<ComplexMatrix> us;
    for (int i = 0; i < k; ++i) us.push_back(sampler.unitary(d));
    auto phi = channels::mixed_unitary(w, us);

    auto out = channels::apply_channel(phi, q);
    CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-10);
    // make_trace_class already enforced PSD up to clamping; the spectrum is
    // the clamped one, so check it directly.
    CHECK(out.spectrum().values().back() >= 0.0);
  }
}

TEST_CASE("unital channels fix the maximally mixed state") {
  Sampler sampler(1312);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + static_cast<int>(sampler.below(4));
    std::vector<double> w = sampler.simplex(3);
    std::vector<ComplexMatrix> us;
    for (int i = 0; i < 3; ++i) us.push_back(sampler.unitary(d));
    auto phi = channels::mixed_unitary(w, us);
    CHECK(phi.unital());

    ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / double(d);
    auto out = channels::apply_channel(phi, make_density(mixed));
    CHECK((out.matrix() - mixed).norm() < 1e-10);
  }
}

TEST_CASE("bistochastic channels mix spectra downward") {
  Sampler sampler(1413);
  for (int t = 0; t < 100; ++t) {
    int d = 2 + static_cast<int>(sampler.below(4));
    auto q = sampler.density(d);
    std::vector<double> w = sampler.simplex(3);
    std::vector<ComplexMatrix> us;
    for (int i = 0; i < 3; ++i) us.push_back(sampler.unitary(d));
    auto out = channels::apply_channel(channels::mixed_unitary(w, us), q);

    auto verdict = majorization::additive_majorizes(
        majorization::OrderedSequence(out.spectrum().values()),
        majorization::OrderedSequence(q.spectrum().values()));
    CHECK(verdict.holds);
  }
}

TEST_CASE("partial trace recovers marginals") {
  // Product state: reduction returns each factor.
  auto qa = make_density(diag({0.7, 0.3}));
  auto qb = make_density(diag({0.6, 0.3, 0.1}));
  auto joint = make_density(kron(qa.matrix(), qb.matrix()));
  auto ra = channels::partial_trace(joint, 2, 3, Subsystem::A);
  auto rb = channels::partial_trace(joint, 2, 3, Subsystem::B);
  CHECK((ra.matrix() - qa.matrix()).norm() < 1e-12);
  CHECK((rb.matrix() - qb.matrix()).norm() < 1e-12);

  // Maximally entangled state reduces to maximally mixed.
  auto bell = bell_state();
  auto half = ComplexMatrix::Identity(2, 2) * 0.5;
  CHECK((channels::partial_trace(bell, 2, 2, Subsystem::A).matrix() - half)
            .norm() < 1e-12);
  CHECK((channels::partial_trace(bell, 2, 2, Subsystem::B).matrix() - half)
            .norm() < 1e-12);

  auto uniform4 = make_density(ComplexMatrix::Identity(4, 4) * 0.25);
  CHECK((channels::partial_trace(uniform4, 2, 2, Subsystem::B).matrix() - half)
            .norm() < 1e-12);

  CHECK(throws_code(
      [&] { channels::partial_trace(bell, 3, 2, Subsystem::A); },
      "DimFactorizationMismatch"));
}

TEST_CASE("partial trace channel is trace preserving in Kraus form") {
  auto phi = channels::partial_trace_channel(2, 3, Subsystem::A);
  CHECK(phi.completeness() == Completeness::TracePreserving);
  CHECK(phi.input_dim() == 6);
  CHECK(phi.output_dim() == 2);
  CHECK(phi.kraus_ops().size() == 3);
  CHECK(throws_code(
      [] { channels::partial_trace_channel(0, 2, Subsystem::A); },
      "DimTooSmall"));
}

TEST_CASE("tensor channels multiply dimensions and kraus families") {
  auto phi = channels::tensor_channel(depolarizing_qubit(),
                                      channels::identity_channel(3));
  CHECK(phi.input_dim() == 6);
  CHECK(phi.output_dim() == 6);
  CHECK(phi.kraus_ops().size() == 4);
  CHECK(phi.completeness() == Completeness::TracePreserving);

  // Acts factor-wise on product states.
  auto qa = make_density(diag({1.0, 0.0}));
  auto qb = make_density(diag({0.5, 0.3, 0.2}));
  auto joint = make_density(kron(qa.matrix(), qb.matrix()));
  auto out = channels::apply_channel(phi, joint);
  ComplexMatrix expected =
      kron(ComplexMatrix::Identity(2, 2) * 0.5, qb.matrix());
  CHECK((out.matrix() - expected).norm() < 1e-12);
}

TEST_CASE("determinant growth under a unitary channel is exactly zero") {
  Sampler sampler(1514);
  auto q = sampler.density(3);
  ComplexMatrix u = sampler.unitary(3);
  auto phi = channels::mixed_unitary({1.0}, {u});
  auto report = channels::check_det_contraction(phi, q);
  CHECK(report.trials == 1);
  CHECK(report.violations == 0);
  CHECK(std::abs(report.worst_margin) < 1e-9);
}

TEST_CASE("determinant contraction fails for the balanced bit-flip mixture") {
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  auto phi = channels::mixed_unitary({0.5, 0.5}, {i2, pauli_x()});
  auto q = make_density(diag({1.0, 0.0}));
  auto report = channels::check_det_contraction(phi, q);

  CHECK(report.claim_id == "thm38-det-contraction");
  CHECK(report.trials == 1);
  CHECK(report.violations == 1);
  CHECK(report.worst_margin == doctest::Approx(-0.25).epsilon(1e-12));
  REQUIRE(report.witness.has_value());
  auto witness = io::json::parse(*report.witness);
  CHECK(witness.at("det_before").get<double>() ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(witness.at("det_after").get<double>() ==
        doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("determinant does contract for a trace-reducing projector") {
  ComplexMatrix a = diag({1.0, 0.0}) / std::sqrt(2.0);
  auto phi = channels::make_kraus_channel({a});
  CHECK(phi.completeness() == Completeness::TraceNonIncreasing);
  auto q = make_density(diag({0.5, 0.5}));
  auto report = channels::check_det_contraction(phi, q);
  CHECK(report.violations == 0);
  // before: det(I + Q) = 2.25; after: det(I + diag(0.25, 0)) = 1.25.
  CHECK(report.worst_margin == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("determinant probe requires a contractive transposed sum") {
  ComplexMatrix raise = ComplexMatrix::Zero(2, 2);
  raise(0, 1) = 1.0;
  ComplexMatrix corner = ComplexMatrix::Zero(2, 2);
  corner(0, 0) = 1.0;
  // sum A^dagger A = I (valid channel) but sum A A^dagger = diag(2, 0).
  auto phi = channels::make_kraus_channel({raise, corner});
  CHECK(phi.completeness() == Completeness::TracePreserving);
  CHECK_FALSE(phi.output_sum_contractive());
  auto q = make_density(diag({0.5, 0.5}));
  CHECK(throws_code([&] { channels::check_det_contraction(phi, q); },
                    "KrausConditionUnmet"));
}

TEST_CASE("separable contraction probe: identity pair and counterexample") {
  auto id2 = channels::identity_channel(2);
  auto bell = bell_state();
  auto clean = channels::check_separable_contraction(id2, id2, bell);
  CHECK(clean.claim_id == "separable-det-contraction");
  CHECK(clean.violations == 0);
  CHECK(std::abs(clean.worst_margin) < 1e-10);

  // Depolarizing one side of a pure product state raises the determinant.
  ComplexMatrix corner = ComplexMatrix::Zero(4, 4);
  corner(0, 0) = 1.0;
  auto product_pure = make_density(corner);
  auto report = channels::check_separable_contraction(depolarizing_qubit(),
                                                      id2, product_pure);
  CHECK(report.violations == 1);
  CHECK(report.worst_margin == doctest::Approx(-0.25).epsilon(1e-12));
  REQUIRE(report.witness.has_value());
  auto witness = io::json::parse(*report.witness);
  CHECK(witness.at("det_before").get<double>() ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(witness.at("kraus_ops_a").is_array());
  CHECK(witness.at("kraus_ops_b").is_array());

  CHECK(throws_code(
      [&] {
        channels::check_separable_contraction(id2, id2,
                                              make_density(diag({0.5, 0.5})));
      },
      "DimMismatch"));
}

TEST_CASE("entropy reduction probe: product, entangled, and mixed cases") {
  // Pure product state: both reductions carry the full entropy value.
  ComplexMatrix corner = ComplexMatrix::Zero(4, 4);
  corner(0, 0) = 1.0;
  auto product = channels::check_fen_reduction(make_density(corner), 2, 2);
  CHECK(product.claim_id == "fen-partial-trace");
  CHECK(product.violations == 0);
  CHECK(std::abs(product.worst_margin) < 1e-10);

  // Entangled pure state: whole exceeds both reductions.
  auto bell = channels::check_fen_reduction(bell_state(), 2, 2);
  CHECK(bell.violations == 0);
  CHECK(bell.worst_margin ==
        doctest::Approx(2.0 * std::log(2.0) - 3.0 * std::log(1.5))
            .epsilon(1e-12));

  // Maximally mixed joint state: the reductions are strictly larger.
  auto uniform4 = make_density(ComplexMatrix::Identity(4, 4) * 0.25);
  auto mixed = channels::check_fen_reduction(uniform4, 2, 2);
  CHECK(mixed.violations == 1);
  CHECK(mixed.worst_margin ==
        doctest::Approx(5.0 * std::log(1.25) - 3.0 * std::log(1.5))
            .epsilon(1e-12));
  REQUIRE(mixed.witness.has_value());
  auto witness = io::json::parse(*mixed.witness);
  CHECK(witness.at("fen_whole").get<double>() ==
        doctest::Approx(5.0 * std::log(1.25)).epsilon(1e-12));
  CHECK(witness.at("fen_reduced_a").get<double>() ==
        doctest::Approx(3.0 * std::log(1.5)).epsilon(1e-12));

  CHECK(throws_code(
      [&] { channels::check_fen_reduction(bell_state(), 3, 2); },
      "DimFactorizationMismatch"));
}
