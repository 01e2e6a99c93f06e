#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "fredent/channels.hpp"
#include "fredent/entropy.hpp"
#include "fredent/errors.hpp"
#include "fredent/fredholm.hpp"
#include "fredent/linalg.hpp"
#include "fredent/majorization.hpp"
#include "fredent/rng.hpp"

using namespace fredent;
using majorization::OrderedSequence;

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

// Applies the decomposed doubly stochastic map to x.
std::vector<double> apply_factors(
    const std::vector<majorization::PermutationFactor>& factors,
    const std::vector<double>& x) {
  std::vector<double> out(x.size(), 0.0);
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] += f.weight * x[f.permutation[i]];
    }
  }
  return out;
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("ordered sequences sort and reject negatives") {
  OrderedSequence s({0.2, 0.5, 0.3});
  CHECK(s[0] == 0.5);
  CHECK(s[2] == 0.2);
  CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-15));
  OrderedSequence clamped({0.5, -1e-16});
  CHECK(clamped[1] == 0.0);
  CHECK(throws_code([] { OrderedSequence({0.5, -0.1}); }, "NegativeValue"));
}

TEST_CASE("additive prefix-domination verdicts") {
  auto holds = majorization::additive_majorizes(OrderedSequence({0.5, 0.5}),
                                                OrderedSequence({1.0, 0.0}));
  CHECK(holds.holds);
  CHECK_FALSE(holds.first_violation_index.has_value());

  auto fails = majorization::additive_majorizes(OrderedSequence({1.0, 0.0}),
                                                OrderedSequence({0.5, 0.5}));
  CHECK_FALSE(fails.holds);
  REQUIRE(fails.first_violation_index.has_value());
  CHECK(*fails.first_violation_index == 1);

  auto three = majorization::additive_majorizes(
      OrderedSequence({0.4, 0.3, 0.3}), OrderedSequence({0.6, 0.3, 0.1}));
  CHECK(three.holds);

  // Weak relation: unequal sums are allowed.
  auto weak = majorization::additive_majorizes(OrderedSequence({0.1, 0.1}),
                                               OrderedSequence({0.3, 0.2}));
  CHECK(weak.holds);

  // Zero padding of the shorter side.
  auto padded = majorization::additive_majorizes(OrderedSequence({0.3}),
                                                 OrderedSequence({0.2, 0.2}));
  CHECK_FALSE(padded.holds);
  CHECK(*padded.first_violation_index == 1);
}

TEST_CASE("multiplicative prefix-domination verdicts") {
  auto holds = majorization::multiplicative_majorizes(
      OrderedSequence({0.1, 0.1}), OrderedSequence({0.3, 0.2}));
  CHECK(holds.holds);

  auto fails = majorization::multiplicative_majorizes(
      OrderedSequence({0.5, 0.5}), OrderedSequence({1.0, 0.0}));
  CHECK_FALSE(fails.holds);
  REQUIRE(fails.first_violation_index.has_value());
  CHECK(*fails.first_violation_index == 2);  // 2.25 > 2 at the full prefix

  auto equal = majorization::multiplicative_majorizes(
      OrderedSequence({0.4, 0.2}), OrderedSequence({0.4, 0.2}));
  CHECK(equal.holds);
  for (double m : equal.margins) CHECK(std::abs(m) < 1e-15);
}

TEST_CASE("multiplicative relation is additive on shifted logs") {
  Sampler sampler(3301);
  for (int t = 0; t < 10000; ++t) {
    std::size_t len = 1 + sampler.below(6);
    std::vector<double> a(len), b(len);
    for (auto& v : a) v = 2.0 * sampler.uniform();
    for (auto& v : b) v = 2.0 * sampler.uniform();

    auto mult = majorization::multiplicative_majorizes(OrderedSequence(a),
                                                       OrderedSequence(b));
    std::vector<double> la(len), lb(len);
    std::transform(a.begin(), a.end(), la.begin(),
                   [](double v) { return std::log1p(v); });
    std::transform(b.begin(), b.end(), lb.begin(),
                   [](double v) { return std::log1p(v); });
    auto add = majorization::additive_majorizes(OrderedSequence(la),
                                                OrderedSequence(lb));
    CHECK(mult.holds == add.holds);
  }
}

TEST_CASE("multiplicative domination implies additive domination") {
  auto report = majorization::m_implies_additive_probe(10000, 8, 424242);
  CHECK(report.trials == 10000);
  CHECK(report.violations == 0);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("gram numbers are cumulative determinants") {
  auto q = make_density(diag({0.5, 0.3, 0.2}));
  auto g = majorization::gram_numbers(q);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(g[1] == doctest::Approx(1.95).epsilon(1e-14));
  CHECK(g[2] == doctest::Approx(2.34).epsilon(1e-14));
  CHECK(g.back() == doctest::Approx(
                        fredholm::det_spectral(q).value.real())
                        .epsilon(1e-12));

  auto pure = make_density(diag({1.0, 0.0}));
  auto gp = majorization::gram_numbers(pure);
  CHECK(gp[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gp[1] == doctest::Approx(2.0).epsilon(1e-14));

  auto mixed = make_density(diag({0.5, 0.5}));
  auto gm = majorization::gram_numbers(mixed);
  CHECK(gm[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(gm[1] == doctest::Approx(2.25).epsilon(1e-14));
}

TEST_CASE("gram numbers are invariant under unitary conjugation") {
  Sampler sampler(5150);
  for (int t = 0; t < 30; ++t) {
    int d = 2 + static_cast<int>(sampler.below(5));
    auto q = sampler.density(d);
    ComplexMatrix u = sampler.unitary(d);
    auto rotated = make_density(u * q.matrix() * u.adjoint());
    auto g1 = majorization::gram_numbers(q);
    auto g2 = majorization::gram_numbers(rotated);
    REQUIRE(g1.size() == g2.size());
    for (std::size_t i = 0; i < g1.size(); ++i) {
      CHECK(std::abs(g1[i] - g2[i]) < 1e-10);
    }
    CHECK(std::is_sorted(g1.begin(), g1.end()));
  }
}

TEST_CASE("state-level multiplicative domination through gram numbers") {
  auto mixed = make_density(diag({0.5, 0.5}));
  auto pure = make_density(diag({1.0, 0.0}));

  CHECK(majorization::state_m_majorizes(mixed, mixed).holds);

  auto fails_tail = majorization::state_m_majorizes(mixed, pure);
  CHECK_FALSE(fails_tail.holds);
  CHECK(*fails_tail.first_violation_index == 2);

  auto fails_head = majorization::state_m_majorizes(pure, mixed);
  CHECK_FALSE(fails_head.holds);
  CHECK(*fails_head.first_violation_index == 1);
}

TEST_CASE("interpolation second derivative: anchors and finite differences") {
  auto q1 = make_density(diag({0.7, 0.3}));
  auto q2 = make_density(diag({0.5, 0.5}));
  CHECK(majorization::fen_interpolation_second_derivative(q1, q1, 0.3) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(majorization::fen_interpolation_second_derivative(q1, q2, 0.0) ==
        doctest::Approx(0.04 / 1.5 + 0.04 / 1.5).epsilon(1e-12));

  Sampler sampler(6120);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + static_cast<int>(sampler.below(5));
    auto a = sampler.density(d);
    auto b = sampler.density(d);
    double at = 0.2 + 0.6 * sampler.uniform();
    double analytic =
        majorization::fen_interpolation_second_derivative(a, b, at);
    CHECK(analytic >= 0.0);

    // Central difference of F(t) = fen of the co-sorted interpolation.
    auto f = [&](double t2) {
      const auto& la = a.spectrum().values();
      const auto& lb = b.spectrum().values();
      std::vector<double> mix(la.size());
      for (std::size_t i = 0; i < mix.size(); ++i) {
        mix[i] = t2 * la[i] + (1 - t2) * lb[i];
      }
      return entropy::fen_of_sequence(mix).plus;
    };
    const double h = 1e-4;
    double numeric = (f(at + h) - 2 * f(at) + f(at - h)) / (h * h);
    CHECK(std::abs(analytic - numeric) < 1e-6);
  }

  auto small = make_density(diag({1.0}));
  CHECK(throws_code(
      [&] { majorization::fen_interpolation_second_derivative(q1, small, 0.5); },
      "DimMismatch"));
}

TEST_CASE("conversion channel: identity and two-point anchors") {
  auto same = majorization::construct_conversion_channel(
      OrderedSequence({0.5, 0.3, 0.2}), OrderedSequence({0.5, 0.3, 0.2}));
  REQUIRE(same.size() == 1);
  CHECK(same[0].weight == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 0; i < same[0].permutation.size(); ++i) {
    CHECK(same[0].permutation[i] == i);
  }

  auto two = majorization::construct_conversion_channel(
      OrderedSequence({0.75, 0.25}), OrderedSequence({1.0, 0.0}));
  std::vector<double> mapped = apply_factors(two, {1.0, 0.0});
  CHECK(mapped[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(mapped[1] == doctest::Approx(0.25).epsilon(1e-12));

  double total = 0;
  bool saw_identity_weight = false;
  for (const auto& f : two) {
    total += f.weight;
    if (std::abs(f.weight - 0.75) < 1e-12) saw_identity_weight = true;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(saw_identity_weight);
}

TEST_CASE("conversion channel rejects bad inputs") {
  CHECK(throws_code(
      [] {
        majorization::construct_conversion_channel(
            OrderedSequence({0.5, 0.5}), OrderedSequence({1.0, 0.1}));
      },
      "SumMismatch"));
  CHECK(throws_code(
      [] {
        majorization::construct_conversion_channel(
            OrderedSequence({1.0, 0.0}), OrderedSequence({0.5, 0.5}));
      },
      "NotMajorized"));
}

TEST_CASE("conversion channel converts random comparable pairs") {
  Sampler sampler(7777);
  for (int t = 0; t < 40; ++t) {
    std::size_t len = 2 + sampler.below(5);
    std::vector<double> b(len);
    for (auto& v : b) v = sampler.uniform();
    b = sorted_desc(b);

    // Mixing permutations of b yields something b additively majorizes.
    std::vector<double> a(len, 0.0);
    int terms = 2 + static_cast<int>(sampler.below(3));
    std::vector<double> w = sampler.simplex(terms);
    for (int k = 0; k < terms; ++k) {
      std::vector<std::size_t> perm(len);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t i = len; i > 1; --i) {
        std::swap(perm[i - 1], perm[sampler.below(i)]);
      }
      for (std::size_t i = 0; i < len; ++i) {
        a[i] += w[static_cast<std::size_t>(k)] * b[perm[i]];
      }
    }
    a = sorted_desc(a);

    auto factors = majorization::construct_conversion_channel(
        OrderedSequence(a), OrderedSequence(b));
    CHECK(factors.size() <= (len - 1) * (len - 1) + 1);

    double total = 0;
    for (const auto& f : factors) {
      CHECK(f.weight >= 0.0);
      total += f.weight;
      std::vector<bool> seen(len, false);
      for (std::size_t idx : f.permutation) {
        REQUIRE(idx < len);
        CHECK_FALSE(seen[idx]);
        seen[idx] = true;
      }
    }
    CHECK(std::abs(total - 1.0) < 1e-12);

    std::vector<double> mapped = sorted_desc(apply_factors(factors, b));
    for (std::size_t i = 0; i < len; ++i) {
      CHECK(std::abs(mapped[i] - a[i]) < 1e-9);
    }
  }
}

TEST_CASE("conversion channel lifts to states as a mixed-unitary operation") {
  Sampler sampler(8601);
  for (int t = 0; t < 10; ++t) {
    std::size_t len = 2 + sampler.below(4);
    // Source spectrum b, target a = T-mixed version of b, both unit sum.
    std::vector<double> b = sampler.simplex(len);
    b = sorted_desc(b);
    std::vector<double> a(len, 0.0);
    std::vector<double> w = sampler.simplex(3);
    for (int k = 0; k < 3; ++k) {
      std::vector<std::size_t> perm(len);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t i = len; i > 1; --i) {
        std::swap(perm[i - 1], perm[sampler.below(i)]);
      }
      for (std::size_t i = 0; i < len; ++i) {
        a[i] += w[static_cast<std::size_t>(k)] * b[perm[i]];
      }
    }
    a = sorted_desc(a);

    auto factors = majorization::construct_conversion_channel(
        OrderedSequence(a), OrderedSequence(b));

    // Source state with spectrum b in a random eigenbasis.
    auto d = static_cast<Eigen::Index>(len);
    ComplexMatrix u = sampler.unitary(d);
    auto source = make_density(u * diag(b) * u.adjoint());

    // Permutation unitaries expressed in that eigenbasis.
    std::vector<double> weights;
    std::vector<ComplexMatrix> unitaries;
    for (const auto& f : factors) {
      ComplexMatrix p = ComplexMatrix::Zero(d, d);
      for (std::size_t i = 0; i < len; ++i) {
        p(static_cast<Eigen::Index>(i),
          static_cast<Eigen::Index>(f.permutation[i])) = 1.0;
      }
      weights.push_back(f.weight);
      unitaries.push_back(u * p * u.adjoint());
    }
    auto phi = channels::mixed_unitary(weights, unitaries);
    auto mapped = channels::apply_channel(phi, source);

    const auto& spec = mapped.spectrum().values();
    for (std::size_t i = 0; i < len; ++i) {
      CHECK(std::abs(spec[i] - a[i]) < 1e-9);
    }
  }
}

TEST_CASE("fen is monotone under T-transform mixing (Schur convexity)") {
  Sampler sampler(9099);
  for (int t = 0; t < 1000; ++t) {
    std::size_t len = 2 + sampler.below(6);
    std::vector<double> x(len);
    for (auto& v : x) v = sampler.uniform();

    // One T-transform: y is strictly more mixed, so y is dominated by x.
    std::size_t i = sampler.below(len);
    std::size_t j = sampler.below(len);
    if (i == j) j = (j + 1) % len;
    double s = sampler.uniform();
    std::vector<double> y = x;
    y[i] = s * x[i] + (1 - s) * x[j];
    y[j] = s * x[j] + (1 - s) * x[i];

    CHECK(entropy::fen_of_sequence(y).plus <=
          entropy::fen_of_sequence(x).plus + 1e-12);
  }
}

TEST_CASE("conditional fen monotonicity probe finds no counterexample") {
  auto report = majorization::fen_monotonicity_probe(400, 5, 20240901);
  CHECK(report.violations == 0);
}
