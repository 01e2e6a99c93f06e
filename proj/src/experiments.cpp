#include "fredent/experiments.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "fredent/entropy.hpp"
#include "fredent/errors.hpp"
#include "fredent/io.hpp"
#include "fredent/numeric.hpp"

namespace fredent::experiments {
namespace {

// Log-spaced integers 1..10^6, deduplicated, ascending; the sweeps are scalar
// closed forms, so no matrices are ever materialized.
std::vector<std::int64_t> log_spaced_dims() {
  std::vector<std::int64_t> dims;
  for (int k = 0; k <= 36; ++k) {
    auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, k / 6.0)));
    if (n < 1) n = 1;
    if (n > 1000000) n = 1000000;
    if (dims.empty() || dims.back() != n) dims.push_back(n);
  }
  return dims;
}

std::vector<ExperimentRow> fen_uniform_limit() {
  std::vector<ExperimentRow> rows;
  for (std::int64_t n : log_spaced_dims()) {
    ExperimentRow row;
    row.parameter = static_cast<double>(n);
    row.value = entropy::fen_uniform(n);
    row.certified_error = 0.0;  // closed form, exact to rounding
    rows.push_back(row);
  }
  return rows;
}

std::vector<ExperimentRow> gramian_dim_sweep() {
  std::vector<ExperimentRow> rows;
  for (std::int64_t n : log_spaced_dims()) {
    ExperimentRow row;
    row.parameter = static_cast<double>(n);
    // Uniform squared Schmidt coefficients 1/d: G = (1+1/d)^d.
    double inv = 1.0 / static_cast<double>(n);
    row.value = std::exp(static_cast<double>(n) * std::log1p(inv));
    row.certified_error = 0.0;  // closed form, exact to rounding
    rows.push_back(row);
  }
  return rows;
}

std::vector<ExperimentRow> plemelj_convergence() {
  // Fixed probe spectrum (a state, spectral radius 0.45 < 1).
  const std::vector<double> spectrum = {0.45, 0.25, 0.20, 0.10};
  double exact = 1.0;
  for (double v : spectrum) exact *= 1.0 + v;

  std::vector<ExperimentRow> rows;
  for (int order = 1; order <= 40; ++order) {
    // Partial sum of the log series sum_k (-1)^{k+1} p_k / k, p_k = sum v^k.
    KahanSum partial;
    for (int k = 1; k <= order; ++k) {
      double pk = 0;
      for (double v : spectrum) pk += std::pow(v, k);
      double sign = (k % 2 == 1) ? 1.0 : -1.0;
      partial.add(sign * pk / static_cast<double>(k));
    }
    // Tail magnitude bound: sum_{k>order} p_k/k <= sum_i v^{order+1} /
    // ((order+1)(1-v)).
    KahanSum tail;
    for (double v : spectrum) {
      tail.add(std::pow(v, order + 1) /
               (static_cast<double>(order + 1) * (1.0 - v)));
    }
    double approx = std::exp(partial.value());
    ExperimentRow row;
    row.parameter = order;
    row.value = std::abs(approx - exact);
    row.certified_error = approx * std::expm1(tail.value());
    rows.push_back(row);
  }
  return rows;
}

const std::vector<std::string> kNames = {"fen-uniform-limit",
                                         "gramian-dim-sweep",
                                         "plemelj-convergence"};

}  // namespace

const std::vector<std::string>& names() { return kNames; }

std::vector<ExperimentRow> run(std::string_view name) {
  if (name == "fen-uniform-limit") return fen_uniform_limit();
  if (name == "gramian-dim-sweep") return gramian_dim_sweep();
  if (name == "plemelj-convergence") return plemelj_convergence();
  throw Error("UnknownExperiment",
              "unknown experiment '" + std::string(name) + "'");
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "parameter,value,certified_error\n";
  for (const auto& row : rows) {
    out += io::format_real(row.parameter);
    out += ',';
    out += io::format_real(row.value);
    out += ',';
    out += io::format_real(row.certified_error);
    out += '\n';
  }
  return out;
}

}  // namespace fredent::experiments
