#include "fredent/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fredent/bipartite.hpp"
#include "fredent/channels.hpp"
#include "fredent/claims.hpp"
#include "fredent/entropy.hpp"
#include "fredent/errors.hpp"
#include "fredent/experiments.hpp"
#include "fredent/fredholm.hpp"
#include "fredent/io.hpp"
#include "fredent/linalg.hpp"
#include "fredent/majorization.hpp"
#include "fredent/numeric.hpp"

namespace fredent::cli {
namespace {

using io::json;

constexpr std::uint64_t kDefaultSeed = 12345;

Complex parse_z_flag(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char sep = 0;
  if (!(in >> re)) throw Error("FlagInvalid", "--z expects RE or RE,IM");
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) {
      throw Error("FlagInvalid", "--z expects RE or RE,IM");
    }
  }
  std::string rest;
  if (in >> rest) throw Error("FlagInvalid", "--z expects RE or RE,IM");
  return {re, im};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("FREDENT_SEED")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) {
      return static_cast<std::uint64_t>(parsed);
    }
    throw Error("FlagInvalid", "FREDENT_SEED is not an unsigned integer");
  }
  return kDefaultSeed;
}

void emit(std::ostream& out, const std::string& text,
          const std::string& out_path) {
  out << text;
  if (!out_path.empty()) io::write_text_file(out_path, text);
}

std::string spectrum_head_text(const std::vector<double>& values,
                               std::size_t max_terms = 8) {
  std::string text;
  std::size_t n = std::min(values.size(), max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) text += ' ';
    text += io::format_real(values[i]);
  }
  if (values.size() > max_terms) text += " ...";
  return text;
}

DensityMatrix density_from_file(const io::MatrixFile& file) {
  if (file.kind != io::MatrixFile::Kind::Density) {
    throw Error("KindMismatch", "expected a density-kind input file");
  }
  return make_density(file.entries);
}

// --- fen ------------------------------------------------------------------

int cmd_fen(const std::string& input, const std::string& out_path,
            std::ostream& out) {
  auto q = density_from_file(io::load_matrix_file(input));
  auto value = entropy::fen(q);

  json j;
  j["plus"] = value.plus;
  j["minus"] = value.minus;
  j["tail_bound"] = value.tail_bound;
  j["spectrum_head"] = json::array();
  const auto& spec = q.spectrum().values();
  for (std::size_t i = 0; i < spec.size() && i < 8; ++i) {
    j["spectrum_head"].push_back(spec[i]);
  }

  std::string text;
  text += "fen_plus = " + io::format_real(value.plus) + "\n";
  text += "fen_minus = " + io::format_real(value.minus) + "\n";
  text += "tail_bound = " + io::format_real(value.tail_bound) + "\n";
  text += "spectrum_head = " + spectrum_head_text(spec) + "\n";
  text += j.dump() + "\n";
  emit(out, text, out_path);
  return 0;
}

// --- det ------------------------------------------------------------------

const char* route_name(fredholm::DetRoute route) {
  switch (route) {
    case fredholm::DetRoute::Spectral:
      return "spectral";
    case fredholm::DetRoute::Grothendieck:
      return "grothendieck";
    case fredholm::DetRoute::Plemelj:
      return "plemelj";
    case fredholm::DetRoute::Direct:
      return "direct";
  }
  return "unknown";
}

fredholm::DetRoute parse_route(const std::string& name) {
  if (name == "spectral") return fredholm::DetRoute::Spectral;
  if (name == "grothendieck") return fredholm::DetRoute::Grothendieck;
  if (name == "plemelj") return fredholm::DetRoute::Plemelj;
  if (name == "direct") return fredholm::DetRoute::Direct;
  throw Error("FlagInvalid",
              "--route must be spectral, grothendieck, plemelj, or direct");
}

int cmd_det(const std::string& input, const std::string& z_text,
            const std::string& route_text, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  Complex z = parse_z_flag(z_text);
  fredholm::DetRoute route = parse_route(route_text);
  auto file = io::load_matrix_file(input);

  std::optional<fredholm::DeterminantResult> requested;
  if (route == fredholm::DetRoute::Direct) {
    requested = fredholm::det_direct(file.entries, z);
  }

  // Cross-check every applicable route whenever the input is PSD; a
  // disagreement beyond 1e-8 relative is reported as exit 3.
  std::optional<TraceClassOperator> psd;
  try {
    psd = make_trace_class(file.entries);
  } catch (const Error&) {
    if (route != fredholm::DetRoute::Direct) throw;
  }

  if (psd) {
    std::vector<fredholm::DeterminantResult> results;
    results.push_back(fredholm::det_spectral(*psd, z));
    results.push_back(fredholm::det_grothendieck(
        *psd, z, static_cast<int>(psd->matrix().rows())));
    results.push_back(fredholm::det_direct(psd->matrix(), z));
    if (std::abs(z) * psd->spectral_radius() < 1.0) {
      results.push_back(fredholm::det_plemelj(*psd, z, 400));
    } else if (route == fredholm::DetRoute::Plemelj) {
      // Requested route is out of its convergence domain: surface the
      // domain error (exit 2) rather than a disagreement.
      fredholm::det_plemelj(*psd, z, 400);
    }

    double scale = std::max(1.0, std::abs(results.front().value));
    double worst = 0.0;
    for (const auto& r : results) {
      worst = std::max(worst,
                       std::abs(r.value - results.front().value) / scale);
    }
    if (worst > 1e-8) {
      err << "route disagreement: relative spread " << io::format_real(worst)
          << "\n";
      for (const auto& r : results) {
        err << "  " << route_name(r.route) << " = "
            << io::format_real(r.value.real()) << " + "
            << io::format_real(r.value.imag()) << "i\n";
      }
      return 3;
    }
    for (const auto& r : results) {
      if (r.route == route) requested = r;
    }
  }

  if (!requested) {
    // Unreachable: non-PSD inputs either threw or used the direct route.
    throw Error("InternalError", "no determinant route produced a value");
  }

  json j;
  j["value"] = json::array({requested->value.real(), requested->value.imag()});
  j["route"] = route_name(requested->route);
  j["bound"] = requested->bound;
  if (requested->truncation_order) {
    j["truncation_order"] = *requested->truncation_order;
  } else {
    j["truncation_order"] = nullptr;
  }

  std::string text;
  text += "value = " + io::format_real(requested->value.real()) + " + " +
          io::format_real(requested->value.imag()) + "i\n";
  text += std::string("route = ") + route_name(requested->route) + "\n";
  text += "bound = " + io::format_real(requested->bound) + "\n";
  if (requested->truncation_order) {
    text += "truncation_order = " + std::to_string(*requested->truncation_order) +
            "\n";
  }
  text += j.dump() + "\n";
  emit(out, text, out_path);
  return 0;
}

// --- schmidt ----------------------------------------------------------------

int cmd_schmidt(const std::string& input, const std::string& out_path,
                std::ostream& out) {
  auto file = io::load_matrix_file(input);
  if (file.kind != io::MatrixFile::Kind::PureBipartite) {
    throw Error("KindMismatch", "expected a pure_bipartite-kind input file");
  }
  auto psi = bipartite::make_pure_state(file.entries);

  const std::vector<double>& tau = psi.schmidt().values();
  KahanSum sum_sq;
  for (double v : tau) sum_sq.add(v * v);

  double gram = bipartite::gramian_function(psi).real();
  double log_gram = bipartite::log_gramian(psi);
  double fen_value = bipartite::fen_pure(psi);

  json j;
  j["schmidt_coefficients"] = tau;
  j["sum_of_squares"] = sum_sq.value();
  j["gramian"] = gram;
  j["log_gramian"] = log_gram;
  j["fen_plus"] = fen_value;

  std::string text;
  text += "schmidt = " + spectrum_head_text(tau, 16) + "\n";
  text += "sum_of_squares = " + io::format_real(sum_sq.value()) + "\n";
  text += "gramian = " + io::format_real(gram) + "\n";
  text += "log_gramian = " + io::format_real(log_gram) + "\n";
  text += "fen_plus = " + io::format_real(fen_value) + "\n";
  text += j.dump() + "\n";
  emit(out, text, out_path);
  return 0;
}

// --- majorize ---------------------------------------------------------------

int cmd_majorize(const std::vector<std::string>& inputs,
                 const std::string& mode, const std::string& out_path,
                 std::ostream& out) {
  if (inputs.size() != 2) {
    throw Error("FlagInvalid",
                "majorize needs exactly two --input files (dominated first)");
  }
  auto file_a = io::load_matrix_file(inputs[0]);
  auto file_b = io::load_matrix_file(inputs[1]);

  majorization::MajorizationVerdict verdict{
      majorization::MajorizationRelation::Additive, false, std::nullopt, {}};
  if (mode == "additive" || mode == "multiplicative") {
    majorization::OrderedSequence a(io::sequence_from_matrix(file_a.entries));
    majorization::OrderedSequence b(io::sequence_from_matrix(file_b.entries));
    verdict = mode == "additive" ? majorization::additive_majorizes(a, b)
                                 : majorization::multiplicative_majorizes(a, b);
  } else if (mode == "state") {
    auto q1 = density_from_file(file_a);
    auto q2 = density_from_file(file_b);
    verdict = majorization::state_m_majorizes(q1, q2);
  } else {
    throw Error("FlagInvalid",
                "--mode must be additive, multiplicative, or state");
  }

  json j;
  j["mode"] = mode;
  j["holds"] = verdict.holds;
  j["first_violation_prefix"] =
      verdict.first_violation_index
          ? json(*verdict.first_violation_index)
          : json(nullptr);
  j["margins"] = verdict.margins;

  std::string text;
  text += std::string("holds = ") + (verdict.holds ? "true" : "false") + "\n";
  if (verdict.first_violation_index) {
    text += "first_violation_prefix = " +
            std::to_string(*verdict.first_violation_index) + "\n";
  }
  text += "margins = " + spectrum_head_text(verdict.margins, 16) + "\n";
  text += j.dump() + "\n";
  emit(out, text, out_path);
  return verdict.holds ? 0 : 1;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& claim_id, std::int64_t trials, int dim,
               std::uint64_t seed, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  const claims::ClaimSpec* spec = claims::find_claim(claim_id);
  if (!spec) {
    std::string known;
    for (const auto& s : claims::registry()) {
      if (!known.empty()) known += ", ";
      known += s.id;
    }
    throw Error("UnknownClaim", claim_id + " (known: " + known + ")");
  }
  if (trials < 1) throw Error("FlagInvalid", "--trials must be >= 1");
  if (dim < 1) throw Error("FlagInvalid", "--dim must be >= 1");

  ClaimReport report = spec->run(trials, dim, seed);
  bool matched = claims::matches_expectation(*spec, report);

  std::string text = io::report_to_json(report).dump() + "\n";
  emit(out, text, out_path);
  err << "status: "
      << (report.violations > 0 ? "counterexample-found" : "holds")
      << " (expected "
      << (spec->expected == claims::ExpectedStatus::DocumentedCounterexample
              ? "documented-counterexample"
              : "holds")
      << ", " << (matched ? "match" : "MISMATCH") << ")\n";
  return matched ? 0 : 4;
}

// --- experiment -------------------------------------------------------------

int cmd_experiment(const std::string& name, const std::string& out_path,
                   std::ostream& out) {
  auto rows = experiments::run(name);
  emit(out, experiments::to_csv(rows), out_path);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "fredent: Fredholm-determinant entropies, majorization, and channel "
      "probes"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string z_text = "1,0";
  std::string route_text = "spectral";
  std::string mode;
  std::vector<std::string> majorize_inputs;
  std::string claim_id;
  std::string experiment_name;
  std::int64_t trials = 1000;
  int dim = 6;
  std::optional<std::uint64_t> seed_flag;

  auto* fen_cmd =
      app.add_subcommand("fen", "renormalized entropy of a density file");
  fen_cmd->add_option("--input", input, "density-kind matrix file")
      ->required();
  fen_cmd->add_option("--out", out_path, "also write the JSON report here");

  auto* det_cmd =
      app.add_subcommand("det", "Fredholm determinant det(I + zA)");
  det_cmd->add_option("--input", input, "matrix or density file")->required();
  det_cmd->add_option("--z", z_text, "evaluation point RE,IM (default 1,0)");
  det_cmd->add_option("--route", route_text,
                      "spectral | grothendieck | plemelj | direct");
  det_cmd->add_option("--out", out_path, "also write the JSON report here");

  auto* schmidt_cmd = app.add_subcommand(
      "schmidt", "Schmidt data and Gramian report of a pure bipartite file");
  schmidt_cmd->add_option("--input", input, "pure_bipartite-kind file")
      ->required();
  schmidt_cmd->add_option("--out", out_path, "also write the JSON report here");

  auto* majorize_cmd = app.add_subcommand(
      "majorize",
      "majorization verdict: does the second input majorize the first?");
  majorize_cmd
      ->add_option("--input", majorize_inputs,
                   "two files: dominated candidate, then dominating")
      ->required()
      ->expected(2);
  majorize_cmd
      ->add_option("--mode", mode, "additive | multiplicative | state")
      ->required();
  majorize_cmd->add_option("--out", out_path,
                           "also write the JSON report here");

  auto* verify_cmd =
      app.add_subcommand("verify", "run a registered claim checker");
  verify_cmd->add_option("claim", claim_id, "registered claim id")->required();
  verify_cmd->add_option("--trials", trials, "number of randomized trials");
  verify_cmd->add_option("--dim", dim, "dimension cap for sampled operators");
  verify_cmd->add_option("--seed", seed_flag,
                         "RNG seed (falls back to FREDENT_SEED, then 12345)");
  verify_cmd->add_option("--out", out_path, "also write the JSON report here");

  auto* experiment_cmd =
      app.add_subcommand("experiment", "closed-form limit sweeps as CSV");
  experiment_cmd
      ->add_option("name", experiment_name,
                   "fen-uniform-limit | gramian-dim-sweep | "
                   "plemelj-convergence")
      ->required();
  experiment_cmd->add_option("--out", out_path, "also write the CSV here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (fen_cmd->parsed()) return cmd_fen(input, out_path, out);
    if (det_cmd->parsed()) {
      return cmd_det(input, z_text, route_text, out_path, out, err);
    }
    if (schmidt_cmd->parsed()) return cmd_schmidt(input, out_path, out);
    if (majorize_cmd->parsed()) {
      return cmd_majorize(majorize_inputs, mode, out_path, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(claim_id, trials, dim, resolve_seed(seed_flag),
                        out_path, out, err);
    }
    if (experiment_cmd->parsed()) {
      return cmd_experiment(experiment_name, out_path, out);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";  // what() already leads with the error code
    return 2;
  }
  err << "no command given\n";
  return 2;
}

}  // namespace fredent::cli
