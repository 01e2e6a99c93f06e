#pragma once

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "fredent/claim_report.hpp"
#include "fredent/linalg.hpp"

namespace fredent::io {

using json = nlohmann::ordered_json;

// On-disk matrix container. `entries` is row-major [re, im] pairs;
// `dims` carries the (dim_a, dim_b) split for pure bipartite states.
struct MatrixFile {
  enum class Kind { Matrix, Density, PureBipartite };
  Kind kind = Kind::Matrix;
  ComplexMatrix entries;
  std::optional<std::pair<Eigen::Index, Eigen::Index>> dims;
};

// {"dim_rows": r, "dim_cols": c, "entries": [[re, im], ...]}
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// Serialized JSON object for claim witnesses; doubles round-trip exactly
// (shortest-round-trip formatting), so replays are bit-exact.
std::string witness_text(std::initializer_list<std::pair<std::string, json>> fields);

// Errors: BadJson, UnknownKind, EntriesCountMismatch, NonFinite,
// DimsMismatch.
MatrixFile parse_matrix_file(const std::string& text);
MatrixFile load_matrix_file(const std::filesystem::path& path);  // + FileUnreadable
std::string dump_matrix_file(const MatrixFile& f);

// Interprets a 1 x n or n x 1 real matrix as a sequence. Errors:
// NotRealVector.
std::vector<double> sequence_from_matrix(const ComplexMatrix& m);

json report_to_json(const ClaimReport& r);

// Fixed "%.17g" rendering used for all human-facing numeric output; enough
// digits to reconstruct the double exactly.
std::string format_real(double x);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fredent::io
