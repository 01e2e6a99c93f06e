#include "fredent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fredent::io {

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      entries.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    }
  }
  return json{{"dim_rows", m.rows()}, {"dim_cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim_rows") || !j.contains("dim_cols") ||
      !j.contains("entries") || !j["entries"].is_array()) {
    throw Error("BadJson", "matrix object needs dim_rows, dim_cols, entries");
  }
  Eigen::Index rows = j["dim_rows"].get<Eigen::Index>();
  Eigen::Index cols = j["dim_cols"].get<Eigen::Index>();
  if (rows < 0 || cols < 0) throw Error("BadJson", "negative dimensions");
  const json& entries = j["entries"];
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    throw Error("EntriesCountMismatch",
                std::to_string(entries.size()) + " entries for " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  ComplexMatrix m(rows, cols);
  Eigen::Index idx = 0;
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw Error("BadJson", "each entry must be a [re, im] pair");
    }
    m(idx / cols, idx % cols) = Complex(e[0].get<double>(), e[1].get<double>());
    ++idx;
  }
  require_finite(m, "matrix file entries");
  return m;
}

std::string witness_text(std::initializer_list<std::pair<std::string, json>> fields) {
  json w = json::object();
  for (const auto& [key, value] : fields) w[key] = value;
  return w.dump();
}

namespace {

MatrixFile::Kind kind_from_string(const std::string& s) {
  if (s == "matrix") return MatrixFile::Kind::Matrix;
  if (s == "density") return MatrixFile::Kind::Density;
  if (s == "pure_bipartite") return MatrixFile::Kind::PureBipartite;
  throw Error("UnknownKind", s);
}

const char* kind_to_string(MatrixFile::Kind k) {
  switch (k) {
    case MatrixFile::Kind::Matrix: return "matrix";
    case MatrixFile::Kind::Density: return "density";
    case MatrixFile::Kind::PureBipartite: return "pure_bipartite";
  }
  return "matrix";
}

MatrixFile parse_matrixfile_json(const json& j) {
  if (!j.is_object()) throw Error("BadJson", "top level must be an object");
  MatrixFile f;
  f.kind = j.contains("kind") ? kind_from_string(j["kind"].get<std::string>())
                              : MatrixFile::Kind::Matrix;
  f.entries = matrix_from_json(j);
  if (j.contains("dims")) {
    const json& d = j["dims"];
    if (!d.is_array() || d.size() != 2) {
      throw Error("BadJson", "dims must be a [dim_a, dim_b] pair");
    }
    f.dims = {d[0].get<Eigen::Index>(), d[1].get<Eigen::Index>()};
  }
  if (f.kind == MatrixFile::Kind::PureBipartite) {
    if (!f.dims) f.dims = {f.entries.rows(), f.entries.cols()};
    if (f.dims->first != f.entries.rows() || f.dims->second != f.entries.cols()) {
      throw Error("DimsMismatch",
                  "dims must match the coefficient matrix shape");
    }
  }
  return f;
}

}  // namespace

MatrixFile parse_matrix_file(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("BadJson", "not valid JSON");
  return parse_matrixfile_json(j);
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileUnreadable", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string dump_matrix_file(const MatrixFile& f) {
  json j = matrix_to_json(f.entries);
  json out = json::object();
  out["kind"] = kind_to_string(f.kind);
  out["dim_rows"] = j["dim_rows"];
  out["dim_cols"] = j["dim_cols"];
  if (f.dims) out["dims"] = json::array({f.dims->first, f.dims->second});
  out["entries"] = j["entries"];
  return out.dump(2) + "\n";
}

std::vector<double> sequence_from_matrix(const ComplexMatrix& m) {
  if (m.rows() != 1 && m.cols() != 1) {
    throw Error("NotRealVector", "sequence input must be 1 x n or n x 1");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    Complex c = m(i);
    if (c.imag() != 0.0) {
      throw Error("NotRealVector", "sequence entries must have zero imaginary part");
    }
    out.push_back(c.real());
  }
  return out;
}

json report_to_json(const ClaimReport& r) {
  json j = json::object();
  j["claim_id"] = r.claim_id;
  j["trials"] = r.trials;
  j["violations"] = r.violations;
  j["worst_margin"] = r.worst_margin;
  j["witness"] = r.witness ? json::parse(*r.witness) : json(nullptr);
  return j;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  // Stage next to the target and rename so readers never see a partial file.
  std::filesystem::path staged = path;
  staged += ".tmp";
  {
    std::ofstream out(staged, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("FileUnwritable", path.string());
    out << text;
    out.flush();
    if (!out) throw Error("FileUnwritable", path.string());
  }
  std::error_code ec;
  std::filesystem::rename(staged, path, ec);
  if (ec) throw Error("FileUnwritable", path.string() + ": " + ec.message());
}

}  // namespace fredent::io
