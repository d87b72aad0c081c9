#include "symsep/io.hpp"

#include <cmath>
#include <fstream>

namespace symsep {

using nlohmann::json;

json matrix_to_json(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix must be a non-empty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const auto& first = j.front();
  if (!first.is_array() || first.empty())
    throw ParseError("matrix rows must be non-empty arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(first.size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() ||
        static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix rows have inconsistent lengths");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2 ||
          !entry.at(0).is_number() || !entry.at(1).is_number())
        throw ParseError("matrix entries must be [re, im] pairs");
      const double re = entry.at(0).get<double>();
      const double im = entry.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError("matrix entries must be finite");
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

json state_to_json(const BipartiteState& s) {
  return {{"kind", "bipartite"}, {"d", s.d}, {"matrix", matrix_to_json(s.rho)}};
}

json state_to_json(const MultiQubitState& s) {
  return {{"kind", "multiqubit"}, {"n", s.n},
          {"matrix", matrix_to_json(s.rho)}};
}

StateFile state_file_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("state file must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("state file needs a string field 'kind'");
  StateFile file;
  file.kind = j.at("kind").get<std::string>();
  if (file.kind == "bipartite") {
    if (!j.contains("d") || !j.at("d").is_number_integer())
      throw ParseError("bipartite state file needs an integer field 'd'");
    file.dim = j.at("d").get<int>();
    if (file.dim < 2) throw ParseError("'d' must be at least 2");
  } else if (file.kind == "multiqubit") {
    if (!j.contains("n") || !j.at("n").is_number_integer())
      throw ParseError("multiqubit state file needs an integer field 'n'");
    file.dim = j.at("n").get<int>();
    if (file.dim < 1 || file.dim > 20)
      throw ParseError("'n' must be between 1 and 20");
  } else {
    throw ParseError("unknown state kind: " + file.kind);
  }
  if (!j.contains("matrix")) throw ParseError("state file needs 'matrix'");
  file.matrix = matrix_from_json(j.at("matrix"));
  const Eigen::Index expected =
      file.kind == "bipartite" ? Eigen::Index(file.dim) * file.dim
                               : Eigen::Index(1) << file.dim;
  if (file.matrix.rows() != expected || file.matrix.cols() != expected)
    throw ParseError("matrix shape does not match the declared dimension");
  return file;
}

StateFile load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return state_file_from_json(j);
}

namespace {

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("failed writing output file: " + path);
}

}  // namespace

void save_state_file(const std::string& path, const BipartiteState& s) {
  write_json_file(path, state_to_json(s));
}

void save_state_file(const std::string& path, const MultiQubitState& s) {
  write_json_file(path, state_to_json(s));
}

json witness_to_json(const Witness& w) {
  return {{"kind", to_string(w.kind)},
          {"constant", w.constant},
          {"matrix", matrix_to_json(w.op)}};
}

Witness witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("constant") ||
      !j.contains("matrix"))
    throw ParseError("witness file needs 'kind', 'constant' and 'matrix'");
  if (!j.at("constant").is_number())
    throw ParseError("witness 'constant' must be a number");
  Witness w;
  w.kind = witness_kind_from_string(j.at("kind").get<std::string>());
  w.constant = j.at("constant").get<double>();
  w.op = matrix_from_json(j.at("matrix"));
  return w;
}

void save_witness_file(const std::string& path, const Witness& w) {
  write_json_file(path, witness_to_json(w));
}

}  // namespace symsep
