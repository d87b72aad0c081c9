#pragma once

#include <Eigen/Dense>

#include <string>

#include "symsep/states.hpp"
#include "symsep/witness.hpp"

// Forward-declaring nlohmann::json keeps the heavy header out of most
// translation units.
#include <json.hpp>

namespace symsep {

inline constexpr const char* kToolName = "symsep";
inline constexpr const char* kToolVersion = "0.1.0";

/// Raw contents of a state file before density-matrix validation.
/// kind is "bipartite" (dim = d) or "multiqubit" (dim = n).
struct StateFile {
  std::string kind;
  int dim = 0;
  Eigen::MatrixXcd matrix;
};

/// Matrix encoding shared by all file formats: an array of rows, each row an
/// array of [re, im] pairs.
nlohmann::json matrix_to_json(const Eigen::Ref<const Eigen::MatrixXcd>& m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const BipartiteState& s);
nlohmann::json state_to_json(const MultiQubitState& s);

/// Parses a state file object. Throws ParseError on malformed input.
StateFile state_file_from_json(const nlohmann::json& j);
StateFile load_state_file(const std::string& path);

void save_state_file(const std::string& path, const BipartiteState& s);
void save_state_file(const std::string& path, const MultiQubitState& s);

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
void save_witness_file(const std::string& path, const Witness& w);

}  // namespace symsep
