#ifndef STATEKIT_IO_HPP
#define STATEKIT_IO_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "statekit/common.hpp"
#include "statekit/probability.hpp"
#include "statekit/states.hpp"

namespace statekit::io {

using nlohmann::json;

/// Rejects any key of obj outside the allowed list.
void require_keys(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& context);

json to_json(const prob::DiscreteDistribution& mu);
prob::DiscreteDistribution distribution_from_json(const json& j);

/// Complex matrices serialise as {"dim": n, "re": [[...]], "im": [[...]]}.
json to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd complex_matrix_from_json(const json& j);

/// Complex vectors serialise as {"re": [...], "im": [...]}.
json to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd complex_vector_from_json(const json& j);

states::DensityMatrix density_from_json(const json& j);
states::Observable observable_from_json(const json& j);

/// FNV-1a over the canonical dump; embedded in every emitted table.
std::uint64_t config_hash(const json& config);
std::string hash_string(std::uint64_t h);

/// Shortest round-trip decimal representation, locale-independent.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> comments;  // emitted as "# ..." lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string render() const;
};

/// Gnuplot nonuniform-matrix text block: first row holds the x nodes,
/// every following row starts with its y node.
std::string gnuplot_matrix(const Eigen::MatrixXd& field,
                           const std::vector<double>& x,
                           const std::vector<double>& y,
                           const std::string& comment);

void write_file(const std::string& path, const std::string& content);
json read_json_file(const std::string& path);

}  // namespace statekit::io

#endif
