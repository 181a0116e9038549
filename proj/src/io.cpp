#include "statekit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace statekit::io {

void require_keys(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& context) {
  if (!obj.is_object())
    throw ValidationError(context + ": expected a JSON object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const auto& k : allowed)
      if (item.key() == k) { ok = true; break; }
    if (!ok)
      throw ValidationError(context + ": unknown key '" + item.key() + "'");
  }
}

json to_json(const prob::DiscreteDistribution& mu) {
  return json{{"points", mu.points()}, {"weights", mu.weights()}};
}

prob::DiscreteDistribution distribution_from_json(const json& j) {
  require_keys(j, {"points", "weights"}, "distribution");
  if (!j.contains("points") || !j.contains("weights"))
    throw ValidationError("distribution: needs 'points' and 'weights'");
  return prob::DiscreteDistribution(j.at("points").get<std::vector<double>>(),
                                    j.at("weights").get<std::vector<double>>());
}

json to_json(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<double>> re(n), im(n);
  for (int i = 0; i < n; ++i) {
    re[i].resize(m.cols());
    im[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      re[i][j] = m(i, j).real();
      im[i][j] = m(i, j).imag();
    }
  }
  return json{{"dim", n}, {"re", re}, {"im", im}};
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j) {
  require_keys(j, {"dim", "re", "im"}, "matrix");
  if (!j.contains("re"))
    throw ValidationError("matrix: needs at least 're'");
  const auto re = j.at("re").get<std::vector<std::vector<double>>>();
  const std::size_t rows = re.size();
  if (rows == 0) throw ValidationError("matrix: empty");
  const std::size_t cols = re.front().size();
  std::vector<std::vector<double>> im;
  if (j.contains("im")) im = j.at("im").get<std::vector<std::vector<double>>>();
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != rows)
    throw ValidationError("matrix: 'dim' disagrees with the row count");
  if (!im.empty() && im.size() != rows)
    throw ValidationError("matrix: 're' and 'im' shapes disagree");

  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (re[i].size() != cols || (!im.empty() && im[i].size() != cols))
      throw ValidationError("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = complexd(re[i][k], im.empty() ? 0.0 : im[i][k]);
  }
  return m;
}

json to_json(const Eigen::VectorXcd& v) {
  std::vector<double> re(v.size()), im(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re[i] = v[i].real();
    im[i] = v[i].imag();
  }
  return json{{"re", re}, {"im", im}};
}

Eigen::VectorXcd complex_vector_from_json(const json& j) {
  require_keys(j, {"re", "im"}, "vector");
  if (!j.contains("re")) throw ValidationError("vector: needs 're'");
  const auto re = j.at("re").get<std::vector<double>>();
  std::vector<double> im;
  if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
  if (!im.empty() && im.size() != re.size())
    throw ValidationError("vector: 're' and 'im' lengths disagree");
  Eigen::VectorXcd v(re.size());
  for (std::size_t i = 0; i < re.size(); ++i)
    v[i] = complexd(re[i], im.empty() ? 0.0 : im[i]);
  return v;
}

states::DensityMatrix density_from_json(const json& j) {
  return states::DensityMatrix(complex_matrix_from_json(j));
}

states::Observable observable_from_json(const json& j) {
  return states::Observable(complex_matrix_from_json(j));
}

std::uint64_t config_hash(const json& config) {
  const std::string dump = config.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_string(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvTable::render() const {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << columns[i] << (i + 1 < columns.size() ? "," : "");
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
    out << "\n";
  }
  return out.str();
}

std::string gnuplot_matrix(const Eigen::MatrixXd& field,
                           const std::vector<double>& x,
                           const std::vector<double>& y,
                           const std::string& comment) {
  if (static_cast<Eigen::Index>(x.size()) != field.rows() ||
      static_cast<Eigen::Index>(y.size()) != field.cols())
    throw ValidationError("gnuplot_matrix: axis lengths disagree with the field");
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << x.size();
  for (const double v : x) out << " " << format_double(v);
  out << "\n";
  for (std::size_t j = 0; j < y.size(); ++j) {
    out << format_double(y[j]);
    for (std::size_t i = 0; i < x.size(); ++i)
      out << " " << format_double(field(i, j));
    out << "\n";
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open for writing: " + path);
  f << content;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open config: " + path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace statekit::io
