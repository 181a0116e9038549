#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "statekit/io.hpp"

using statekit::ValidationError;
using namespace statekit::io;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(STATEKIT_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("distribution json round trip") {
  const statekit::prob::DiscreteDistribution mu({0.0, 1.5, 3.0}, {0.2, 0.3, 0.5});
  const auto j = to_json(mu);
  const auto back = distribution_from_json(j);
  REQUIRE(back.support_size() == 3);
  CHECK(back.weight_at(1.5) == 0.3);
  CHECK_THROWS_AS(distribution_from_json(json{{"points", {0.0}},
                                              {"weights", {1.0}},
                                              {"extra", 1}}),
                  ValidationError);
}

TEST_CASE("complex matrix json round trip") {
  Eigen::MatrixXcd m(2, 2);
  m << statekit::complexd(1, 2), statekit::complexd(0, -1),
      statekit::complexd(0.5, 0), statekit::complexd(-0.25, 3);
  const auto back = complex_matrix_from_json(to_json(m));
  CHECK((back - m).norm() == 0.0);
  // 'im' optional, 'dim' cross-checked
  CHECK_THROWS_AS(complex_matrix_from_json(json{{"dim", 3}, {"re", {{1.0, 0.0}, {0.0, 1.0}}}}),
                  ValidationError);
}

TEST_CASE("hash and float formatting are stable") {
  const json cfg{{"b", 1}, {"a", {1, 2, 3}}};
  CHECK(config_hash(cfg) == config_hash(json{{"a", {1, 2, 3}}, {"b", 1}}));
  CHECK(hash_string(config_hash(cfg)).size() == 16);
  CHECK(format_double(0.1) == format_double(0.1));
  CHECK(format_double(1.0 / 3.0).size() >= 17);
}

TEST_CASE("csv and gnuplot rendering") {
  CsvTable t;
  t.comments = {"config_hash=deadbeef"};
  t.columns = {"a", "b"};
  t.rows = {{1.0, 2.5}, {3.0, -4.25}};
  const std::string body = t.render();
  CHECK(body.find("# config_hash=deadbeef\n") == 0);
  CHECK(body.find("a,b\n") != std::string::npos);
  CHECK(body.find("3,-4.25\n") != std::string::npos);

  Eigen::MatrixXd f(2, 3);
  f << 1, 2, 3, 4, 5, 6;
  const std::string m = gnuplot_matrix(f, {0.0, 1.0}, {0.0, 0.5, 1.0}, "");
  std::istringstream lines(m);
  std::string first;
  std::getline(lines, first);
  CHECK(first == "2 0 1");
  std::string second;
  std::getline(lines, second);
  CHECK(second == "0 1 4");
}

TEST_CASE("cli rejects unknown keys with exit 2") {
  const std::string cfg = "/tmp/statekit_badcfg.json";
  write_file(cfg, R"({"density": {"re": [[1.0,0.0],[0.0,0.0]]}, "typo": 1})");
  CHECK(run_cli("states purity --config " + cfg + " > /dev/null 2>&1") == 2);
}

TEST_CASE("cli purity output is deterministic and correct") {
  const std::string cfg = "/tmp/statekit_purity.json";
  write_file(cfg, R"({"density": {"re": [[0.3333333333333333,0.0],
                                          [0.0,0.6666666666666667]]}})");
  const std::string out1 = "/tmp/statekit_purity_out1.txt";
  const std::string out2 = "/tmp/statekit_purity_out2.txt";
  CHECK(run_cli("states purity --config " + cfg + " > " + out1) == 0);
  CHECK(run_cli("states purity --config " + cfg + " > " + out2) == 0);
  CHECK(slurp(out1) == slurp(out2));
  const auto j = json::parse(slurp(out1));
  CHECK(j.at("pure").get<bool>() == false);
  CHECK(std::abs(j.at("hs_norm").get<double>() - std::sqrt(5.0) / 3.0) <= 1e-12);
}

TEST_CASE("cli weyl table reruns byte-identically") {
  const std::string cfg = "/tmp/statekit_weyl.json";
  write_file(cfg, R"({
    "grid": {"n_points": 512, "half_length": 6.0},
    "packet": {"x0": 0.3, "xi0": -0.5},
    "symbol": {"type": "quadratic_window", "center": [0.3, -0.5],
               "curvature": [1.0, 1.0], "r_inner": 2.2, "r_outer": 4.5},
    "hbars": [0.4, 0.2]
  })");
  CHECK(run_cli("weyl --config " + cfg + " --out /tmp/statekit_w1 > /dev/null") == 0);
  CHECK(run_cli("weyl --config " + cfg + " --out /tmp/statekit_w2 > /dev/null") == 0);
  const std::string a = slurp("/tmp/statekit_w1/semiclassical_table.csv");
  CHECK(a == slurp("/tmp/statekit_w2/semiclassical_table.csv"));
  CHECK(a.find("# config_hash=") == 0);
  CHECK(a.find("hbar,expectation,target,error") != std::string::npos);
}

TEST_CASE("cli selftest and the gap action") {
  CHECK(run_cli("selftest > /dev/null") == 0);

  const std::string cfg = "/tmp/statekit_gap.json";
  write_file(cfg, R"({
    "targets": [
      {"observable": {"re": [[1.0, 0.0], [0.0, -1.0]]},
       "value": -0.3333333333333333},
      {"observable": {"re": [[0.0, 1.0], [1.0, 0.0]]}, "value": 0.0},
      {"observable": {"re": [[0.0, 0.0], [0.0, 0.0]],
                      "im": [[0.0, 1.0], [-1.0, 0.0]]}, "value": 0.0}
    ],
    "resolution": 100
  })");
  const std::string out = "/tmp/statekit_gap_out.txt";
  CHECK(run_cli("states gap --config " + cfg + " > " + out) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j.at("gap").get<double>() >= 0.4);
}

TEST_CASE("cli maps numerical-health problems to exit 3") {
  const std::string cfg = "/tmp/statekit_alias.json";
  // symbol momentum support far beyond the grid's range at this hbar
  write_file(cfg, R"({
    "grid": {"n_points": 256, "half_length": 4.0},
    "packet": {"x0": 0.0, "xi0": 0.0},
    "symbol": {"type": "bump", "center": [0.0, 0.0], "radius": [1.0, 40.0]},
    "hbars": [0.05]
  })");
  CHECK(run_cli("weyl --config " + cfg + " --out /tmp/statekit_w3 > /dev/null 2>&1") == 3);
}
