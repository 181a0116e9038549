// Command-line harness: config-driven experiments over the statekit library.
// Exit codes: 0 success, 2 validation failure, 3 numerical-health failure.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <random>

#include "statekit/algebra_gns.hpp"
#include "statekit/dynamics.hpp"
#include "statekit/io.hpp"
#include "statekit/probability.hpp"
#include "statekit/purification.hpp"
#include "statekit/states.hpp"
#include "statekit/weyl.hpp"

namespace {

using nlohmann::json;
using statekit::NumericalHealthError;
using statekit::ValidationError;
using statekit::complexd;
namespace io = statekit::io;

constexpr const char* kGlobalKeys[] = {"output_dir", "format", "seed", "tolerances"};

struct Globals {
  std::string output_dir = ".";
  std::string format = "csv";  // csv | json for tabular outputs
  std::uint64_t seed = 1;
  json tolerances = json::object();
};

Globals parse_globals(const json& cfg, const std::string& out_override) {
  Globals g;
  if (cfg.contains("output_dir")) g.output_dir = cfg.at("output_dir").get<std::string>();
  if (!out_override.empty()) g.output_dir = out_override;
  if (cfg.contains("format")) {
    g.format = cfg.at("format").get<std::string>();
    if (g.format != "csv" && g.format != "json")
      throw ValidationError("config: format must be 'csv' or 'json'");
  }
  if (cfg.contains("seed")) g.seed = cfg.at("seed").get<std::uint64_t>();
  if (cfg.contains("tolerances")) {
    g.tolerances = cfg.at("tolerances");
    io::require_keys(g.tolerances, {"purity", "null_tol"}, "tolerances");
  }
  return g;
}

std::vector<std::string> with_globals(std::vector<std::string> keys) {
  for (const char* k : kGlobalKeys) keys.push_back(k);
  return keys;
}

void emit_table(const Globals& g, const std::string& stem, const io::CsvTable& table) {
  std::filesystem::create_directories(g.output_dir);
  const std::string path_base = g.output_dir + "/" + stem;
  if (g.format == "csv") {
    io::write_file(path_base + ".csv", table.render());
    return;
  }
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row;
    for (std::size_t i = 0; i < table.columns.size(); ++i) row[table.columns[i]] = r[i];
    rows.push_back(row);
  }
  json doc{{"comments", table.comments}, {"rows", rows}};
  io::write_file(path_base + ".json", doc.dump(2) + "\n");
}

int thread_budget(std::size_t jobs) {
  if (const char* env = std::getenv("STATEKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<int>(std::min<std::size_t>(v, jobs));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<std::size_t>(hw ? hw : 1, jobs));
}

statekit::weyl::PhaseSpaceSymbol symbol_from_json(const json& j) {
  io::require_keys(j, {"type", "center", "radius", "amplitude", "curvature",
                       "r_inner", "r_outer"},
                   "symbol");
  const std::string type = j.at("type").get<std::string>();
  const auto center = j.at("center").get<std::vector<double>>();
  if (center.size() != 2) throw ValidationError("symbol: center must be [x, xi]");
  if (type == "bump") {
    const auto radius = j.at("radius").get<std::vector<double>>();
    if (radius.size() != 2) throw ValidationError("symbol: radius must be [rx, rxi]");
    const double amp = j.value("amplitude", 1.0);
    return statekit::weyl::bump_symbol(center[0], center[1], radius[0], radius[1], amp);
  }
  if (type == "quadratic_window") {
    const auto curvature = j.value("curvature", std::vector<double>{1.0, 1.0});
    if (curvature.size() != 2)
      throw ValidationError("symbol: curvature must be [cx2, cxi2]");
    return statekit::weyl::windowed_quadratic_symbol(
        center[0], center[1], curvature[0], curvature[1],
        j.at("r_inner").get<double>(), j.at("r_outer").get<double>());
  }
  throw ValidationError("symbol: unknown type '" + type + "'");
}

statekit::grid::Grid1D grid_from_json(const json& j) {
  io::require_keys(j, {"n_points", "half_length"}, "grid");
  return statekit::grid::Grid1D(j.at("n_points").get<int>(),
                                j.at("half_length").get<double>());
}

int run_states(const std::string& action, const json& cfg, const Globals& g) {
  using namespace statekit::states;
  json out;
  if (action == "purity") {
    io::require_keys(cfg, with_globals({"density", "tol"}), "states purity");
    const DensityMatrix rho = io::density_from_json(cfg.at("density"));
    double tol = cfg.value("tol", statekit::tol::purity);
    if (g.tolerances.contains("purity")) tol = g.tolerances.at("purity").get<double>();
    out["hs_norm"] = hs_norm(rho);
    out["tol"] = tol;
    out["pure"] = is_pure(rho, tol);
  } else if (action == "bloch") {
    io::require_keys(cfg, with_globals({"density", "a"}), "states bloch");
    if (cfg.contains("a") == cfg.contains("density"))
      throw ValidationError("states bloch: provide exactly one of 'a' or 'density'");
    if (cfg.contains("a")) {
      const auto a = cfg.at("a").get<std::vector<double>>();
      if (a.size() != 3) throw ValidationError("states bloch: 'a' must have 3 entries");
      const DensityMatrix rho =
          density_from_bloch(BlochVector(Eigen::Vector3d(a[0], a[1], a[2])));
      out["density"] = io::to_json(rho.matrix());
      out["hs_norm"] = hs_norm(rho);
    } else {
      const DensityMatrix rho = io::density_from_json(cfg.at("density"));
      const BlochVector b = bloch_from_density(rho);
      out["a"] = std::vector<double>{b.a[0], b.a[1], b.a[2]};
      out["norm"] = b.a.norm();
    }
  } else if (action == "decompose") {
    io::require_keys(cfg, with_globals({"density"}), "states decompose");
    const DensityMatrix rho = io::density_from_json(cfg.at("density"));
    json weights = json::array(), vectors = json::array();
    for (const auto& c : extremal_decomposition(rho)) {
      weights.push_back(c.weight);
      vectors.push_back(io::to_json(c.psi));
    }
    out["weights"] = weights;
    out["vectors"] = vectors;
  } else if (action == "gap") {
    io::require_keys(cfg, with_globals({"targets", "resolution"}), "states gap");
    std::vector<GapTarget> targets;
    for (const auto& t : cfg.at("targets")) {
      io::require_keys(t, {"observable", "value"}, "gap target");
      targets.push_back(
          {io::observable_from_json(t.at("observable")), t.at("value").get<double>()});
    }
    out["gap"] = vector_state_gap(targets, cfg.value("resolution", 200));
  } else {
    throw ValidationError("states: unknown action '" + action + "'");
  }
  out["config_hash"] = io::hash_string(io::config_hash(cfg));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_gns(const json& cfg, const Globals& g) {
  using namespace statekit::gns;
  io::require_keys(
      cfg, with_globals({"ambient_dim", "generators", "include_identity", "state",
                         "null_tol"}),
      "gns config");
  const int dim = cfg.at("ambient_dim").get<int>();
  std::vector<Eigen::MatrixXcd> generators;
  for (const auto& gj : cfg.at("generators")) {
    generators.push_back(io::complex_matrix_from_json(gj));
    if (generators.back().rows() != dim)
      throw ValidationError("gns config: generator dimension differs from ambient_dim");
  }
  const auto algebra = close_algebra(generators, cfg.value("include_identity", true));

  const json& sj = cfg.at("state");
  io::require_keys(sj, {"type", "data"}, "gns state");
  const std::string type = sj.at("type").get<std::string>();
  StateFunctional omega = [&] {
    if (type == "vector")
      return state_from_vector(algebra, io::complex_vector_from_json(sj.at("data")));
    if (type == "density")
      return state_from_density(algebra, io::density_from_json(sj.at("data")));
    throw ValidationError("gns state: type must be 'vector' or 'density'");
  }();

  double null_tol = cfg.value("null_tol", statekit::tol::null_space);
  if (g.tolerances.contains("null_tol"))
    null_tol = g.tolerances.at("null_tol").get<double>();

  const auto report = validate_state(omega);
  const auto rep = gns(algebra, omega, null_tol);
  double residual = 0.0;
  for (int i = 0; i < algebra.dim(); ++i) {
    const complexd lhs =
        (rep.cyclic_vector().adjoint() * rep.pi_basis()[i] * rep.cyclic_vector())(0);
    residual = std::max(residual, std::abs(lhs - omega.values()[i]));
  }
  const int commutant = commutant_dimension(rep);

  json out{{"algebra_dim", algebra.dim()},
           {"rep_dim", rep.rep_dim()},
           {"commutant_dim", commutant},
           {"pure", commutant == 1},
           {"validation",
            {{"normalization_residual", report.normalization_residual},
             {"gram_min_eigenvalue", report.gram_min_eigenvalue},
             {"hermiticity_residual", report.hermiticity_residual}}},
           {"gns_identity_residual", residual},
           {"config_hash", io::hash_string(io::config_hash(cfg))}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_purify(const json& cfg, const Globals&) {
  using namespace statekit::purify;
  io::require_keys(cfg, with_globals({"density", "dim_ii", "unitary"}), "purify config");
  const statekit::states::DensityMatrix rho = io::density_from_json(cfg.at("density"));
  const int dim_ii = cfg.value("dim_ii", rho.dim());

  const BipartiteVector psi =
      cfg.contains("unitary")
          ? purify(rho, dim_ii, io::complex_matrix_from_json(cfg.at("unitary")))
          : purify(rho, dim_ii);

  // verification: the defining identity over a deterministic probe set plus
  // the partial-trace round trip
  double identity_residual = 0.0;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n01(0.0, 1.0);
  for (int probe = 0; probe < 8; ++probe) {
    Eigen::MatrixXcd h(rho.dim(), rho.dim());
    for (int i = 0; i < rho.dim(); ++i)
      for (int j = 0; j < rho.dim(); ++j) h(i, j) = complexd(n01(rng), n01(rng));
    const statekit::states::Observable d(0.5 * (h + h.adjoint().eval()));
    const double direct = (rho.matrix() * d.matrix()).trace().real();
    identity_residual = std::max(
        identity_residual, std::abs(purified_expectation(psi, d) - direct));
  }
  const auto back = partial_trace_ii(psi.projector(), rho.dim(), dim_ii);
  const auto report = purity_escalation_check(rho, dim_ii);

  json out{{"amplitudes", io::to_json(psi.amplitudes())},
           {"report",
            {{"defining_identity_residual", identity_residual},
             {"partial_trace_residual", (back.matrix() - rho.matrix()).norm()},
             {"upstairs_hs_norm", report.upstairs_hs_norm},
             {"downstairs_hs_norm", report.downstairs_hs_norm},
             {"full_dimension_condition_met", report.full_dimension_condition_met},
             {"verdict", report.verdict}}},
           {"config_hash", io::hash_string(io::config_hash(cfg))}};
  if (!report.full_dimension_condition_met)
    std::cerr << "note: dim_ii below dim_i; rank coverage only\n";
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_weyl(const json& cfg, const Globals& g) {
  io::require_keys(cfg,
                   with_globals({"grid", "packet", "symbol", "hbars", "husimi"}),
                   "weyl config");
  const auto grid = grid_from_json(cfg.at("grid"));
  const json& pj = cfg.at("packet");
  io::require_keys(pj, {"x0", "xi0"}, "packet");
  const double x0 = pj.at("x0").get<double>();
  const double xi0 = pj.at("xi0").get<double>();
  const auto symbol = symbol_from_json(cfg.at("symbol"));
  const auto hbars = cfg.at("hbars").get<std::vector<double>>();

  const auto rows = statekit::weyl::semiclassical_limit_table(
      statekit::grid::gaussian_envelope(), x0, xi0, symbol, hbars, grid);

  io::CsvTable table;
  table.comments = {"config_hash=" + io::hash_string(io::config_hash(cfg)),
                    "units: hbar dimensionless; expectation, target, error in symbol units"};
  table.columns = {"hbar", "expectation", "target", "error"};
  for (const auto& r : rows)
    table.rows.push_back({r.hbar, r.expectation, r.target, r.error});
  emit_table(g, "semiclassical_table", table);

  if (cfg.value("husimi", false)) {
    for (const auto& r : rows) {
      const auto psi = statekit::grid::wave_packet(
          statekit::grid::gaussian_envelope(), x0, xi0, r.hbar, grid);
      const double w = 6.0 * std::sqrt(r.hbar);
      const auto pg = statekit::weyl::PhaseGrid::regular(x0 - w, x0 + w, 48,
                                                         xi0 - w, xi0 + w, 48);
      const Eigen::MatrixXd field = statekit::weyl::husimi(psi, pg);
      char stem[64];
      std::snprintf(stem, sizeof stem, "husimi_h%.4f.dat", r.hbar);
      std::filesystem::create_directories(g.output_dir);
      io::write_file(
          g.output_dir + "/" + stem,
          io::gnuplot_matrix(field, pg.x, pg.xi,
                             "config_hash=" + io::hash_string(io::config_hash(cfg))));
    }
  }
  std::cout << json{{"rows", rows.size()},
                    {"output_dir", g.output_dir},
                    {"config_hash", io::hash_string(io::config_hash(cfg))}}
                   .dump(2)
            << "\n";
  return 0;
}

int run_semiclassical(const json& cfg, const Globals& g) {
  io::require_keys(cfg,
                   with_globals({"beta", "p1", "p2", "hbars", "times", "grid",
                                 "radius", "dt_factor", "smoothing", "envelopes",
                                 "husimi_snapshots"}),
                   "semiclassical config");
  const auto grid = grid_from_json(cfg.at("grid"));
  const auto hbars = cfg.at("hbars").get<std::vector<double>>();
  if (hbars.empty()) throw ValidationError("semiclassical: empty hbar list");
  const double radius = cfg.value("radius", 0.3);
  const double dt_factor = cfg.value("dt_factor", 20.0);

  statekit::dynamics::ConicalExperimentSpec base =
      statekit::dynamics::ConicalExperimentSpec::defaults();
  base.beta = cfg.value("beta", base.beta);
  base.p1 = cfg.value("p1", base.p1);
  base.p2 = cfg.value("p2", base.p2);
  base.times = cfg.at("times").get<std::vector<double>>();
  base.smoothing_width = cfg.value("smoothing", 0.0);
  if (cfg.contains("envelopes")) {
    const json& e = cfg.at("envelopes");
    io::require_keys(e, {"center1", "radius1", "center2", "radius2"}, "envelopes");
    base.envelope1 = statekit::grid::bump_envelope(e.at("center1").get<double>(),
                                                   e.at("radius1").get<double>());
    base.envelope2 = statekit::grid::bump_envelope(e.at("center2").get<double>(),
                                                   e.at("radius2").get<double>());
  }

  // independent runs per hbar, joined in list order
  std::vector<std::future<std::vector<statekit::dynamics::BranchSample>>> futures;
  const auto launch =
      thread_budget(hbars.size()) > 1 ? std::launch::async : std::launch::deferred;
  for (const double hbar : hbars) {
    statekit::dynamics::ConicalExperimentSpec spec = base;
    spec.hbar = hbar;
    futures.push_back(std::async(launch, [spec, grid, dt_factor, radius] {
      return statekit::dynamics::run_conical_experiment(spec, grid,
                                                        spec.hbar / dt_factor, radius);
    }));
  }

  io::CsvTable table;
  table.comments = {"config_hash=" + io::hash_string(io::config_hash(cfg)),
                    "units: hbar and t natural, masses in [0,1], drifts absolute"};
  table.columns = {"hbar", "t",         "mass1",      "mass2",
                   "mass_pre", "norm_drift", "energy_drift"};
  std::vector<std::vector<statekit::dynamics::BranchSample>> results;
  for (auto& f : futures) results.push_back(f.get());
  for (std::size_t i = 0; i < hbars.size(); ++i)
    for (const auto& s : results[i])
      table.rows.push_back({hbars[i], s.t, s.mass1, s.mass2, s.mass_pre,
                            s.norm_drift, s.energy_drift});
  emit_table(g, "cone", table);

  if (cfg.value("husimi_snapshots", false)) {
    for (std::size_t i = 0; i < hbars.size(); ++i) {
      statekit::dynamics::ConicalExperimentSpec spec = base;
      spec.hbar = hbars[i];
      for (const double t : spec.times) {
        statekit::dynamics::ConicalExperimentSpec single = spec;
        single.times = {t};
        // re-propagate just to the snapshot time and dump the field
        const auto psi0 = statekit::dynamics::prepare_initial_data(single, grid);
        const int steps = std::max(
            1, (int)std::ceil(std::abs(t) / (single.hbar / dt_factor)));
        const auto psi =
            t == 0.0 ? psi0
                     : statekit::dynamics::propagate(
                           psi0, statekit::dynamics::PropagationConfig(
                                     grid, single.hbar, t / steps, steps,
                                     statekit::dynamics::conical_potential(
                                         single.smoothing_width)));
        const double cell = std::sqrt(single.hbar) / 3.0;
        const int nx = (int)std::ceil(4.0 / cell);
        const auto pg =
            statekit::weyl::PhaseGrid::regular(-2.0, 2.0, nx, -2.0, 2.0, nx);
        const Eigen::MatrixXd field = statekit::weyl::husimi(psi, pg);
        char stem[80];
        std::snprintf(stem, sizeof stem, "husimi_h%.4f_t%+.3f.dat", single.hbar, t);
        io::write_file(g.output_dir + "/" + stem,
                       io::gnuplot_matrix(field, pg.x, pg.xi,
                                          "config_hash=" +
                                              io::hash_string(io::config_hash(cfg))));
      }
    }
  }

  std::cout << json{{"rows", table.rows.size()},
                    {"output_dir", g.output_dir},
                    {"config_hash", io::hash_string(io::config_hash(cfg))}}
                   .dump(2)
            << "\n";
  return 0;
}

int run_selftest(std::uint64_t seed) {
  using statekit::states::DensityMatrix;
  struct Check {
    const char* name;
    bool ok;
  };
  std::vector<Check> checks;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n01(0.0, 1.0);

  {  // probability: mixture variance identity
    bool ok = true;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200 && ok; ++t) {
      const double shift = 0.1 * u(rng);
      statekit::prob::DiscreteDistribution mu1({0.0, 1.0, 2.0},
                                               {0.2 + shift, 0.3, 0.5 - shift});
      statekit::prob::DiscreteDistribution mu2({1.0, 3.0}, {0.6, 0.4});
      const double lambda = u(rng);
      const auto f = [](double x) { return x * x - 0.5 * x; };
      const auto dec =
          statekit::prob::mixture_variance_decomposition(mu1, mu2, lambda, f);
      ok = std::abs(dec.total - dec.within - dec.between) <= 1e-12;
    }
    checks.push_back({"probability mixture variance identity", ok});
  }
  {  // states: bloch round trip
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      Eigen::Vector3d a(n01(rng), n01(rng), n01(rng));
      if (a.norm() > 0) a = a.normalized() * std::min(1.0, std::abs(n01(rng)));
      const auto rho =
          statekit::states::density_from_bloch(statekit::states::BlochVector(a));
      ok = (statekit::states::bloch_from_density(rho).a - a).norm() <= 1e-12;
    }
    checks.push_back({"states bloch round trip", ok});
  }
  {  // gns: fixed qubit cases
    using namespace statekit::gns;
    Eigen::MatrixXcd s1 = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    Eigen::MatrixXcd s3 = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    const auto m2 = close_algebra({s1, s3}, true);
    Eigen::Vector2cd e1;
    e1 << 1, 0;
    bool ok = is_pure_via_gns(m2, state_from_vector(m2, e1));
    Eigen::Matrix2cd third;
    third << 1.0 / 3.0, 0, 0, 2.0 / 3.0;
    ok = ok && !is_pure_via_gns(m2, state_from_density(m2, DensityMatrix(third)));
    checks.push_back({"gns purity on the fixed qubit cases", ok});
  }
  {  // purification round trip
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
      Eigen::MatrixXcd gmat(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gmat(i, j) = complexd(n01(rng), n01(rng));
      Eigen::MatrixXcd rho = gmat * gmat.adjoint();
      rho /= rho.trace().real();
      const DensityMatrix dm(0.5 * (rho + rho.adjoint().eval()));
      const auto psi = statekit::purify::purify(dm, 3);
      const auto back = statekit::purify::partial_trace_ii(psi.projector(), 3, 3);
      ok = (back.matrix() - dm.matrix()).norm() <= 1e-10;
    }
    checks.push_back({"purification partial-trace round trip", ok});
  }
  {  // weyl: unit symbol on a packet
    const statekit::grid::Grid1D grid(512, 6.0);
    const auto one = statekit::weyl::windowed_quadratic_symbol(0, 0, 0, 0, 2.5, 5.0);
    const auto psi = statekit::grid::wave_packet(statekit::grid::gaussian_envelope(),
                                                 0.2, -0.3, 0.05, grid);
    const double v = statekit::weyl::expectation_symbol(psi, one, 0.05);
    checks.push_back(
        {"weyl unit symbol acts as the identity", std::abs(v - 1.0) <= 1e-6});
  }
  {  // dynamics: free transport
    const statekit::grid::Grid1D grid(1024, 8.0);
    const auto psi0 = statekit::grid::wave_packet(statekit::grid::gaussian_envelope(),
                                                  0.0, 1.0, 0.05, grid);
    const statekit::dynamics::PropagationConfig cfg(grid, 0.05, 0.0025, 200,
                                                    [](double) { return 0.0; });
    const auto psi = statekit::dynamics::propagate(psi0, cfg);
    const double m = statekit::weyl::branch_mass(psi, 0.5, 1.0, 0.45);
    checks.push_back({"dynamics free packet transport", m >= 0.8});
  }

  bool all = true;
  for (const auto& c : checks) {
    std::printf("[%s] %s\n", c.ok ? "PASS" : "FAIL", c.name);
    all = all && c.ok;
  }
  std::printf("%s\n",
              all ? "selftest: all checks passed" : "selftest: FAILURES present");
  return all ? 0 : 1;
}

int run_paper_defaults(const Globals& g) {
  std::filesystem::create_directories(g.output_dir);

  {  // two-level mixture counterexample
    using namespace statekit::states;
    Eigen::Matrix2cd third;
    third << 1.0 / 3.0, 0, 0, 2.0 / 3.0;
    const DensityMatrix mixture(third);
    const Observable a((Eigen::Matrix2cd() << 1, 0, 0, -1).finished());
    const Observable b((Eigen::Matrix2cd() << 0, 1, 1, 0).finished());
    const Observable c(
        (Eigen::Matrix2cd() << 0, complexd(0, 1), complexd(0, -1), 0).finished());
    Eigen::Vector2cd psi;
    psi << complexd(0, 1) / std::sqrt(3.0), std::sqrt(2.0 / 3.0);
    const std::vector<GapTarget> targets{
        {a, expectation(mixture, a)}, {b, 0.0}, {c, 0.0}};
    json out{{"mixture_skew_expectation", expectation(mixture, c)},
             {"matched_vector_skew_expectation", expectation(vector_state(psi), c)},
             {"vector_state_gap", vector_state_gap(targets, 200)}};
    io::write_file(g.output_dir + "/counterexample.json", out.dump(2) + "\n");
  }

  {  // qubit representation cases
    using namespace statekit::gns;
    Eigen::MatrixXcd s1 = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    Eigen::MatrixXcd s3 = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    const auto m2 = close_algebra({s1, s3}, true);
    const auto blocks =
        close_algebra({(Eigen::Matrix2cd() << 1, 0, 0, 0).finished()}, true);
    Eigen::Vector2cd e1, balanced;
    e1 << 1, 0;
    balanced << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd third;
    third << 1.0 / 3.0, 0, 0, 2.0 / 3.0;

    const auto describe = [](const MatrixStarAlgebra& alg,
                             const StateFunctional& omega) {
      const auto rep = gns(alg, omega);
      const int cd = commutant_dimension(rep);
      return json{
          {"rep_dim", rep.rep_dim()}, {"commutant_dim", cd}, {"pure", cd == 1}};
    };
    json out{{"full_algebra_vector_state", describe(m2, state_from_vector(m2, e1))},
             {"full_algebra_mixture",
              describe(m2, state_from_density(
                               m2, statekit::states::DensityMatrix(third)))},
             {"two_blocks_balanced_vector",
              describe(blocks, state_from_vector(blocks, balanced))}};
    io::write_file(g.output_dir + "/gns_cases.json", out.dump(2) + "\n");
  }

  // conical experiment with the library defaults
  json cone_cfg{{"beta", 0.05},
                {"p1", 0.6},
                {"p2", 0.8},
                {"hbars", {0.04, 0.02, 0.01}},
                {"times", {-1.0, -0.5, 0.0, 0.5, 1.0}},
                {"grid", {{"n_points", 16384}, {"half_length", 8.0}}},
                {"radius", 0.3}};
  return run_semiclassical(cone_cfg, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statekit: states, representations and semiclassics at desk scale"};
  app.require_subcommand(0, 1);

  std::string out_dir_flag;
  bool paper_defaults = false;
  app.add_option("--out", out_dir_flag, "output directory for data files");
  app.add_flag("--paper-defaults", paper_defaults,
               "run the bundled two-level counterexample, the qubit "
               "representation cases and the conical-splitting experiment");

  std::string states_action, config_path;
  auto* states_cmd = app.add_subcommand("states", "density-matrix tools");
  states_cmd->add_option("action", states_action, "purity | bloch | decompose | gap")
      ->required();
  states_cmd->add_option("--config", config_path, "JSON config")->required();

  auto* gns_cmd = app.add_subcommand("gns", "representation and purity analysis");
  gns_cmd->add_option("--config", config_path, "JSON config")->required();

  auto* purify_cmd = app.add_subcommand("purify", "purifying vectors");
  purify_cmd->add_option("--config", config_path, "JSON config")->required();

  auto* weyl_cmd = app.add_subcommand("weyl", "symbol quantisation tables");
  weyl_cmd->add_option("--config", config_path, "JSON config")->required();

  auto* semi_cmd = app.add_subcommand("semiclassical", "conical splitting runs");
  semi_cmd->add_option("--config", config_path, "JSON config")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "fast invariant sweep");
  std::uint64_t selftest_seed = 1;
  selftest_cmd->add_option("--seed", selftest_seed, "RNG seed");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (paper_defaults) {
      Globals g;
      g.output_dir = out_dir_flag.empty() ? "." : out_dir_flag;
      return run_paper_defaults(g);
    }
    if (selftest_cmd->parsed()) return run_selftest(selftest_seed);
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }
    const json cfg = io::read_json_file(config_path);
    const Globals g = parse_globals(cfg, out_dir_flag);
    if (states_cmd->parsed()) return run_states(states_action, cfg, g);
    if (gns_cmd->parsed()) return run_gns(cfg, g);
    if (purify_cmd->parsed()) return run_purify(cfg, g);
    if (weyl_cmd->parsed()) return run_weyl(cfg, g);
    if (semi_cmd->parsed()) return run_semiclassical(cfg, g);
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 2;
  } catch (const NumericalHealthError& e) {
    std::cerr << "numerical-health failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
