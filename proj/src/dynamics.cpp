#include "statekit/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "statekit/fft.hpp"
#include "statekit/weyl.hpp"

namespace statekit::dynamics {

PropagationConfig::PropagationConfig(grid::Grid1D g, double hbar_in, double dt_in,
                                     int n_steps_in, grid::RealFunction potential_in)
    : grid(g), hbar(hbar_in), dt(dt_in), n_steps(n_steps_in),
      potential(std::move(potential_in)) {
  if (!(hbar > 0.0)) throw ValidationError("PropagationConfig: hbar must be positive");
  if (n_steps < 0) throw ValidationError("PropagationConfig: negative step count");
  if (!potential) throw ValidationError("PropagationConfig: missing potential");
  if (std::sqrt(hbar) < 4.0 * grid.dx())
    throw ValidationError("PropagationConfig: sqrt(hbar) below 4 dx (unresolvable packets)");
  double vmax = 0.0;
  for (int j = 0; j < grid.n; ++j)
    vmax = std::max(vmax, std::abs(potential(grid.node(j))));
  if (vmax > 0.0 && std::abs(dt) > 0.5 * hbar / vmax)
    throw ValidationError("PropagationConfig: |dt| exceeds the phase-step bound 0.5 hbar / max|V|");
}

grid::GridWavefunction propagate(const grid::GridWavefunction& psi0,
                                 const PropagationConfig& cfg) {
  if (psi0.grid().n != cfg.grid.n || psi0.grid().half_length != cfg.grid.half_length)
    throw ValidationError("propagate: grid mismatch");
  if (psi0.hbar() != cfg.hbar) throw ValidationError("propagate: hbar mismatch");

  const int n = cfg.grid.n;
  std::vector<complexd> half_phase(n), kinetic(n);
  for (int j = 0; j < n; ++j)
    half_phase[j] =
        std::polar(1.0, -cfg.dt * cfg.potential(cfg.grid.node(j)) / (2.0 * cfg.hbar));
  for (int bin = 0; bin < n; ++bin) {
    const double k = cfg.grid.wavenumber(bin);
    kinetic[bin] = std::polar(1.0, -cfg.dt * cfg.hbar * k * k / 2.0);
  }

  std::vector<complexd> v = psi0.values();
  for (int step = 0; step < cfg.n_steps; ++step) {
    for (int j = 0; j < n; ++j) v[j] *= half_phase[j];
    fft::transform(v, false);
    for (int j = 0; j < n; ++j) v[j] *= kinetic[j];
    fft::transform(v, true);
    for (int j = 0; j < n; ++j) v[j] *= half_phase[j];
  }

  const double drift = std::abs(grid::discrete_norm(cfg.grid, v) - 1.0);
  if (drift > 1e-9 * (cfg.n_steps / 1000.0 + 1.0))
    throw NumericalHealthError("propagate: norm drift beyond 1e-9 per 1000 steps");

  grid::GridWavefunction psi(cfg.grid, std::move(v), cfg.hbar);
  if (psi.edge_mass() > 1e-4)
    throw NumericalHealthError("propagate: boundary band holds more than 1e-4 mass");
  return psi;
}

grid::RealFunction conical_potential(double smoothing_width) {
  if (smoothing_width < 0.0)
    throw ValidationError("conical_potential: negative smoothing width");
  if (smoothing_width == 0.0)
    return [](double x) { return -std::abs(x); };
  const double w = smoothing_width;
  return [w](double x) { return -std::sqrt(x * x + w * w) + w; };
}

double energy_expectation(const grid::GridWavefunction& psi,
                          const grid::RealFunction& potential) {
  const grid::Grid1D& g = psi.grid();
  std::vector<complexd> hat = psi.values();
  fft::transform(hat, false);
  double kinetic = 0.0;
  for (int bin = 0; bin < g.n; ++bin) {
    const double k = g.wavenumber(bin);
    kinetic += 0.5 * psi.hbar() * psi.hbar() * k * k * std::norm(hat[bin]);
  }
  kinetic *= g.dx() / g.n;  // discrete Parseval factor
  double pot = 0.0;
  for (int j = 0; j < g.n; ++j)
    pot += potential(g.node(j)) * std::norm(psi.values()[j]);
  pot *= g.dx();
  return kinetic + pot;
}

ConicalExperimentSpec ConicalExperimentSpec::defaults() {
  ConicalExperimentSpec spec;
  spec.envelope1 = grid::bump_envelope(1.5, 1.0);
  spec.envelope2 = grid::bump_envelope(-1.5, 1.0);
  spec.times = {-1.0, -0.5, 0.0, 0.5, 1.0};
  return spec;
}

namespace {

void validate_spec(const ConicalExperimentSpec& spec, const grid::Grid1D& g) {
  if (!(spec.beta > 0.0 && spec.beta < 0.1))
    throw ValidationError("conical spec: beta must lie in (0, 1/10)");
  if (std::abs(spec.p1 * spec.p1 + spec.p2 * spec.p2 - 1.0) > tol::weight)
    throw ValidationError("conical spec: p1^2 + p2^2 must equal 1");
  if (!spec.envelope1 || !spec.envelope2)
    throw ValidationError("conical spec: missing branch envelopes");
  if (!(spec.hbar > 0.0)) throw ValidationError("conical spec: hbar must be positive");

  const double root = std::sqrt(spec.hbar);
  for (int j = 0; j < g.n; ++j) {
    const double s = g.node(j) / root;
    const double e1 = spec.envelope1(s);
    const double e2 = spec.envelope2(s);
    if (e1 != 0.0 && s <= 0.0)
      throw ValidationError("conical spec: branch-one envelope must live on s > 0");
    if (e1 != 0.0 && e2 != 0.0)
      throw ValidationError("conical spec: branch supports overlap");
  }
}

}  // namespace

grid::GridWavefunction prepare_initial_data(const ConicalExperimentSpec& spec,
                                            const grid::Grid1D& g) {
  validate_spec(spec, g);
  const double root = std::sqrt(spec.hbar);
  const double scale = std::pow(spec.hbar, -0.25);
  const double wavenumber = -std::pow(spec.hbar, spec.beta - 1.0);

  std::vector<complexd> b1(g.n), b2(g.n);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.node(j);
    b1[j] = scale * spec.envelope1(x / root);
    b2[j] = scale * spec.envelope2(x / root) * std::polar(1.0, wavenumber * x);
  }
  const double n1 = grid::discrete_norm(g, b1);
  const double n2 = grid::discrete_norm(g, b2);
  if (n1 <= 0.0 || n2 <= 0.0)
    throw ValidationError("conical spec: an envelope vanishes on the grid");

  std::vector<complexd> v(g.n);
  for (int j = 0; j < g.n; ++j)
    v[j] = spec.p1 * b1[j] / n1 + spec.p2 * b2[j] / n2;
  const double total = grid::discrete_norm(g, v);
  for (auto& z : v) z /= total;  // disjoint supports make this a near no-op

  grid::GridWavefunction psi(g, std::move(v), spec.hbar);
  if (psi.edge_mass() > 1e-6)
    throw NumericalHealthError("prepare_initial_data: boundary spill above 1e-6");
  return psi;
}

std::vector<BranchSample> run_conical_experiment(const ConicalExperimentSpec& spec,
                                                 const grid::Grid1D& g,
                                                 double dt_magnitude,
                                                 double disc_radius) {
  if (!(dt_magnitude > 0.0))
    throw ValidationError("run_conical_experiment: dt must be positive");
  const grid::GridWavefunction psi0 = prepare_initial_data(spec, g);
  const grid::RealFunction potential = conical_potential(spec.smoothing_width);
  const double e0 = energy_expectation(psi0, potential);

  std::vector<double> times = spec.times;
  std::sort(times.begin(), times.end());

  std::vector<BranchSample> samples(times.size());
  const auto sample_state = [&](const grid::GridWavefunction& psi, double t,
                                std::size_t slot) {
    BranchSample s{};
    s.t = t;
    s.mass1 = weyl::branch_mass(psi, t * t / 2.0, t, disc_radius);
    s.mass2 = weyl::branch_mass(psi, -t * t / 2.0, -t, disc_radius);
    s.mass_pre = weyl::branch_mass(psi, t * t / 2.0, -t, disc_radius);
    s.norm_drift = std::abs(psi.norm() - 1.0);
    s.energy_drift = std::abs(energy_expectation(psi, potential) - e0);
    samples[slot] = s;
  };

  // March forward through the nonnegative times, backward through the
  // negative ones, reusing the running state within each direction.
  const auto march = [&](bool forward) {
    grid::GridWavefunction psi = psi0;
    double reached = 0.0;
    if (forward) {
      for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) continue;
        const double span = times[i] - reached;
        if (span > 0.0) {
          const int steps = std::max(1, (int)std::ceil(span / dt_magnitude));
          psi = propagate(psi, PropagationConfig(g, spec.hbar, span / steps,
                                                 steps, potential));
        }
        reached = times[i];
        sample_state(psi, times[i], i);
      }
    } else {
      for (std::size_t i = times.size(); i-- > 0;) {
        if (times[i] >= 0.0) continue;
        const double span = times[i] - reached;  // negative
        const int steps = std::max(1, (int)std::ceil(-span / dt_magnitude));
        psi = propagate(psi, PropagationConfig(g, spec.hbar, span / steps, steps,
                                               potential));
        reached = times[i];
        sample_state(psi, times[i], i);
      }
    }
  };
  march(true);
  march(false);
  return samples;
}

}  // namespace statekit::dynamics
