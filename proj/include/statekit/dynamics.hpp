#ifndef STATEKIT_DYNAMICS_HPP
#define STATEKIT_DYNAMICS_HPP

#include <vector>

#include "statekit/common.hpp"
#include "statekit/grid.hpp"

namespace statekit::dynamics {

/// Split-step configuration for H = -(hbar^2/2) d^2/dx^2 + V. Validation
/// enforces the phase-step bound |dt| <= 0.5 hbar / max|V| on the grid and
/// the packet resolution bound sqrt(hbar) >= 4 dx. dt < 0 propagates
/// backwards in time.
struct PropagationConfig {
  PropagationConfig(grid::Grid1D g, double hbar, double dt, int n_steps,
                    grid::RealFunction potential);

  grid::Grid1D grid;
  double hbar;
  double dt;
  int n_steps;
  grid::RealFunction potential;
};

/// Strang splitting: half potential phase, full kinetic step in Fourier
/// space, half potential phase. Norm preservation is monitored
/// (1e-9 per 1000 steps) and mass in the boundary band above 1e-4 aborts.
grid::GridWavefunction propagate(const grid::GridWavefunction& psi0,
                                 const PropagationConfig& cfg);

/// x -> -|x|; a positive smoothing width w replaces the cone by
/// -sqrt(x^2 + w^2) + w, an exploratory knob that removes the apex.
grid::RealFunction conical_potential(double smoothing_width = 0.0);

/// Kinetic part spectrally, potential part pointwise.
double energy_expectation(const grid::GridWavefunction& psi,
                          const grid::RealFunction& potential);

/// Two-branch initial data for the cone run. Branch one must live on
/// s > 0; the branch supports must be disjoint; p1^2 + p2^2 = 1. Branch
/// two carries the modulation exp(-i hbar^(beta-1) x), placing its
/// momentum centre at -hbar^beta.
struct ConicalExperimentSpec {
  double beta = 0.05;
  double p1 = 0.6;
  double p2 = 0.8;
  grid::RealFunction envelope1;  // defaults to a bump at +1.5, radius 1
  grid::RealFunction envelope2;  // defaults to a bump at -1.5, radius 1
  double hbar = 0.01;
  std::vector<double> times;
  double smoothing_width = 0.0;

  static ConicalExperimentSpec defaults();
};

/// Branch-normalised superposition
///   p1 h^(-1/4) env1(x/sqrt(h)) + p2 h^(-1/4) env2(x/sqrt(h)) e^(-i h^(beta-1) x)
/// on the grid, discrete norm one.
grid::GridWavefunction prepare_initial_data(const ConicalExperimentSpec& spec,
                                            const grid::Grid1D& g);

struct BranchSample {
  double t;
  double mass1;     // disc mass at (t^2/2, t)
  double mass2;     // disc mass at (-t^2/2, -t)
  double mass_pre;  // disc mass at (t^2/2, -t)
  double norm_drift;
  double energy_drift;
};

/// Propagates the prepared state to every requested time (negative times
/// run with dt < 0 from t = 0) and samples the disc masses at the
/// classical-limit branch centres.
std::vector<BranchSample> run_conical_experiment(const ConicalExperimentSpec& spec,
                                                 const grid::Grid1D& g,
                                                 double dt_magnitude,
                                                 double disc_radius);

}  // namespace statekit::dynamics

#endif
