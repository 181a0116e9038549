#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "statekit/dynamics.hpp"
#include "statekit/fft.hpp"
#include "statekit/weyl.hpp"

using statekit::NumericalHealthError;
using statekit::ValidationError;
using statekit::complexd;
using namespace statekit::grid;
using namespace statekit::dynamics;

namespace {

const Grid1D kGrid(4096, 8.0);

std::pair<double, double> husimi_peak(const GridWavefunction& psi, double x_lo,
                                      double x_hi, double xi_lo, double xi_hi) {
  const auto pg =
      statekit::weyl::PhaseGrid::regular(x_lo, x_hi, 48, xi_lo, xi_hi, 48);
  const Eigen::MatrixXd field = statekit::weyl::husimi(psi, pg);
  Eigen::Index bi = 0, bj = 0;
  field.maxCoeff(&bi, &bj);
  return {pg.x[bi], pg.xi[bj]};
}

double l2_difference(const GridWavefunction& a, const GridWavefunction& b) {
  double s = 0.0;
  for (int j = 0; j < a.grid().n; ++j) s += std::norm(a.values()[j] - b.values()[j]);
  return std::sqrt(s * a.grid().dx());
}

}  // namespace

TEST_CASE("free evolution transports the packet centre") {
  const double hbar = 0.05;
  const auto psi0 = wave_packet(gaussian_envelope(), 0.0, 1.0, hbar, kGrid);
  const auto zero = [](double) { return 0.0; };
  const int steps = 200;
  const PropagationConfig cfg(kGrid, hbar, 0.5 / steps, steps, zero);
  const auto psi = propagate(psi0, cfg);
  const auto [px, pxi] = husimi_peak(psi, 0.0, 1.0, 0.5, 1.5);
  CHECK(std::abs(px - 0.5) <= 0.05);
  CHECK(std::abs(pxi - 1.0) <= 0.05);
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);
}

TEST_CASE("a linear ramp accelerates the packet along the parabola") {
  const double hbar = 0.05;
  const auto psi0 = wave_packet(gaussian_envelope(), 0.0, 0.0, hbar, kGrid);
  const auto ramp = [](double x) { return -x; };
  const int steps = 400;  // |dt| <= 0.5 hbar / 8
  const PropagationConfig cfg(kGrid, hbar, 0.5 / steps, steps, ramp);
  const auto psi = propagate(psi0, cfg);
  const auto [px, pxi] = husimi_peak(psi, -0.3, 0.6, 0.0, 1.0);
  CHECK(std::abs(px - 0.125) <= 0.05);
  CHECK(std::abs(pxi - 0.5) <= 0.05);
}

TEST_CASE("zero steps is the identity") {
  const double hbar = 0.05;
  const auto psi0 = wave_packet(gaussian_envelope(), 0.2, -0.4, hbar, kGrid);
  const PropagationConfig cfg(kGrid, hbar, hbar / 20.0, 0, [](double) { return 0.0; });
  CHECK(l2_difference(propagate(psi0, cfg), psi0) == 0.0);
}

TEST_CASE("the phase-step bound is enforced") {
  const auto ramp = [](double x) { return -x; };  // max |V| = 8 on this grid
  CHECK_THROWS_AS(PropagationConfig(kGrid, 0.05, 0.05, 10, ramp), ValidationError);
  CHECK_NOTHROW(PropagationConfig(kGrid, 0.05, 0.05 / 20.0, 10, ramp));
  // packets must stay resolvable: sqrt(hbar) >= 4 dx
  const Grid1D coarse(256, 8.0);
  CHECK_THROWS_AS(PropagationConfig(coarse, 0.01, 0.0005, 10, ramp),
                  ValidationError);
}

TEST_CASE("running into the boundary raises a spill error") {
  const double hbar = 0.05;
  const auto psi0 = wave_packet(gaussian_envelope(), 6.0, 2.0, hbar, kGrid);
  const int steps = 360;
  const PropagationConfig cfg(kGrid, hbar, 0.9 / steps, steps,
                              [](double) { return 0.0; });
  CHECK_THROWS_AS(propagate(psi0, cfg), NumericalHealthError);
}

TEST_CASE("propagation is unitary and time reversible") {
  const double hbar = 0.02;
  const auto psi0 = wave_packet(gaussian_envelope(), 0.4, 0.3, hbar, kGrid);
  const auto cone = conical_potential();
  const int steps = 1000;
  const PropagationConfig fwd(kGrid, hbar, hbar / 20.0, steps, cone);
  const auto psi1 = propagate(psi0, fwd);
  CHECK(std::abs(psi1.norm() - 1.0) <= 1e-9);

  const PropagationConfig bwd(kGrid, hbar, -hbar / 20.0, steps, cone);
  const auto back = propagate(psi1, bwd);
  CHECK(l2_difference(back, psi0) <= 1e-7);
}

TEST_CASE("energy stays put over the experiment horizon") {
  const double hbar = 0.02;
  const auto cone = conical_potential();
  const auto psi0 = wave_packet(gaussian_envelope(), 0.5, 0.0, hbar, kGrid);
  const double e0 = energy_expectation(psi0, cone);
  const int steps = 1000;
  const PropagationConfig cfg(kGrid, hbar, hbar / 20.0, steps, cone);
  const auto psi = propagate(psi0, cfg);
  const double e1 = energy_expectation(psi, cone);
  CHECK(std::abs(e1 - e0) <= 1e-4 * std::abs(e0) + 1e-6);
}

TEST_CASE("conical potential values and classical release") {
  const auto cone = conical_potential();
  CHECK(cone(0.0) == 0.0);
  CHECK(cone(2.0) == -2.0);
  CHECK(cone(-2.0) == -2.0);
  const auto smoothed = conical_potential(0.5);
  CHECK(smoothed(0.0) == 0.0);
  CHECK(smoothed(2.0) > cone(2.0));

  // a packet released at rest away from the apex slides downhill,
  // x(t) = x0 + t^2/2 and xi(t) = t on the positive side
  const double hbar = 0.02;
  const auto psi0 = wave_packet(gaussian_envelope(), 0.5, 0.0, hbar, kGrid);
  const int steps = 600;
  const PropagationConfig cfg(kGrid, hbar, 0.6 / steps, steps, cone);
  const auto psi = propagate(psi0, cfg);
  const auto [px, pxi] = husimi_peak(psi, 0.3, 1.1, 0.2, 1.0);
  CHECK(std::abs(px - 0.68) <= 0.04);
  CHECK(std::abs(pxi - 0.6) <= 0.04);
}

TEST_CASE("initial data reduces to one branch when a weight vanishes") {
  ConicalExperimentSpec spec = ConicalExperimentSpec::defaults();
  spec.hbar = 0.04;
  spec.p1 = 1.0;
  spec.p2 = 0.0;
  const auto psi = prepare_initial_data(spec, kGrid);
  const double root = std::sqrt(spec.hbar);
  // all mass close to the branch-one bump at x = 1.5 sqrt(hbar); bump
  // envelopes spread more in momentum than coherent states, so the disc
  // capture tops out below the gaussian value
  const double m1 = statekit::weyl::branch_mass(psi, 1.5 * root, 0.0, 0.5);
  CHECK(m1 >= 0.75);
  // bump momentum tails leave a percent-level floor at the other branch
  const double tilt = -std::pow(spec.hbar, spec.beta);
  const double m2 = statekit::weyl::branch_mass(psi, -1.5 * root, tilt, 0.5);
  CHECK(m2 <= 0.03);
}

TEST_CASE("initial data carries the branch weights") {
  ConicalExperimentSpec spec = ConicalExperimentSpec::defaults();
  spec.hbar = 0.04;
  const auto psi = prepare_initial_data(spec, kGrid);
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);

  const double root = std::sqrt(spec.hbar);
  const double tilt = -std::pow(spec.hbar, spec.beta);
  const double m1 = statekit::weyl::branch_mass(psi, 1.5 * root, 0.0, 0.45);
  const double m2 = statekit::weyl::branch_mass(psi, -1.5 * root, tilt, 0.45);
  CHECK(m1 / (m1 + m2) == doctest::Approx(0.36).epsilon(0.02));
  CHECK(m2 / (m1 + m2) == doctest::Approx(0.64).epsilon(0.02));
}

TEST_CASE("branch two is modulated to momentum -hbar^beta") {
  ConicalExperimentSpec spec = ConicalExperimentSpec::defaults();
  spec.hbar = 0.04;
  spec.p1 = 0.0;
  spec.p2 = 1.0;
  const auto psi = prepare_initial_data(spec, kGrid);
  std::vector<complexd> hat = psi.values();
  statekit::fft::transform(hat, false);
  int best = 0;
  for (int b = 1; b < kGrid.n; ++b)
    if (std::norm(hat[b]) > std::norm(hat[best])) best = b;
  const double xi_peak = spec.hbar * kGrid.wavenumber(best);
  const double cell = spec.hbar * std::acos(-1.0) / kGrid.half_length;
  CHECK(std::abs(xi_peak + std::pow(spec.hbar, spec.beta)) <= cell + 1e-12);
}

TEST_CASE("experiment specs are validated") {
  ConicalExperimentSpec spec = ConicalExperimentSpec::defaults();
  spec.beta = 0.2;
  CHECK_THROWS_AS(prepare_initial_data(spec, kGrid), ValidationError);

  spec = ConicalExperimentSpec::defaults();
  spec.p1 = 0.9;  // p1^2 + p2^2 != 1
  CHECK_THROWS_AS(prepare_initial_data(spec, kGrid), ValidationError);

  spec = ConicalExperimentSpec::defaults();
  spec.envelope2 = bump_envelope(1.4, 1.0);  // overlaps branch one
  CHECK_THROWS_AS(prepare_initial_data(spec, kGrid), ValidationError);

  spec = ConicalExperimentSpec::defaults();
  spec.envelope1 = bump_envelope(-1.5, 1.0);  // wrong side
  spec.envelope2 = bump_envelope(1.5, 1.0);
  CHECK_THROWS_AS(prepare_initial_data(spec, kGrid), ValidationError);
}

TEST_CASE("conical experiment smoke run") {
  ConicalExperimentSpec spec = ConicalExperimentSpec::defaults();
  spec.hbar = 0.04;
  spec.times = {-0.5, 0.0, 0.5};
  const auto samples = run_conical_experiment(spec, kGrid, spec.hbar / 20.0, 0.3);
  REQUIRE(samples.size() == 3);
  for (const auto& s : samples) {
    CHECK(s.mass1 >= 0.0);
    CHECK(s.mass1 <= 1.02);
    CHECK(s.mass2 >= 0.0);
    CHECK(s.mass2 <= 1.02);
    CHECK(s.mass_pre >= 0.0);
    CHECK(s.norm_drift <= 1e-9);
    CHECK(s.energy_drift <= 1e-3 * 1.0 + 1e-3);
  }
  CHECK(samples[1].t == 0.0);
  // at t = 0 all three disc centres coincide at the apex while the branches
  // sit at x = +-1.5 sqrt(hbar) with the branch-two tilt, so the discs see
  // only the inner tails
  CHECK(samples[1].mass1 == samples[1].mass_pre);
  CHECK(samples[1].mass1 + samples[1].mass2 <= 0.6);
}
