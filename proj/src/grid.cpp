#include "statekit/grid.hpp"

#include <cmath>

namespace statekit::grid {

Grid1D::Grid1D(int n_points, double half_length_in)
    : n(n_points), half_length(half_length_in) {
  if (n < 256 || (n & (n - 1)) != 0)
    throw ValidationError("Grid1D: n_points must be a power of two, at least 256");
  if (!(half_length > 0.0))
    throw ValidationError("Grid1D: half length must be positive");
}

double Grid1D::wavenumber(int bin) const {
  return std::acos(-1.0) / half_length * signed_mode(bin);
}

double discrete_norm(const Grid1D& g, const std::vector<complexd>& values) {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * g.dx());
}

GridWavefunction::GridWavefunction(Grid1D g, std::vector<complexd> values,
                                   double hbar)
    : grid_(g), values_(std::move(values)), hbar_(hbar) {
  if (static_cast<int>(values_.size()) != grid_.n)
    throw ValidationError("GridWavefunction: value count differs from grid size");
  if (!(hbar_ > 0.0)) throw ValidationError("GridWavefunction: hbar must be positive");
  if (std::abs(discrete_norm(grid_, values_) - 1.0) > 1e-10)
    throw ValidationError("GridWavefunction: discrete norm differs from 1 beyond 1e-10");
}

double GridWavefunction::norm() const { return discrete_norm(grid_, values_); }

double GridWavefunction::edge_mass() const {
  const int band = grid_.n / 64;
  double s = 0.0;
  for (int j = 0; j < band; ++j)
    s += std::norm(values_[j]) + std::norm(values_[grid_.n - 1 - j]);
  return s * grid_.dx();
}

GridWavefunction wave_packet(const RealFunction& envelope, double x0, double xi0,
                             double hbar, const Grid1D& g) {
  if (!(hbar > 0.0)) throw ValidationError("wave_packet: hbar must be positive");
  const double scale = std::pow(hbar, -0.25);
  const double root = std::sqrt(hbar);
  std::vector<complexd> v(g.n);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.node(j);
    v[j] = scale * envelope((x - x0) / root) * std::polar(1.0, x * xi0 / hbar);
  }
  const double nrm = discrete_norm(g, v);
  if (nrm <= 0.0)
    throw ValidationError("wave_packet: envelope vanishes on the grid");
  for (auto& z : v) z /= nrm;
  GridWavefunction psi(g, std::move(v), hbar);
  if (psi.edge_mass() > 1e-6)
    throw NumericalHealthError("wave_packet: boundary spill above 1e-6");
  return psi;
}

RealFunction gaussian_envelope() {
  const double norm = std::pow(std::acos(-1.0), -0.25);
  return [norm](double s) { return norm * std::exp(-0.5 * s * s); };
}

RealFunction bump_envelope(double center, double radius, double amplitude) {
  if (!(radius > 0.0)) throw ValidationError("bump_envelope: radius must be positive");
  return [center, radius, amplitude](double s) {
    const double u = (s - center) / radius;
    const double r2 = u * u;
    if (r2 >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - r2));
  };
}

double smooth_step_down(double s) {
  const auto f = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double a = f(1.0 - s);
  const double b = f(s);
  return a / (a + b);
}

}  // namespace statekit::grid
