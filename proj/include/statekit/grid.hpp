#ifndef STATEKIT_GRID_HPP
#define STATEKIT_GRID_HPP

#include <functional>
#include <vector>

#include "statekit/common.hpp"

namespace statekit::grid {

using RealFunction = std::function<double(double)>;

/// Uniform periodic grid on [-L, L) with a power-of-two number of nodes.
struct Grid1D {
  Grid1D(int n_points, double half_length);

  int n;
  double half_length;

  double dx() const { return 2.0 * half_length / n; }
  double node(int j) const { return -half_length + j * dx(); }

  /// FFT bin -> signed mode index m in [-n/2, n/2).
  int signed_mode(int bin) const { return bin < n / 2 ? bin : bin - n; }
  /// Wavenumber of an FFT bin, k_m = (pi / L) m.
  double wavenumber(int bin) const;
};

/// Discretised wavefunction with sum |psi_j|^2 dx = 1 within 1e-10.
class GridWavefunction {
public:
  GridWavefunction(Grid1D g, std::vector<complexd> values, double hbar);

  const Grid1D& grid() const { return grid_; }
  const std::vector<complexd>& values() const { return values_; }
  double hbar() const { return hbar_; }

  double norm() const;
  /// Probability mass sitting in the outermost n/64 nodes on each side.
  double edge_mass() const;

private:
  Grid1D grid_;
  std::vector<complexd> values_;
  double hbar_;
};

double discrete_norm(const Grid1D& g, const std::vector<complexd>& values);

/// Packet psi_j = hbar^(-1/4) envelope((x_j - x0)/sqrt(hbar)) exp(i x_j xi0 / hbar),
/// renormalised to discrete norm one. Throws when more than 1e-6 of the mass
/// lands in the boundary band.
GridWavefunction wave_packet(const RealFunction& envelope, double x0, double xi0,
                             double hbar, const Grid1D& g);

/// exp(-s^2/2) / pi^(1/4); unit L2 norm on the line.
RealFunction gaussian_envelope();

/// Compactly supported profile amplitude * e^(1 - 1/(1-u^2)) for
/// u = (s - center)/radius, |u| < 1, zero elsewhere.
RealFunction bump_envelope(double center, double radius, double amplitude = 1.0);

/// C-infinity transition: 1 for s <= 0, 0 for s >= 1.
double smooth_step_down(double s);

}  // namespace statekit::grid

#endif
