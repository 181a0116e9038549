#ifndef STATEKIT_WEYL_HPP
#define STATEKIT_WEYL_HPP

#include <Eigen/Dense>
#include <vector>

#include "statekit/common.hpp"
#include "statekit/grid.hpp"
#include "statekit/symbol.hpp"

namespace statekit::weyl {

/// Momentum half-range of the quantisation grid, Xi = pi hbar n / (2 L).
double momentum_half_range(double hbar, const grid::Grid1D& g);

/// Discretised midpoint quantisation
///   K[j,k] = (dx / (2 pi hbar)) sum_m exp(i xi_m (x_j - x_k)/hbar)
///            a((x_j + x_k)/2, xi_m) dxi
/// over the momentum grid xi_m = hbar (pi/L) m, m in [-n/2, n/2). With that
/// grid the exponential is exactly periodic and the sum collapses to one
/// length-n inverse FFT per midpoint. K maps node values to node values;
/// real symbols give Hermitian K.
Eigen::MatrixXcd weyl_quantize(const PhaseSpaceSymbol& a, double hbar,
                               const grid::Grid1D& g);

/// Re <psi, K psi> dx with K = weyl_quantize(a). The imaginary part is a
/// health metric and must stay below 1e-8.
double expectation_symbol(const grid::GridWavefunction& psi,
                          const PhaseSpaceSymbol& a, double hbar);

struct SemiclassicalRow {
  double hbar;
  double expectation;
  double target;  // a(x0, xi0)
  double error;   // |expectation - target|
};

/// Packet expectations of a symbol along a strictly decreasing hbar list;
/// every packet must satisfy sqrt(hbar) >= 4 dx on the supplied grid.
std::vector<SemiclassicalRow> semiclassical_limit_table(
    const grid::RealFunction& envelope, double x0, double xi0,
    const PhaseSpaceSymbol& a, const std::vector<double>& hbar_list,
    const grid::Grid1D& g);

/// Truncated star product matching the quantisation convention above:
/// order 0 is the pointwise product; order 1 adds
/// (i hbar / 2)(d_x a d_xi b - d_xi a d_x b); order 2 adds
/// -(hbar^2/8)(a_xixi b_xx - 2 a_xxi b_xxi + a_xx b_xixi). Derivatives are
/// centred finite differences with step 1e-4 times the support extent.
PhaseSpaceSymbol moyal_product_truncated(const PhaseSpaceSymbol& a,
                                         const PhaseSpaceSymbol& b, double hbar,
                                         int order);

/// Rectangular phase-space sampling grid.
struct PhaseGrid {
  std::vector<double> x;
  std::vector<double> xi;

  static PhaseGrid regular(double x_lo, double x_hi, int nx, double xi_lo,
                           double xi_hi, int nxi);
  double cell_dx() const;
  double cell_dxi() const;
};

/// Coherent-state density H(x, xi) = |<g_{x,xi}, psi>|^2 / (2 pi hbar) with
/// g a Gaussian of width sqrt(hbar). Nonnegative; sums to 1 within a few
/// percent on a grid that covers the state. Cells must not exceed
/// sqrt(hbar).
Eigen::MatrixXd husimi(const grid::GridWavefunction& psi, const PhaseGrid& pg);

double husimi_mass(const Eigen::MatrixXd& field, const PhaseGrid& pg);

/// Coherent-state mass inside the disc of the given radius around
/// (center_x, center_xi), via an internal grid with cells sqrt(hbar)/4.
/// Radii well above the coherent scale sqrt(hbar) capture a branch fully;
/// a disc reaching outside the resolvable phase-space window is an error.
double branch_mass(const grid::GridWavefunction& psi, double center_x,
                   double center_xi, double radius);

}  // namespace statekit::weyl

#endif
