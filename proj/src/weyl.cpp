#include "statekit/weyl.hpp"

#include <cmath>

#include "statekit/fft.hpp"

namespace statekit::weyl {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double momentum_half_range(double hbar, const grid::Grid1D& g) {
  return kPi * hbar * g.n / (2.0 * g.half_length);
}

Eigen::MatrixXcd weyl_quantize(const PhaseSpaceSymbol& a, double hbar,
                               const grid::Grid1D& g) {
  if (!(hbar > 0.0)) throw ValidationError("weyl_quantize: hbar must be positive");
  const SupportBox& box = a.support_box();
  const double xi_max = momentum_half_range(hbar, g);
  if (!a.x_constant() &&
      (box.x_lo <= -g.half_length || box.x_hi >= g.half_length))
    throw NumericalHealthError("weyl_quantize: symbol support exceeds the spatial range");
  if (!a.xi_constant() && (box.xi_lo <= -xi_max || box.xi_hi >= xi_max))
    throw NumericalHealthError(
        "weyl_quantize: symbol support exceeds the momentum range (aliasing)");

  const int n = g.n;
  Eigen::MatrixXcd k_matrix = Eigen::MatrixXcd::Zero(n, n);
  std::vector<complexd> row(n);

  // K[j,k] depends only on the midpoint and the lag d = j - k, so one
  // inverse FFT per midpoint assembles a full anti-diagonal. Lags are
  // wrapped to [-n/2, n/2) and the midpoint follows the short arc of the
  // periodic grid; the straight (x_j + x_k)/2 would couple the two spatial
  // edges through the interior of the symbol support.
  for (int t = 0; t < 2 * n; ++t) {
    const double x_mid = -g.half_length + 0.5 * t * g.dx();
    if (x_mid < box.x_lo || x_mid > box.x_hi) continue;

    bool any = false;
    for (int bin = 0; bin < n; ++bin) {
      const double xi = hbar * g.wavenumber(bin);
      const complexd value = a(x_mid, xi);
      row[bin] = value;
      any = any || (value != complexd(0.0, 0.0));
    }
    if (!any) continue;
    fft::transform(row, true);

    // pairs (j, k) with wrapped lag d of the parity of t and
    // midpoint index (2k + d) mod 2n equal to t
    for (int d = -n / 2 + (((t + n / 2) % 2 + 2) % 2); d < n / 2; d += 2) {
      const int k = (((t - d) / 2) % n + n) % n;
      const int j = ((k + d) % n + n) % n;
      k_matrix(j, k) = row[(d % n + n) % n];
    }
  }

  // At lag exactly n/2 both arcs have the same length and the midpoint is
  // ambiguous; average the two choices so real symbols stay Hermitian.
  if (a.real_valued()) {
    for (int k = 0; k < n; ++k) {
      const int j = (k + n / 2) % n;
      if (j < k) continue;
      const complexd h = 0.5 * (k_matrix(j, k) + std::conj(k_matrix(k, j)));
      k_matrix(j, k) = h;
      k_matrix(k, j) = std::conj(h);
    }
  }
  return k_matrix;
}

double expectation_symbol(const grid::GridWavefunction& psi,
                          const PhaseSpaceSymbol& a, double hbar) {
  if (psi.hbar() != hbar)
    throw ValidationError("expectation_symbol: hbar differs from the packet's");
  const Eigen::MatrixXcd k_matrix = weyl_quantize(a, hbar, psi.grid());
  const int n = psi.grid().n;
  Eigen::VectorXcd v(n);
  for (int j = 0; j < n; ++j) v[j] = psi.values()[j];
  const complexd val = (v.adjoint() * (k_matrix * v))(0) * psi.grid().dx();
  if (std::abs(val.imag()) > 1e-8)
    throw NumericalHealthError("expectation_symbol: imaginary part above 1e-8");
  return val.real();
}

std::vector<SemiclassicalRow> semiclassical_limit_table(
    const grid::RealFunction& envelope, double x0, double xi0,
    const PhaseSpaceSymbol& a, const std::vector<double>& hbar_list,
    const grid::Grid1D& g) {
  if (hbar_list.empty())
    throw ValidationError("semiclassical_limit_table: empty hbar list");
  for (std::size_t i = 1; i < hbar_list.size(); ++i)
    if (!(hbar_list[i] < hbar_list[i - 1]))
      throw ValidationError("semiclassical_limit_table: hbar list must decrease strictly");

  const double target = a(x0, xi0).real();
  std::vector<SemiclassicalRow> rows;
  rows.reserve(hbar_list.size());
  for (const double hbar : hbar_list) {
    if (std::sqrt(hbar) < 4.0 * g.dx())
      throw NumericalHealthError("semiclassical_limit_table: packet under-resolved");
    const grid::GridWavefunction psi = grid::wave_packet(envelope, x0, xi0, hbar, g);
    const double value = expectation_symbol(psi, a, hbar);
    rows.push_back({hbar, value, target, std::abs(value - target)});
  }
  return rows;
}

namespace {

struct SymbolDerivatives {
  complexd dx, dxi, dxx, dxixi, dxxi;
};

SymbolDerivatives differentiate(const PhaseSpaceSymbol& f, double x, double xi,
                                double h) {
  SymbolDerivatives d{};
  const complexd fpp = f(x + h, xi), fmm = f(x - h, xi);
  const complexd gpp = f(x, xi + h), gmm = f(x, xi - h);
  const complexd f0 = f(x, xi);
  d.dx = (fpp - fmm) / (2.0 * h);
  d.dxi = (gpp - gmm) / (2.0 * h);
  d.dxx = (fpp - 2.0 * f0 + fmm) / (h * h);
  d.dxixi = (gpp - 2.0 * f0 + gmm) / (h * h);
  d.dxxi = (f(x + h, xi + h) - f(x + h, xi - h) - f(x - h, xi + h) +
            f(x - h, xi - h)) /
           (4.0 * h * h);
  return d;
}

}  // namespace

PhaseSpaceSymbol moyal_product_truncated(const PhaseSpaceSymbol& a,
                                         const PhaseSpaceSymbol& b, double hbar,
                                         int order) {
  if (order < 0 || order > 2)
    throw ValidationError("moyal_product_truncated: order above 2 is unsupported");

  const SupportBox& ba = a.support_box();
  const SupportBox& bb = b.support_box();
  SupportBox box{std::max(ba.x_lo, bb.x_lo), std::min(ba.x_hi, bb.x_hi),
                 std::max(ba.xi_lo, bb.xi_lo), std::min(ba.xi_hi, bb.xi_hi)};
  if (!(box.x_lo < box.x_hi) || !(box.xi_lo < box.xi_hi)) {
    // Disjoint supports: the product is identically zero; keep a token box.
    auto zero = [](double, double) -> complexd { return 0.0; };
    SupportBox token{ba.x_lo, ba.x_lo + 1e-6, ba.xi_lo, ba.xi_lo + 1e-6};
    return PhaseSpaceSymbol(zero, token, 0.0, true);
  }

  const double h = 1e-4 * box.max_extent();
  auto eval = [a, b, hbar, order, h](double x, double xi) -> complexd {
    complexd val = a(x, xi) * b(x, xi);
    if (order >= 1) {
      const SymbolDerivatives da = differentiate(a, x, xi, h);
      const SymbolDerivatives db = differentiate(b, x, xi, h);
      // Composition with the midpoint quantisation used here fixes the
      // first-order sign: op(x) op(xi) = op(x xi + i hbar / 2).
      val += complexd(0.0, 0.5 * hbar) * (da.dx * db.dxi - da.dxi * db.dx);
      if (order >= 2) {
        val -= (hbar * hbar / 8.0) *
               (da.dxixi * db.dxx - 2.0 * da.dxxi * db.dxxi + da.dxx * db.dxixi);
      }
    }
    return val;
  };
  const bool real = (order == 0) && a.real_valued() && b.real_valued();
  const double bound = a.bound() * b.bound() * (1.0 + hbar);
  return PhaseSpaceSymbol(std::move(eval), box, bound, real);
}

PhaseGrid PhaseGrid::regular(double x_lo, double x_hi, int nx, double xi_lo,
                             double xi_hi, int nxi) {
  if (nx < 2 || nxi < 2 || !(x_lo < x_hi) || !(xi_lo < xi_hi))
    throw ValidationError("PhaseGrid: malformed extents");
  PhaseGrid pg;
  pg.x.resize(nx);
  pg.xi.resize(nxi);
  for (int i = 0; i < nx; ++i)
    pg.x[i] = x_lo + (x_hi - x_lo) * (i + 0.5) / nx;
  for (int j = 0; j < nxi; ++j)
    pg.xi[j] = xi_lo + (xi_hi - xi_lo) * (j + 0.5) / nxi;
  return pg;
}

double PhaseGrid::cell_dx() const {
  return x.size() > 1 ? x[1] - x[0] : 0.0;
}
double PhaseGrid::cell_dxi() const {
  return xi.size() > 1 ? xi[1] - xi[0] : 0.0;
}

namespace {

// Windowed coherent-state overlap <g_{xc,xic}, psi> on the grid; the
// Gaussian is truncated at 7.5 sqrt(hbar) where it is ~1e-12.
complexd coherent_overlap(const grid::GridWavefunction& psi, double xc,
                          double xic) {
  const grid::Grid1D& g = psi.grid();
  const double hbar = psi.hbar();
  const double width = 7.5 * std::sqrt(hbar);
  const double amp = std::pow(kPi * hbar, -0.25);

  int j_lo = static_cast<int>(std::floor((xc - width + g.half_length) / g.dx()));
  int j_hi = static_cast<int>(std::ceil((xc + width + g.half_length) / g.dx()));
  j_lo = std::max(j_lo, 0);
  j_hi = std::min(j_hi, g.n - 1);

  complexd acc(0.0, 0.0);
  for (int j = j_lo; j <= j_hi; ++j) {
    const double x = g.node(j);
    const double d = x - xc;
    const complexd gj =
        amp * std::exp(-d * d / (2.0 * hbar)) * std::polar(1.0, x * xic / hbar);
    acc += std::conj(gj) * psi.values()[j];
  }
  return acc * g.dx();
}

}  // namespace

Eigen::MatrixXd husimi(const grid::GridWavefunction& psi, const PhaseGrid& pg) {
  const double root = std::sqrt(psi.hbar());
  if (pg.cell_dx() > root || pg.cell_dxi() > root)
    throw NumericalHealthError("husimi: phase grid cell larger than sqrt(hbar)");

  Eigen::MatrixXd field(pg.x.size(), pg.xi.size());
  const double scale = 1.0 / (2.0 * kPi * psi.hbar());
  for (std::size_t i = 0; i < pg.x.size(); ++i)
    for (std::size_t j = 0; j < pg.xi.size(); ++j)
      field(i, j) = scale * std::norm(coherent_overlap(psi, pg.x[i], pg.xi[j]));
  return field;
}

double husimi_mass(const Eigen::MatrixXd& field, const PhaseGrid& pg) {
  return field.sum() * pg.cell_dx() * pg.cell_dxi();
}

double branch_mass(const grid::GridWavefunction& psi, double center_x,
                   double center_xi, double radius) {
  if (!(radius > 0.0)) throw ValidationError("branch_mass: radius must be positive");
  const grid::Grid1D& g = psi.grid();
  const double hbar = psi.hbar();
  const double xi_nyquist = hbar * kPi / g.dx();
  if (std::abs(center_x) + radius > g.half_length ||
      std::abs(center_xi) + radius > xi_nyquist)
    throw ValidationError("branch_mass: disc extends outside the phase grid");

  const double cell = std::sqrt(hbar) / 4.0;
  const int m = static_cast<int>(std::ceil(radius / cell));
  const double scale = 1.0 / (2.0 * kPi * hbar);
  double mass = 0.0;
  for (int i = -m; i <= m; ++i) {
    const double x = center_x + i * cell;
    for (int j = -m; j <= m; ++j) {
      const double xi = center_xi + j * cell;
      const double dx = x - center_x, dxi = xi - center_xi;
      if (dx * dx + dxi * dxi > radius * radius) continue;
      mass += scale * std::norm(coherent_overlap(psi, x, xi));
    }
  }
  return mass * cell * cell;
}

}  // namespace statekit::weyl
