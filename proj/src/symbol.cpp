#include "statekit/symbol.hpp"

#include <cmath>

#include "statekit/grid.hpp"

namespace statekit::weyl {

PhaseSpaceSymbol::PhaseSpaceSymbol(Evaluator eval, SupportBox box, double bound,
                                   bool real_valued)
    : eval_(std::move(eval)), box_(box), bound_(bound), real_valued_(real_valued) {
  if (!eval_) throw ValidationError("PhaseSpaceSymbol: missing evaluator");
  if (!(box_.x_lo < box_.x_hi) || !(box_.xi_lo < box_.xi_hi))
    throw ValidationError("PhaseSpaceSymbol: degenerate support box");
}

PhaseSpaceSymbol bump_symbol(double cx, double cxi, double rx, double rxi,
                             double amplitude) {
  if (!(rx > 0.0) || !(rxi > 0.0))
    throw ValidationError("bump_symbol: radii must be positive");
  auto eval = [=](double x, double xi) -> complexd {
    const double ux = (x - cx) / rx;
    const double uxi = (xi - cxi) / rxi;
    const double r2 = ux * ux + uxi * uxi;
    if (r2 >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - r2));
  };
  SupportBox box{cx - rx, cx + rx, cxi - rxi, cxi + rxi};
  return PhaseSpaceSymbol(eval, box, std::abs(amplitude), true);
}

PhaseSpaceSymbol windowed_quadratic_symbol(double cx, double cxi, double cx2,
                                           double cxi2, double r_inner,
                                           double r_outer) {
  if (!(0.0 < r_inner && r_inner < r_outer))
    throw ValidationError("windowed_quadratic_symbol: need 0 < r_inner < r_outer");
  auto eval = [=](double x, double xi) -> complexd {
    const double dx = x - cx;
    const double dxi = xi - cxi;
    const double r = std::sqrt(dx * dx + dxi * dxi);
    if (r >= r_outer) return 0.0;
    const double q = 1.0 + 0.5 * cx2 * dx * dx + 0.5 * cxi2 * dxi * dxi;
    if (r <= r_inner) return q;
    return q * grid::smooth_step_down((r - r_inner) / (r_outer - r_inner));
  };
  SupportBox box{cx - r_outer, cx + r_outer, cxi - r_outer, cxi + r_outer};
  const double bound =
      1.0 + 0.5 * (std::abs(cx2) + std::abs(cxi2)) * r_outer * r_outer;
  return PhaseSpaceSymbol(eval, box, bound, true);
}

PhaseSpaceSymbol multiplication_symbol(std::function<double(double)> f,
                                       double x_lo, double x_hi) {
  if (!f || !(x_lo < x_hi))
    throw ValidationError("multiplication_symbol: bad factor or range");
  double bound = 0.0;
  for (int i = 0; i <= 256; ++i)
    bound = std::max(bound, std::abs(f(x_lo + (x_hi - x_lo) * i / 256.0)));
  auto eval = [f = std::move(f)](double x, double) -> complexd { return f(x); };
  PhaseSpaceSymbol s(std::move(eval), SupportBox{x_lo, x_hi, -1e300, 1e300},
                     bound, true);
  s.xi_constant_ = true;
  return s;
}

PhaseSpaceSymbol convolution_symbol(std::function<double(double)> g,
                                    double xi_lo, double xi_hi) {
  if (!g || !(xi_lo < xi_hi))
    throw ValidationError("convolution_symbol: bad factor or range");
  double bound = 0.0;
  for (int i = 0; i <= 256; ++i)
    bound = std::max(bound, std::abs(g(xi_lo + (xi_hi - xi_lo) * i / 256.0)));
  auto eval = [g = std::move(g)](double, double xi) -> complexd { return g(xi); };
  PhaseSpaceSymbol s(std::move(eval), SupportBox{-1e300, 1e300, xi_lo, xi_hi},
                     bound, true);
  s.x_constant_ = true;
  return s;
}

PhaseSpaceSymbol separable_symbol(std::function<double(double)> fx,
                                  std::function<double(double)> gxi,
                                  SupportBox box) {
  if (!fx || !gxi) throw ValidationError("separable_symbol: missing factors");
  double bound = 0.0;
  for (int i = 0; i <= 64; ++i) {
    const double x = box.x_lo + (box.x_hi - box.x_lo) * i / 64.0;
    for (int j = 0; j <= 64; ++j) {
      const double xi = box.xi_lo + (box.xi_hi - box.xi_lo) * j / 64.0;
      bound = std::max(bound, std::abs(fx(x) * gxi(xi)));
    }
  }
  auto eval = [fx = std::move(fx), gxi = std::move(gxi)](double x, double xi)
      -> complexd { return fx(x) * gxi(xi); };
  return PhaseSpaceSymbol(std::move(eval), box, bound, true);
}

}  // namespace statekit::weyl
