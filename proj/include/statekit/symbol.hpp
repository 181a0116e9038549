#ifndef STATEKIT_SYMBOL_HPP
#define STATEKIT_SYMBOL_HPP

#include <algorithm>
#include <functional>

#include "statekit/common.hpp"

namespace statekit::weyl {

struct SupportBox {
  double x_lo, x_hi, xi_lo, xi_hi;

  bool contains(double x, double xi) const {
    return x >= x_lo && x <= x_hi && xi >= xi_lo && xi <= xi_hi;
  }
  double max_extent() const {
    return std::max(x_hi - x_lo, xi_hi - xi_lo);
  }
};

/// Phase-space symbol with compact support: the evaluator is clamped to
/// zero outside the declared box. Physical symbols are real-valued;
/// truncated star products carry imaginary corrections, so values are
/// complex internally and real_valued() records which case applies.
class PhaseSpaceSymbol {
public:
  using Evaluator = std::function<complexd(double, double)>;

  PhaseSpaceSymbol(Evaluator eval, SupportBox box, double bound, bool real_valued);

  complexd operator()(double x, double xi) const {
    if (!box_.contains(x, xi)) return complexd(0.0, 0.0);
    return eval_(x, xi);
  }

  const SupportBox& support_box() const { return box_; }
  double bound() const { return bound_; }
  bool real_valued() const { return real_valued_; }

  /// Constant along xi (multiplication symbols) or along x (convolution
  /// symbols). Such symbols sample exactly on any conjugate grid, so the
  /// corresponding quantisation range check does not apply to them.
  bool xi_constant() const { return xi_constant_; }
  bool x_constant() const { return x_constant_; }

private:
  friend PhaseSpaceSymbol multiplication_symbol(std::function<double(double)>,
                                                double, double);
  friend PhaseSpaceSymbol convolution_symbol(std::function<double(double)>,
                                             double, double);
  Evaluator eval_;
  SupportBox box_;
  double bound_;
  bool real_valued_;
  bool xi_constant_ = false;
  bool x_constant_ = false;
};

/// Elliptic bump amplitude * e^(1 - 1/(1 - r^2)) with
/// r^2 = ((x-cx)/rx)^2 + ((xi-cxi)/rxi)^2.
PhaseSpaceSymbol bump_symbol(double cx, double cxi, double rx, double rxi,
                             double amplitude = 1.0);

/// Radially windowed quadratic: equals
///   1 + 0.5 cx2 (x-cx)^2 + 0.5 cxi2 (xi-cxi)^2
/// on the disc r <= r_inner and rolls smoothly to zero by r = r_outer.
/// Its Laplacian at the centre is cx2 + cxi2.
PhaseSpaceSymbol windowed_quadratic_symbol(double cx, double cxi, double cx2,
                                           double cxi2, double r_inner,
                                           double r_outer);

/// Product symbol fx(x) * gxi(xi) clamped to the given box.
PhaseSpaceSymbol separable_symbol(std::function<double(double)> fx,
                                  std::function<double(double)> gxi,
                                  SupportBox box);

/// Symbol f(x), constant in xi, with f supported in [x_lo, x_hi]; its
/// quantisation is exactly diagonal.
PhaseSpaceSymbol multiplication_symbol(std::function<double(double)> f,
                                       double x_lo, double x_hi);

/// Symbol g(xi), constant in x, with g supported in [xi_lo, xi_hi]; its
/// quantisation is exactly circulant with plane-wave eigenvectors.
PhaseSpaceSymbol convolution_symbol(std::function<double(double)> g,
                                    double xi_lo, double xi_hi);

}  // namespace statekit::weyl

#endif
