#ifndef STATEKIT_PROBABILITY_HPP
#define STATEKIT_PROBABILITY_HPP

#include <functional>
#include <vector>

#include "statekit/common.hpp"

namespace statekit::prob {

/// Finite probability measure with explicit support on the real line.
/// Weights below tol::weight are pruned on construction; the remaining
/// weights must be nonnegative, sum to 1 within tol::weight, and sit on
/// pairwise distinct points. Values are immutable after construction.
class DiscreteDistribution {
public:
  DiscreteDistribution(std::vector<double> points, std::vector<double> weights);

  static DiscreteDistribution dirac(double point);

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t support_size() const { return points_.size(); }

  /// Weight carried by a single point (0 if outside the support).
  /// Points are compared exactly; callers canonicalise their values.
  double weight_at(double point) const;

private:
  std::vector<double> points_;   // sorted ascending
  std::vector<double> weights_;  // aligned with points_
};

/// Convex combination lambda*mu1 + (1-lambda)*mu2 on the union of supports.
DiscreteDistribution mix_measures(const DiscreteDistribution& mu1,
                                  const DiscreteDistribution& mu2, double lambda);

using RealFunction = std::function<double(double)>;

double mean(const RealFunction& f, const DiscreteDistribution& mu);

/// <f^2> - <f>^2, clamped to 0 when roundoff produces values in (-1e-14, 0).
double variance(const RealFunction& f, const DiscreteDistribution& mu);

struct VarianceDecomposition {
  double total;    // variance of f under the mixture
  double within;   // lambda1*Var1 + lambda2*Var2
  double between;  // lambda1*lambda2*(mean1 - mean2)^2
};

VarianceDecomposition mixture_variance_decomposition(const DiscreteDistribution& mu1,
                                                     const DiscreteDistribution& mu2,
                                                     double lambda, const RealFunction& f);

/// True iff the measure is a point mass (exactly one surviving weight).
bool is_extremal(const DiscreteDistribution& mu);

}  // namespace statekit::prob

#endif
