#include "statekit/probability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace statekit::prob {

DiscreteDistribution::DiscreteDistribution(std::vector<double> points,
                                           std::vector<double> weights) {
  if (points.size() != weights.size())
    throw ValidationError("distribution: points and weights differ in length");
  if (points.empty()) throw ValidationError("distribution: empty support");

  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(points[i]) || !std::isfinite(weights[i]))
      throw ValidationError("distribution: non-finite entry");
    if (weights[i] < -tol::weight)
      throw ValidationError("distribution: negative weight");
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > tol::weight)
    throw ValidationError("distribution: weights sum to " + std::to_string(sum) +
                          ", not 1 within 1e-12");

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

  for (std::size_t k = 0; k < order.size(); ++k) {
    const double p = points[order[k]];
    const double w = weights[order[k]];
    if (!points_.empty() && p == points_.back())
      throw ValidationError("distribution: duplicate support point");
    if (w <= tol::weight) continue;  // prune numerical dust
    points_.push_back(p);
    weights_.push_back(w);
  }
  if (points_.empty())
    throw ValidationError("distribution: all weights pruned");

  // Renormalise exactly after pruning.
  const double kept = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  for (double& w : weights_) w /= kept;
}

DiscreteDistribution DiscreteDistribution::dirac(double point) {
  return DiscreteDistribution({point}, {1.0});
}

double DiscreteDistribution::weight_at(double point) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), point);
  if (it == points_.end() || *it != point) return 0.0;
  return weights_[static_cast<std::size_t>(it - points_.begin())];
}

DiscreteDistribution mix_measures(const DiscreteDistribution& mu1,
                                  const DiscreteDistribution& mu2, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw ValidationError("mix_measures: lambda outside [0,1]");

  std::map<double, double> acc;
  for (std::size_t i = 0; i < mu1.support_size(); ++i)
    acc[mu1.points()[i]] += lambda * mu1.weights()[i];
  for (std::size_t i = 0; i < mu2.support_size(); ++i)
    acc[mu2.points()[i]] += (1.0 - lambda) * mu2.weights()[i];

  std::vector<double> pts, wts;
  pts.reserve(acc.size());
  wts.reserve(acc.size());
  for (const auto& [p, w] : acc) {
    pts.push_back(p);
    wts.push_back(w);
  }
  return DiscreteDistribution(std::move(pts), std::move(wts));
}

double mean(const RealFunction& f, const DiscreteDistribution& mu) {
  double s = 0.0;
  for (std::size_t i = 0; i < mu.support_size(); ++i)
    s += f(mu.points()[i]) * mu.weights()[i];
  return s;
}

double variance(const RealFunction& f, const DiscreteDistribution& mu) {
  const double m = mean(f, mu);
  double s = 0.0;
  for (std::size_t i = 0; i < mu.support_size(); ++i) {
    const double d = f(mu.points()[i]) - m;
    s += d * d * mu.weights()[i];
  }
  if (s < 0.0) s = 0.0;  // centered form cannot go below roundoff
  return s;
}

VarianceDecomposition mixture_variance_decomposition(const DiscreteDistribution& mu1,
                                                     const DiscreteDistribution& mu2,
                                                     double lambda,
                                                     const RealFunction& f) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw ValidationError("mixture_variance_decomposition: lambda outside [0,1]");
  const double l2 = 1.0 - lambda;
  const double m1 = mean(f, mu1), m2 = mean(f, mu2);
  VarianceDecomposition d{};
  d.within = lambda * variance(f, mu1) + l2 * variance(f, mu2);
  d.between = lambda * l2 * (m1 - m2) * (m1 - m2);
  d.total = variance(f, mix_measures(mu1, mu2, lambda));
  return d;
}

bool is_extremal(const DiscreteDistribution& mu) { return mu.support_size() == 1; }

}  // namespace statekit::prob
