#include "statekit/linalg.hpp"

#include <cmath>

namespace statekit::linalg {

double operator_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

double operator_norm_estimate(const Eigen::MatrixXcd& m, int iterations) {
  const Eigen::Index n = m.cols();
  if (n == 0) return 0.0;
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v[i] = complexd(1.0, 0.37 + 1e-3 * double(i % 97));
  v.normalize();
  double sigma2 = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXcd w = m.adjoint() * (m * v);
    sigma2 = w.norm();
    if (sigma2 == 0.0) return 0.0;
    v = w / sigma2;
  }
  return std::sqrt(sigma2);
}

}  // namespace statekit::linalg
