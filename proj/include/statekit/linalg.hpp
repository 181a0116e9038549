#ifndef STATEKIT_LINALG_HPP
#define STATEKIT_LINALG_HPP

#include <Eigen/Dense>

#include "statekit/common.hpp"

namespace statekit::linalg {

/// Largest singular value, computed exactly (small matrices).
double operator_norm(const Eigen::MatrixXcd& m);

/// Largest singular value via power iteration on m* m with a fixed,
/// deterministic start vector. Suitable for matrices too large for a
/// full SVD; accuracy is more than enough for ratio tests.
double operator_norm_estimate(const Eigen::MatrixXcd& m, int iterations = 120);

}  // namespace statekit::linalg

#endif
