#ifndef STATEKIT_TEST_SUPPORT_HPP
#define STATEKIT_TEST_SUPPORT_HPP

#include <Eigen/Dense>
#include <complex>
#include <random>

// Shared deterministic generators for the test suites. Everything is
// seeded explicitly so reruns are bit-identical on one machine.
namespace testsup {

using complexd = std::complex<double>;

inline Eigen::MatrixXcd ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = complexd(n01(rng), n01(rng));
  return g;
}

inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = ginibre(n, n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const complexd d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline Eigen::VectorXcd random_unit_vector(int n, std::mt19937_64& rng) {
  Eigen::VectorXcd v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

/// Density matrix of the requested rank (full rank when rank <= 0).
inline Eigen::MatrixXcd random_density_entries(int n, std::mt19937_64& rng,
                                               int rank = 0) {
  if (rank <= 0 || rank > n) rank = n;
  const Eigen::MatrixXcd g = ginibre(n, rank, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint().eval());
}

inline Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint().eval());
}

}  // namespace testsup

#endif
