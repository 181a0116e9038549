#ifndef STATEKIT_STATES_HPP
#define STATEKIT_STATES_HPP

#include <Eigen/Dense>
#include <vector>

#include "statekit/common.hpp"

namespace statekit::states {

/// Hermitian, positive semidefinite, trace-one complex matrix.
/// Construction validates all three conditions (Hermiticity and trace to
/// 1e-12, eigenvalues down to -1e-12) and symmetrises the stored entries.
class DensityMatrix {
public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

private:
  Eigen::MatrixXcd entries_;
};

/// Hermitian complex matrix representing a measurable quantity.
class Observable {
public:
  explicit Observable(Eigen::MatrixXcd entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

private:
  Eigen::MatrixXcd entries_;
};

/// Real 3-vector a with |a| <= 1 parametrising a qubit state
/// rho = (1/2)(id + a . sigma).
struct BlochVector {
  Eigen::Vector3d a;
  explicit BlochVector(const Eigen::Vector3d& v);
};

/// Tr(rho A). The imaginary part of the computed trace must stay below
/// 1e-10 (it is discarded); larger values indicate corrupted inputs.
double expectation(const DensityMatrix& rho, const Observable& a);

/// sqrt(Tr(rho* rho)); equals 1 exactly on rank-one projectors and is < 1
/// on every proper mixture.
double hs_norm(const DensityMatrix& rho);

bool is_pure(const DensityMatrix& rho, double tolerance = tol::purity);

DensityMatrix mix_states(const DensityMatrix& rho1, const DensityMatrix& rho2,
                         double lambda);

/// |psi><psi| for a unit vector; set renormalize to accept unnormalised
/// input. The zero vector is rejected.
DensityMatrix vector_state(const Eigen::VectorXcd& psi, bool renormalize = false);

BlochVector bloch_from_density(const DensityMatrix& rho);
DensityMatrix density_from_bloch(const BlochVector& b);

struct ExtremalComponent {
  double weight;
  Eigen::VectorXcd psi;
};

/// Spectral decomposition rho = sum_k w_k |psi_k><psi_k| with w_k > 1e-12,
/// weights sorted descending, orthonormal vectors, and a deterministic
/// convention for degenerate eigenspaces: Gram-Schmidt in eigensolver
/// order, global phase fixed so the first nonzero component is real
/// positive, ties between equal weights broken lexicographically.
std::vector<ExtremalComponent> extremal_decomposition(const DensityMatrix& rho);

/// Tr(rho A^2) - Tr(rho A)^2, clamped at -1e-12.
double variance_observable(const DensityMatrix& rho, const Observable& a);

struct GapTarget {
  Observable observable;
  double value;
};

/// Grid search over the pure-state surface of the Bloch sphere (resolution^2
/// points, followed by a golden-section refinement pass on each angle) for
///   min over psi of max_j |<psi, A_j psi> - target_j|.
/// A strictly positive return certifies numerically that no vector state
/// reproduces all the targets simultaneously.
double vector_state_gap(const std::vector<GapTarget>& targets, int resolution);

}  // namespace statekit::states

#endif
