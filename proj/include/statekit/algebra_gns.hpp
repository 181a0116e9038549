#ifndef STATEKIT_ALGEBRA_GNS_HPP
#define STATEKIT_ALGEBRA_GNS_HPP

#include <Eigen/Dense>
#include <vector>

#include "statekit/common.hpp"
#include "statekit/states.hpp"

namespace statekit::gns {

/// Finite-dimensional *-algebra of complex matrices, stored through a basis
/// that is orthonormal under the Hilbert-Schmidt inner product
/// <A,B> = Tr(A* B). The basis spans a set closed under products and
/// adjoints; instances are produced by close_algebra and are immutable.
class MatrixStarAlgebra {
public:
  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool contains_identity() const { return contains_identity_; }

  const std::vector<Eigen::MatrixXcd>& basis() const { return basis_; }
  const std::vector<Eigen::MatrixXcd>& generators() const { return generators_; }

  /// Hilbert-Schmidt coordinates of an element. Throws when the matrix lies
  /// outside the span (relative residual above 1e-8).
  Eigen::VectorXcd coordinates(const Eigen::MatrixXcd& x) const;

  Eigen::MatrixXcd from_coordinates(const Eigen::VectorXcd& c) const;

  /// Matrix of left multiplication by a in basis coordinates:
  /// column j holds the coordinates of a * basis[j].
  Eigen::MatrixXcd left_multiplication(const Eigen::MatrixXcd& a) const;

private:
  friend MatrixStarAlgebra close_algebra(const std::vector<Eigen::MatrixXcd>&, bool);
  int ambient_dim_ = 0;
  bool contains_identity_ = false;
  std::vector<Eigen::MatrixXcd> basis_;
  std::vector<Eigen::MatrixXcd> generators_;
};

/// Smallest *-closed, product-closed subspace containing the generators
/// (and the identity when requested). Iterates products and adjoints with
/// modified Gram-Schmidt until the dimension stabilises.
MatrixStarAlgebra close_algebra(const std::vector<Eigen::MatrixXcd>& generators,
                                bool include_identity);

/// Linear functional on a MatrixStarAlgebra, stored by its values on the
/// orthonormal basis and extended linearly.
class StateFunctional {
public:
  StateFunctional(MatrixStarAlgebra algebra, Eigen::VectorXcd values_on_basis);

  const MatrixStarAlgebra& algebra() const { return algebra_; }
  const Eigen::VectorXcd& values() const { return values_; }

  complexd operator()(const Eigen::MatrixXcd& x) const;
  complexd on_coordinates(const Eigen::VectorXcd& c) const;

private:
  MatrixStarAlgebra algebra_;
  Eigen::VectorXcd values_;
};

StateFunctional state_from_density(const MatrixStarAlgebra& algebra,
                                   const states::DensityMatrix& rho);
StateFunctional state_from_vector(const MatrixStarAlgebra& algebra,
                                  const Eigen::VectorXcd& psi);

/// Gram matrix G_ij = omega(b_i* b_j) of a functional.
Eigen::MatrixXcd gram_matrix(const StateFunctional& omega);

struct StateValidationReport {
  double normalization_residual;  // |omega(1) - 1|
  double gram_min_eigenvalue;     // positivity: must be >= -1e-10
  double hermiticity_residual;    // max_i |omega(b_i*) - conj(omega(b_i))|
  bool passes() const {
    return normalization_residual <= 1e-10 && gram_min_eigenvalue >= -1e-10 &&
           hermiticity_residual <= 1e-10;
  }
};

StateValidationReport validate_state(const StateFunctional& omega);

/// Cyclic representation data produced by the quotient construction: the
/// representation space is the span of the Gram eigenvectors whose
/// eigenvalue survives the null threshold, with coordinates chosen so the
/// quotient inner product becomes the standard one.
class GNSRep {
public:
  int rep_dim() const { return rep_dim_; }

  /// Representative of each algebra basis element.
  const std::vector<Eigen::MatrixXcd>& pi_basis() const { return pi_basis_; }
  /// Representatives of the algebra's generating set (same commutant as the
  /// full basis, cheaper to stack).
  const std::vector<Eigen::MatrixXcd>& pi_generators() const { return pi_generators_; }

  const Eigen::VectorXcd& cyclic_vector() const { return omega_vec_; }

  /// Representation-space vector of an algebra element (the class psi_A).
  Eigen::VectorXcd quotient_vector(const Eigen::MatrixXcd& a) const;

  /// Representative of an arbitrary algebra element.
  Eigen::MatrixXcd pi(const Eigen::MatrixXcd& a) const;

private:
  friend GNSRep gns(const MatrixStarAlgebra&, const StateFunctional&, double);
  int rep_dim_ = 0;
  MatrixStarAlgebra algebra_;
  Eigen::MatrixXcd kept_eigenvectors_;      // algebra_dim x rep_dim
  Eigen::VectorXd kept_sqrt_eigenvalues_;   // rep_dim
  std::vector<Eigen::MatrixXcd> pi_basis_;
  std::vector<Eigen::MatrixXcd> pi_generators_;
  Eigen::VectorXcd omega_vec_;
};

/// GNS construction. Eigenpairs of the Gram matrix with eigenvalue above
/// null_tol * (largest eigenvalue) define the representation space; left
/// multiplication expressed in those coordinates defines pi.
GNSRep gns(const MatrixStarAlgebra& algebra, const StateFunctional& omega,
           double null_tol = tol::null_space);

/// Dimension of {T : T pi(B) = pi(B) T for every B in the algebra},
/// computed as the null-space dimension of the stacked commutator operator
/// with a singular-value threshold of 1e-9 relative to the largest
/// singular value.
int commutant_dimension(const GNSRep& rep);

/// Purity via irreducibility: the commutant of the cyclic representation is
/// trivial exactly for pure states.
bool is_pure_via_gns(const MatrixStarAlgebra& algebra, const StateFunctional& omega,
                     double null_tol = tol::null_space);

}  // namespace statekit::gns

#endif
