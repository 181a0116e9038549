#ifndef STATEKIT_PURIFICATION_HPP
#define STATEKIT_PURIFICATION_HPP

#include <Eigen/Dense>
#include <string>

#include "statekit/common.hpp"
#include "statekit/states.hpp"

namespace statekit::purify {

/// Unit vector on a tensor product space, stored as its coefficient matrix:
/// amplitudes(i, l) multiplies v_i (x) w_l. The composite flattening used
/// everywhere is row-major, (i, l) -> i * dim_ii + l.
class BipartiteVector {
public:
  BipartiteVector(Eigen::MatrixXcd amplitudes);

  int dim_i() const { return static_cast<int>(amplitudes_.rows()); }
  int dim_ii() const { return static_cast<int>(amplitudes_.cols()); }
  const Eigen::MatrixXcd& amplitudes() const { return amplitudes_; }

  /// Flattened vector of length dim_i * dim_ii.
  Eigen::VectorXcd flattened() const;

  /// Projector onto the spanned line, as a matrix on the composite space.
  Eigen::MatrixXcd projector() const;

private:
  Eigen::MatrixXcd amplitudes_;
};

/// Purifying vector sum_k sqrt(w_k) v_k (x) w_k from the spectral
/// decomposition of rho, with the standard basis of the second factor.
/// Eigenvalues at or below 1e-12 are dropped; dim_ii must cover the
/// surviving rank. The textbook construction asks for
/// dim_ii >= dim(rho); rank coverage is sufficient and accepted here
/// (full_dimension_condition_met in the escalation report records which holds).
BipartiteVector purify(const states::DensityMatrix& rho, int dim_ii);

/// Same construction with the orthonormal set w_k = basis_ii * e_k.
BipartiteVector purify(const states::DensityMatrix& rho, int dim_ii,
                       const Eigen::MatrixXcd& basis_ii);

/// <Psi, (D (x) id) Psi> computed as Tr(M* D M) on the amplitude matrix.
double purified_expectation(const BipartiteVector& psi, const states::Observable& d);

/// Partial trace over the second factor of a density matrix on the
/// composite space: (Ptr m)_{ab} = sum_l m_{(a,l),(b,l)}.
states::DensityMatrix partial_trace_ii(const Eigen::MatrixXcd& m, int dim_i,
                                       int dim_ii);

struct PurityEscalationReport {
  double upstairs_hs_norm;    // hs norm of the purified projector (must be 1)
  double downstairs_hs_norm;  // hs norm of the partial trace (= hs norm of rho)
  bool full_dimension_condition_met;  // dim_ii >= dim_i
  std::string verdict;
};

PurityEscalationReport purity_escalation_check(const states::DensityMatrix& rho,
                                               int dim_ii);

}  // namespace statekit::purify

#endif
