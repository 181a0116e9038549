#include "statekit/purification.hpp"

#include <cmath>

namespace statekit::purify {

BipartiteVector::BipartiteVector(Eigen::MatrixXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.rows() == 0 || amplitudes_.cols() == 0)
    throw ValidationError("BipartiteVector: empty amplitude matrix");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10)
    throw ValidationError("BipartiteVector: Frobenius norm differs from 1 beyond 1e-10");
}

Eigen::VectorXcd BipartiteVector::flattened() const {
  Eigen::VectorXcd v(dim_i() * dim_ii());
  for (int i = 0; i < dim_i(); ++i)
    for (int l = 0; l < dim_ii(); ++l) v[i * dim_ii() + l] = amplitudes_(i, l);
  return v;
}

Eigen::MatrixXcd BipartiteVector::projector() const {
  const Eigen::VectorXcd v = flattened();
  return v * v.adjoint();
}

BipartiteVector purify(const states::DensityMatrix& rho, int dim_ii) {
  return purify(rho, dim_ii,
                Eigen::MatrixXcd::Identity(dim_ii, dim_ii));
}

BipartiteVector purify(const states::DensityMatrix& rho, int dim_ii,
                       const Eigen::MatrixXcd& basis_ii) {
  if (dim_ii < 1) throw ValidationError("purify: dim_ii must be positive");
  if (basis_ii.rows() != dim_ii || basis_ii.cols() < 1 || basis_ii.cols() > dim_ii)
    throw ValidationError("purify: second-factor basis has the wrong shape");
  if ((basis_ii.adjoint() * basis_ii -
       Eigen::MatrixXcd::Identity(basis_ii.cols(), basis_ii.cols()))
          .norm() > 1e-10)
    throw ValidationError("purify: second-factor vectors must be orthonormal");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  std::vector<int> kept;
  for (int i = rho.dim() - 1; i >= 0; --i)
    if (es.eigenvalues()[i] > tol::weight) kept.push_back(i);
  const int rank = static_cast<int>(kept.size());
  if (dim_ii < rank)
    throw ValidationError("purify: dim_ii smaller than rank(rho)");
  if (basis_ii.cols() < rank)
    throw ValidationError("purify: second-factor basis does not cover rank(rho)");

  Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(rho.dim(), dim_ii);
  for (int k = 0; k < rank; ++k) {
    const double w = std::sqrt(es.eigenvalues()[kept[k]]);
    // v_k (x) w_k contributes v_k[i] * w_k[l] (no conjugation: these are
    // expansion coefficients of a vector, not an operator).
    amp += w * es.eigenvectors().col(kept[k]) * basis_ii.col(k).transpose();
  }
  amp /= amp.norm();  // dropped eigenvalues leave at most 1e-12 mass
  return BipartiteVector(std::move(amp));
}

double purified_expectation(const BipartiteVector& psi, const states::Observable& d) {
  if (d.dim() != psi.dim_i())
    throw ValidationError("purified_expectation: observable dimension mismatch");
  const Eigen::MatrixXcd& m = psi.amplitudes();
  const complexd value = (m.adjoint() * d.matrix() * m).trace();
  if (std::abs(value.imag()) > 1e-10)
    throw NumericalHealthError("purified_expectation: imaginary part above 1e-10");
  return value.real();
}

states::DensityMatrix partial_trace_ii(const Eigen::MatrixXcd& m, int dim_i,
                                       int dim_ii) {
  if (dim_i < 1 || dim_ii < 1 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_i) * dim_ii)
    throw ValidationError("partial_trace_ii: shape mismatch");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_i, dim_i);
  for (int a = 0; a < dim_i; ++a)
    for (int b = 0; b < dim_i; ++b)
      for (int l = 0; l < dim_ii; ++l)
        out(a, b) += m(a * dim_ii + l, b * dim_ii + l);
  return states::DensityMatrix(out);
}

PurityEscalationReport purity_escalation_check(const states::DensityMatrix& rho,
                                               int dim_ii) {
  const BipartiteVector psi = purify(rho, dim_ii);
  const states::DensityMatrix big(psi.projector());
  const states::DensityMatrix back = partial_trace_ii(big.matrix(), rho.dim(), dim_ii);

  PurityEscalationReport report{};
  report.upstairs_hs_norm = states::hs_norm(big);
  report.downstairs_hs_norm = states::hs_norm(back);
  report.full_dimension_condition_met = dim_ii >= rho.dim();
  report.verdict =
      "purification is pure upstairs, original purity preserved downstairs";
  if (std::abs(report.upstairs_hs_norm - 1.0) > 1e-10)
    report.verdict = "purified projector failed the unit-norm check";
  return report;
}

}  // namespace statekit::purify
