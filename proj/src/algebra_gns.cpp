#include "statekit/algebra_gns.hpp"

#include <cmath>

namespace statekit::gns {

namespace {

complexd hs_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a.adjoint() * b).trace();
}

// Projects m onto the orthogonal complement of the accumulated basis and
// appends the normalised residual when it is significant. Two projection
// sweeps keep the basis orthonormal to machine precision.
bool absorb(std::vector<Eigen::MatrixXcd>& basis, const Eigen::MatrixXcd& m) {
  const double scale = std::max(1.0, m.norm());
  Eigen::MatrixXcd r = m;
  for (int sweep = 0; sweep < 2; ++sweep)
    for (const auto& b : basis) r -= b * hs_inner(b, r);
  if (r.norm() <= 1e-10 * scale) return false;
  basis.push_back(r / r.norm());
  return true;
}

}  // namespace

MatrixStarAlgebra close_algebra(const std::vector<Eigen::MatrixXcd>& generators,
                                bool include_identity) {
  if (generators.empty())
    throw ValidationError("close_algebra: no generators");
  const Eigen::Index d = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != d || g.cols() != d)
      throw ValidationError("close_algebra: generators must be square matrices of equal dimension");

  std::vector<Eigen::MatrixXcd> basis;
  if (include_identity) absorb(basis, Eigen::MatrixXcd::Identity(d, d));
  for (const auto& g : generators) {
    absorb(basis, g);
    absorb(basis, g.adjoint());
  }

  // Saturate under products and adjoints. The dimension is bounded by d^2,
  // so the loop terminates.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = basis.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (std::size_t j = 0; j < snapshot; ++j) {
        const Eigen::MatrixXcd p = basis[i] * basis[j];
        if (absorb(basis, p)) grew = true;
        if (absorb(basis, p.adjoint())) grew = true;
      }
    }
  }

  MatrixStarAlgebra algebra;
  algebra.ambient_dim_ = static_cast<int>(d);
  algebra.basis_ = std::move(basis);
  algebra.generators_ = generators;

  // The identity may be present even when not requested (e.g. a generator
  // squaring to it); detect it by span membership.
  Eigen::MatrixXcd residual = Eigen::MatrixXcd::Identity(d, d);
  for (const auto& b : algebra.basis_) residual -= b * hs_inner(b, residual);
  algebra.contains_identity_ = residual.norm() <= 1e-10 * std::sqrt(double(d));
  return algebra;
}

Eigen::VectorXcd MatrixStarAlgebra::coordinates(const Eigen::MatrixXcd& x) const {
  if (x.rows() != ambient_dim_ || x.cols() != ambient_dim_)
    throw ValidationError("algebra coordinates: wrong matrix dimension");
  Eigen::VectorXcd c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = hs_inner(basis_[i], x);
  const double residual = (x - from_coordinates(c)).norm();
  if (residual > 1e-8 * std::max(1.0, x.norm()))
    throw ValidationError("algebra coordinates: element lies outside the span");
  return c;
}

Eigen::MatrixXcd MatrixStarAlgebra::from_coordinates(const Eigen::VectorXcd& c) const {
  if (c.size() != dim())
    throw ValidationError("algebra from_coordinates: wrong coordinate count");
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(ambient_dim_, ambient_dim_);
  for (int i = 0; i < dim(); ++i) x += c[i] * basis_[i];
  return x;
}

Eigen::MatrixXcd MatrixStarAlgebra::left_multiplication(const Eigen::MatrixXcd& a) const {
  Eigen::MatrixXcd m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    const Eigen::MatrixXcd ab = a * basis_[j];
    for (int i = 0; i < dim(); ++i) m(i, j) = hs_inner(basis_[i], ab);
  }
  return m;
}

StateFunctional::StateFunctional(MatrixStarAlgebra algebra,
                                 Eigen::VectorXcd values_on_basis)
    : algebra_(std::move(algebra)), values_(std::move(values_on_basis)) {
  if (values_.size() != algebra_.dim())
    throw ValidationError("StateFunctional: one value per basis element required");
}

complexd StateFunctional::operator()(const Eigen::MatrixXcd& x) const {
  return on_coordinates(algebra_.coordinates(x));
}

complexd StateFunctional::on_coordinates(const Eigen::VectorXcd& c) const {
  return (values_.transpose() * c)(0);
}

StateFunctional state_from_density(const MatrixStarAlgebra& algebra,
                                   const states::DensityMatrix& rho) {
  if (rho.dim() != algebra.ambient_dim())
    throw ValidationError("state_from_density: dimension mismatch");
  Eigen::VectorXcd v(algebra.dim());
  for (int i = 0; i < algebra.dim(); ++i)
    v[i] = (rho.matrix() * algebra.basis()[i]).trace();
  return StateFunctional(algebra, v);
}

StateFunctional state_from_vector(const MatrixStarAlgebra& algebra,
                                  const Eigen::VectorXcd& psi) {
  if (psi.size() != algebra.ambient_dim())
    throw ValidationError("state_from_vector: dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw ValidationError("state_from_vector: vector must be normalised");
  Eigen::VectorXcd v(algebra.dim());
  for (int i = 0; i < algebra.dim(); ++i)
    v[i] = (psi.adjoint() * algebra.basis()[i] * psi)(0);
  return StateFunctional(algebra, v);
}

Eigen::MatrixXcd gram_matrix(const StateFunctional& omega) {
  const auto& alg = omega.algebra();
  const int k = alg.dim();
  Eigen::MatrixXcd g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      g(i, j) = omega.on_coordinates(
          alg.coordinates(alg.basis()[i].adjoint() * alg.basis()[j]));
  return g;
}

StateValidationReport validate_state(const StateFunctional& omega) {
  const auto& alg = omega.algebra();
  if (!alg.contains_identity())
    throw ValidationError("validate_state: algebra must contain the identity");

  StateValidationReport report{};
  const int d = alg.ambient_dim();
  report.normalization_residual =
      std::abs(omega(Eigen::MatrixXcd::Identity(d, d)) - complexd(1.0, 0.0));

  const Eigen::MatrixXcd g = gram_matrix(omega);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
  report.gram_min_eigenvalue = es.eigenvalues().minCoeff();

  double herm = 0.0;
  for (int i = 0; i < alg.dim(); ++i) {
    const complexd adj_value =
        omega.on_coordinates(alg.coordinates(alg.basis()[i].adjoint()));
    herm = std::max(herm,
                    std::abs(adj_value - std::conj(omega.values()[i])));
  }
  report.hermiticity_residual = herm;
  return report;
}

GNSRep gns(const MatrixStarAlgebra& algebra, const StateFunctional& omega,
           double null_tol) {
  if (algebra.dim() != omega.algebra().dim() ||
      algebra.ambient_dim() != omega.algebra().ambient_dim())
    throw ValidationError("gns: functional does not match the algebra");
  if (!validate_state(omega).passes())
    throw ValidationError("gns: state fails validation");

  const int k = algebra.dim();
  const Eigen::MatrixXcd g = gram_matrix(omega);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (g + g.adjoint()));
  const Eigen::VectorXd eigs = es.eigenvalues();
  const double lambda_max = std::max(eigs.maxCoeff(), 0.0);
  if (eigs.minCoeff() < -1e-8)
    throw ValidationError("gns: Gram matrix numerically indefinite below -1e-8");
  if (lambda_max <= 0.0)
    throw ValidationError("gns: Gram matrix vanishes");

  std::vector<int> kept;
  for (int i = 0; i < k; ++i)
    if (eigs[i] > null_tol * lambda_max) kept.push_back(i);

  GNSRep rep;
  rep.algebra_ = algebra;
  rep.rep_dim_ = static_cast<int>(kept.size());
  rep.kept_eigenvectors_.resize(k, rep.rep_dim_);
  rep.kept_sqrt_eigenvalues_.resize(rep.rep_dim_);
  for (int c = 0; c < rep.rep_dim_; ++c) {
    rep.kept_eigenvectors_.col(c) = es.eigenvectors().col(kept[c]);
    rep.kept_sqrt_eigenvalues_[c] = std::sqrt(eigs[kept[c]]);
  }

  rep.pi_basis_.reserve(k);
  for (int i = 0; i < k; ++i) rep.pi_basis_.push_back(rep.pi(algebra.basis()[i]));
  for (const auto& gmat : algebra.generators())
    rep.pi_generators_.push_back(rep.pi(gmat));

  const int d = algebra.ambient_dim();
  rep.omega_vec_ = rep.quotient_vector(Eigen::MatrixXcd::Identity(d, d));
  return rep;
}

Eigen::VectorXcd GNSRep::quotient_vector(const Eigen::MatrixXcd& a) const {
  const Eigen::VectorXcd c = algebra_.coordinates(a);
  return kept_sqrt_eigenvalues_.cast<complexd>().asDiagonal() *
         (kept_eigenvectors_.adjoint() * c);
}

Eigen::MatrixXcd GNSRep::pi(const Eigen::MatrixXcd& a) const {
  const Eigen::MatrixXcd m = algebra_.left_multiplication(a);
  const Eigen::MatrixXcd projected =
      kept_eigenvectors_.adjoint() * m * kept_eigenvectors_;
  Eigen::MatrixXcd p(rep_dim_, rep_dim_);
  for (int r = 0; r < rep_dim_; ++r)
    for (int c = 0; c < rep_dim_; ++c)
      p(r, c) = projected(r, c) * kept_sqrt_eigenvalues_[r] /
                kept_sqrt_eigenvalues_[c];
  return p;
}

int commutant_dimension(const GNSRep& rep) {
  const auto& mats =
      rep.pi_generators().empty() ? rep.pi_basis() : rep.pi_generators();
  const int r = rep.rep_dim();
  if (r == 0) return 0;
  const int r2 = r * r;

  // Stacked operator T -> (T pi(g) - pi(g) T)_g on column-major vec(T):
  // each block is pi(g)^T (x) id - id (x) pi(g).
  Eigen::MatrixXcd stack(static_cast<Eigen::Index>(mats.size()) * r2, r2);
  Eigen::Index row0 = 0;
  for (const auto& p : mats) {
    for (int jc = 0; jc < r; ++jc)      // T column index
      for (int ic = 0; ic < r; ++ic) {  // T row index
        const Eigen::Index col = jc * r + ic;
        for (int jr = 0; jr < r; ++jr)
          for (int ir = 0; ir < r; ++ir) {
            const Eigen::Index rowi = row0 + jr * r + ir;
            complexd v = 0.0;
            if (ir == ic) v += p(jc, jr);  // (P^T (x) id)
            if (jr == jc) v -= p(ir, ic);  // (id (x) P)
            stack(rowi, col) = v;
          }
      }
    row0 += r2;
  }

  // Singular values of the stack via its R factor, then count the null ones.
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stack);
  const Eigen::MatrixXcd r_factor =
      qr.matrixQR().topRows(r2).triangularView<Eigen::Upper>();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(r_factor);
  const Eigen::VectorXd sv = svd.singularValues();
  const double sv_max = sv.size() ? sv[0] : 0.0;
  if (sv_max == 0.0) return r2;
  int null_count = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] <= tol::commutant_rank * sv_max) ++null_count;
  return null_count;
}

bool is_pure_via_gns(const MatrixStarAlgebra& algebra, const StateFunctional& omega,
                     double null_tol) {
  return commutant_dimension(gns(algebra, omega, null_tol)) == 1;
}

}  // namespace statekit::gns
