#include "statekit/states.hpp"

#include <algorithm>
#include <cmath>

namespace statekit::states {

namespace {

void require_square(const Eigen::MatrixXcd& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw ValidationError(std::string(who) + ": matrix must be square and nonempty");
}

double hermiticity_residual(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

const Eigen::Matrix2cd& pauli(int k) {
  static const Eigen::Matrix2cd s1 = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd s2 =
      (Eigen::Matrix2cd() << 0, complexd(0, -1), complexd(0, 1), 0).finished();
  static const Eigen::Matrix2cd s3 = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  switch (k) {
    case 1: return s1;
    case 2: return s2;
    default: return s3;
  }
}

// Rotate a global phase so the first entry with modulus > 1e-9 becomes
// real positive; returns the vector unchanged if all entries are tiny.
Eigen::VectorXcd phase_fixed(const Eigen::VectorXcd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > 1e-9) return v * (std::conj(v[i]) / m);
  }
  return v;
}

bool lexicographically_before(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) {
  require_square(entries, "DensityMatrix");
  if (hermiticity_residual(entries) > tol::hermitian)
    throw ValidationError("DensityMatrix: not Hermitian within 1e-12");
  const complexd tr = entries.trace();
  if (std::abs(tr - complexd(1.0, 0.0)) > tol::weight)
    throw ValidationError("DensityMatrix: trace differs from 1 by more than 1e-12");
  entries_ = 0.5 * (entries + entries.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::psd)
    throw ValidationError("DensityMatrix: negative eigenvalue below -1e-12");
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw ValidationError("maximally_mixed: dim must be positive");
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / double(dim));
}

Observable::Observable(Eigen::MatrixXcd entries) {
  require_square(entries, "Observable");
  if (hermiticity_residual(entries) > tol::hermitian)
    throw ValidationError("Observable: not Hermitian within 1e-12");
  entries_ = 0.5 * (entries + entries.adjoint().eval());
}

BlochVector::BlochVector(const Eigen::Vector3d& v) : a(v) {
  if (a.norm() > 1.0 + tol::weight)
    throw ValidationError("BlochVector: |a| exceeds 1 + 1e-12");
}

double expectation(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim())
    throw ValidationError("expectation: dimension mismatch");
  const complexd tr = (rho.matrix() * a.matrix()).trace();
  if (std::abs(tr.imag()) > 1e-10)
    throw NumericalHealthError("expectation: imaginary part above 1e-10");
  return tr.real();
}

double hs_norm(const DensityMatrix& rho) { return rho.matrix().norm(); }

bool is_pure(const DensityMatrix& rho, double tolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("is_pure: tolerance must be positive");
  return hs_norm(rho) >= 1.0 - tolerance;
}

DensityMatrix mix_states(const DensityMatrix& rho1, const DensityMatrix& rho2,
                         double lambda) {
  if (rho1.dim() != rho2.dim())
    throw ValidationError("mix_states: dimension mismatch");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw ValidationError("mix_states: lambda outside [0,1]");
  return DensityMatrix(lambda * rho1.matrix() + (1.0 - lambda) * rho2.matrix());
}

DensityMatrix vector_state(const Eigen::VectorXcd& psi, bool renormalize) {
  const double n = psi.norm();
  if (n == 0.0) throw ValidationError("vector_state: zero vector");
  if (!renormalize && std::abs(n - 1.0) > 1e-10)
    throw ValidationError("vector_state: vector is not normalised within 1e-10");
  const Eigen::VectorXcd u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw ValidationError("bloch_from_density: requires a qubit state");
  Eigen::Vector3d a;
  for (int k = 1; k <= 3; ++k)
    a[k - 1] = (rho.matrix() * pauli(k)).trace().real();
  return BlochVector(a);
}

DensityMatrix density_from_bloch(const BlochVector& b) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (int k = 1; k <= 3; ++k) m += b.a[k - 1] * pauli(k);
  return DensityMatrix(0.5 * m);
}

std::vector<ExtremalComponent> extremal_decomposition(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  const int n = rho.dim();

  std::vector<ExtremalComponent> comps;
  for (int i = n - 1; i >= 0; --i) {  // solver sorts ascending
    const double w = es.eigenvalues()[i];
    if (w <= tol::weight) continue;
    comps.push_back({w, es.eigenvectors().col(i)});
  }

  // Deterministic handling of degenerate eigenspaces: re-orthonormalise in
  // index order, then fix the global phase of every vector.
  constexpr double degeneracy_tol = 1e-10;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Eigen::VectorXcd v = comps[i].psi;
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(comps[j].weight - comps[i].weight) > degeneracy_tol) continue;
      v -= comps[j].psi * (comps[j].psi.adjoint() * v)(0);
    }
    const double nv = v.norm();
    if (nv > 1e-8) v /= nv; else v = comps[i].psi;
    comps[i].psi = phase_fixed(v);
  }

  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
    if (std::abs(x.weight - y.weight) > degeneracy_tol) return x.weight > y.weight;
    return lexicographically_before(x.psi, y.psi);
  });
  return comps;
}

double variance_observable(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim())
    throw ValidationError("variance_observable: dimension mismatch");
  const double first = (rho.matrix() * a.matrix() * a.matrix()).trace().real();
  const double second = expectation(rho, a);
  double v = first - second * second;
  if (v < -tol::weight)
    throw NumericalHealthError("variance_observable: negative beyond -1e-12");
  return std::max(v, 0.0);
}

namespace {

Eigen::Vector2cd bloch_surface_state(double theta, double phi) {
  Eigen::Vector2cd psi;
  psi << std::cos(0.5 * theta),
      std::polar(std::sin(0.5 * theta), phi);
  return psi;
}

double worst_target_error(const std::vector<GapTarget>& targets, double theta,
                          double phi) {
  const Eigen::Vector2cd psi = bloch_surface_state(theta, phi);
  double worst = 0.0;
  for (const auto& t : targets) {
    const double val = (psi.adjoint() * t.observable.matrix() * psi)(0).real();
    worst = std::max(worst, std::abs(val - t.value));
  }
  return worst;
}

// One golden-section pass over [lo, hi] for a unimodal-ish slice.
double golden_refine(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 40; ++it) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double vector_state_gap(const std::vector<GapTarget>& targets, int resolution) {
  if (targets.empty()) throw ValidationError("vector_state_gap: empty target list");
  for (const auto& t : targets)
    if (t.observable.dim() != 2)
      throw ValidationError("vector_state_gap: observables must be 2x2");
  if (resolution < 50)
    throw ValidationError("vector_state_gap: resolution must be at least 50");

  const double pi = std::acos(-1.0);
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double theta = pi * (i + 0.5) / resolution;
    for (int j = 0; j < resolution; ++j) {
      const double phi = 2.0 * pi * j / resolution;
      const double err = worst_target_error(targets, theta, phi);
      if (err < best) {
        best = err;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  const double dtheta = pi / resolution, dphi = 2.0 * pi / resolution;
  for (int pass = 0; pass < 2; ++pass) {
    best_theta = golden_refine(
        [&](double th) { return worst_target_error(targets, th, best_phi); },
        best_theta - dtheta, best_theta + dtheta);
    best_phi = golden_refine(
        [&](double ph) { return worst_target_error(targets, best_theta, ph); },
        best_phi - dphi, best_phi + dphi);
  }
  return std::min(best, worst_target_error(targets, best_theta, best_phi));
}

}  // namespace statekit::states
