#ifndef STATEKIT_COMMON_HPP
#define STATEKIT_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace statekit {

using complexd = std::complex<double>;

/// Raised when an input violates a documented invariant or precondition
/// (bad normalisation, dimension mismatch, malformed config, ...).
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation detects that its own numerical health is
/// compromised (norm drift, aliasing, boundary spill, under-resolution).
/// The CLI maps this to exit code 3.
class NumericalHealthError : public std::runtime_error {
public:
  explicit NumericalHealthError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
// Single documented epsilon for weight/trace hygiene.
inline constexpr double weight = 1e-12;
// Hermiticity / PSD slack on matrix-valued inputs.
inline constexpr double hermitian = 1e-12;
inline constexpr double psd = 1e-12;
// Default purity band on the Hilbert-Schmidt norm.
inline constexpr double purity = 1e-9;
// Relative null-space threshold for quotient constructions.
inline constexpr double null_space = 1e-10;
// Relative singular-value threshold for commutant rank decisions.
inline constexpr double commutant_rank = 1e-9;
}  // namespace tol

}  // namespace statekit

#endif
