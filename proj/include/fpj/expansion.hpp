#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpj/detail/wide.hpp"
#include "fpj/hadamard.hpp"
#include "fpj/jacobi.hpp"

namespace fpj {

/// Interior of the ellipse with foci 0 and 1 whose focal-distance sum is
/// (rho + 1/rho) / 2, i.e. the [0,1] image of the Bernstein ellipse E_rho.
struct EllipseDomain {
  double rho;

  /// The ellipse passing through z (rho = +inf is not representable here;
  /// points on [0,1] give rho = 1).
  static EllipseDomain through(Complex z);

  bool contains(Complex z) const { return std::abs(z) + std::abs(z - 1.0) < focal_sum(); }
  double focal_sum() const { return (rho + 1.0 / rho) / 2.0; }
  double semi_major() const { return (rho + 1.0 / rho) / 4.0; }
  double semi_minor() const { return (rho - 1.0 / rho) / 4.0; }
};

/// Interpolant of a function in shifted Chebyshev polynomials T_m(2x - 1).
class ChebyshevModel {
 public:
  /// Trailing coefficients below 1e-14 of the largest are dropped.
  explicit ChebyshevModel(std::vector<Complex> coeffs);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  /// Least-squares geometric decay rate of the coefficients (+inf when there
  /// are fewer than two significant coefficients).
  double decay_rate() const noexcept { return decay_rate_; }

  Complex operator()(Complex x) const;

  /// The same polynomial in the power basis, in extended precision.
  detail::WidePoly power_basis() const;

  /// Function and Taylor data (exact, since the model is a polynomial) for the
  /// split-path integrator.
  EndpointFunction endpoint_function() const;

 private:
  std::vector<Complex> coeffs_;
  double decay_rate_;
};

/// Interpolates f at the M+1 Chebyshev-Lobatto points mapped to [0,1].
/// Throws EvaluationFailure if f is not finite at a node.
ChebyshevModel chebyshev_fit(const std::function<Complex(double)>& f, std::size_t degree);

/// Sampling degree used when the caller does not choose one: 2 n + 8.
inline std::size_t default_sampling_degree(std::size_t n_trunc) { return 2 * n_trunc + 8; }

/// Truncated Jacobi series sum_{n <= n_trunc} coeffs[n] p_n.
struct JacobiExpansion {
  JacobiParams params;
  std::vector<Complex> coeffs;
  std::size_t n_trunc = 0;
  /// |f_N| sup_{[0,1]} |p_N|. A heuristic size of the first omitted term,
  /// not a bound.
  double tail_estimate = 0.0;
  /// Convergence region estimated from the input's Chebyshev decay, if known.
  std::optional<EllipseDomain> domain;
};

/// f_n = a_n^{-1} H-int_0^1 f p_n w for n <= n_trunc, each integral an exact
/// Beta sum over the power-basis form of the Chebyshev model.
JacobiExpansion expansion_coefficients(const JacobiBasis& basis, const ChebyshevModel& model,
                                       std::size_t n_trunc);
JacobiExpansion expansion_coefficients(const JacobiBasis& basis, const DensePoly& f,
                                       std::size_t n_trunc);

/// Sum of the truncated series at x (Clenshaw). Appends a warning when x lies
/// outside the expansion's estimated ellipse of convergence.
Complex evaluate_expansion(const JacobiExpansion& expansion, const JacobiBasis& basis, Complex x,
                           std::vector<std::string>* warnings = nullptr);

/// The truncated series as a power-basis polynomial.
DensePoly expansion_polynomial(const JacobiExpansion& expansion, const JacobiBasis& basis);

/// Geometric decay rate rho-hat = exp(-slope) of log(|f_n| sqrt|a_n|) against
/// n, fitted by least squares over the leading run of coefficients above
/// 1e-13 of the largest.
/// Returns +inf when the sequence terminates (polynomial input). Throws
/// InsufficientData when fewer than 8 coefficients are usable.
double convergence_estimate(const JacobiExpansion& expansion);

namespace detail {
std::vector<Complex> projection(const JacobiBasis& basis, const WidePoly& f, std::size_t n_trunc);
double tail_estimate(const JacobiBasis& basis, const std::vector<Complex>& coeffs);
WidePoly expansion_polynomial_wide(const std::vector<Complex>& coeffs, const JacobiBasis& basis);
}  // namespace detail

}  // namespace fpj
