#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpj/expansion.hpp"
#include "fpj/jacobi.hpp"

namespace fpj {

/// u'' + (a/x + b/(x-1)) u' + c u / (x(1-x)) = g / (x(1-x)) on a
/// neighbourhood of [0,1].
///
/// a and b must avoid {1, 0, -1, ...} (a = 1 or b = 1 is accepted in permissive
/// mode) and a + b must avoid {0, -1, -2, ...}; equivalently the Jacobi
/// parameters (a-1, b-1) must be admissible.
struct HypergeomProblem {
  Complex a;
  Complex b;
  Complex c;
  ChebyshevModel g;
  ParamMode mode = ParamMode::permissive;

  /// (alpha, beta) = (a - 1, b - 1). Throws InvalidParameters.
  JacobiParams jacobi_params() const;
};

struct SolveOptions {
  /// Relative resonance tolerance: |c - lambda_n| <= tol (1 + |lambda_n|) is an error.
  double resonance_tolerance = 1e-8;
  /// Within this relative distance a near-resonance warning is recorded.
  double warning_tolerance = 1e-4;
  /// A resonant mode is compatible when |g_n| sqrt|a_n| is below this
  /// fraction of the largest such value.
  double compatibility_tolerance = 1e-12;
  std::size_t cap = kDefaultDegreeCap;
};

struct HypergeomSolution {
  /// u_n, in the basis with alpha = a - 1, beta = b - 1.
  JacobiExpansion expansion;
  /// g_n of the inhomogeneity in the same basis.
  std::vector<Complex> g_coeffs;
  /// min of |c - lambda_n| over the non-resonant n <= N.
  double resonance_margin = 0.0;
  /// Resonant n whose forcing g_n vanishes; u_n is set to 0 there.
  std::vector<std::size_t> resonances;
  std::vector<std::string> warnings;
  std::shared_ptr<const JacobiBasis> basis;
};

/// lambda_n = n (n + a + b - 1).
Complex lambda_n(Complex a, Complex b, std::size_t n);

/// Every n <= N with |c - lambda_n| <= tol (1 + |lambda_n|).
std::vector<std::size_t> check_resonance(Complex a, Complex b, Complex c, std::size_t n_max,
                                         double tol = 1e-8);

/// The solution analytic at both 0 and 1, as u_n = g_n / (c - lambda_n).
///
/// With `n_max` empty the truncation is chosen automatically: the series stops
/// once |g_n| sqrt|a_n| falls below 1e-13 of its maximum for three consecutive
/// n (or at the degree cap).
///
/// At a resonant n (c = lambda_n within the resonance tolerance) the equation
/// is solvable only if g_n = 0. If g_n vanishes to the compatibility tolerance
/// the mode is recorded in `resonances`, u_n is set to 0 and a warning notes
/// that the solution is no longer unique; otherwise ResonantEigenvalue(n) is
/// thrown. Throws InvalidParameters when (a, b) are inadmissible.
HypergeomSolution solve(const HypergeomProblem& problem, std::optional<std::size_t> n_max,
                        const SolveOptions& options = {});

/// x(1-x) u'' + (a(1-x) - b x) u' + c u, the operator multiplied through by
/// x(1-x) so that it is regular at both endpoints.
DensePoly hypergeometric_operator(Complex a, Complex b, Complex c, const DensePoly& u);

/// max over the grid of |x(1-x) u'' + (a(1-x) - b x) u' + c u - g(x)|, with
/// the derivatives of the truncated series taken exactly.
double residual(const HypergeomProblem& problem, const HypergeomSolution& solution,
                std::span<const double> grid);

/// `points` equispaced points on [0,1], both ends included.
std::vector<double> uniform_grid(std::size_t points);

}  // namespace fpj
