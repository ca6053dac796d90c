#include "fpj/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fpj/errors.hpp"

namespace fpj {
namespace {

using detail::WideComplex;
using detail::WidePoly;

constexpr double kAutoStopLevel = 1e-13;
constexpr std::size_t kAutoStopRun = 3;

template <typename Scalar>
BasicPoly<Scalar> apply_operator(const Scalar& a, const Scalar& b, const Scalar& c,
                                 const BasicPoly<Scalar>& u) {
  const BasicPoly<Scalar> q{Scalar(0), Scalar(1), Scalar(-1)};
  const BasicPoly<Scalar> drift{a, -(a + b)};
  return q * derivative(u, 2) + drift * derivative(u, 1) + u * c;
}

double relative_gap(Complex c, Complex lambda) {
  return std::abs(c - lambda) / (1.0 + std::abs(lambda));
}

}  // namespace

JacobiParams HypergeomProblem::jacobi_params() const {
  if (near_nonpositive_integer(a) || near_nonpositive_integer(b)) {
    throw InvalidParameters("a and b must avoid 0, -1, -2, ...");
  }
  if (near_nonpositive_integer(a + b)) {
    throw InvalidParameters("a + b must avoid 0, -1, -2, ...");
  }
  return JacobiParams(a - 1.0, b - 1.0, mode);
}

Complex lambda_n(Complex a, Complex b, std::size_t n) {
  const double nd = static_cast<double>(n);
  return nd * (nd + a + b - 1.0);
}

std::vector<std::size_t> check_resonance(Complex a, Complex b, Complex c, std::size_t n_max,
                                         double tol) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Complex lambda = lambda_n(a, b, n);
    if (std::abs(c - lambda) <= tol * (1.0 + std::abs(lambda))) out.push_back(n);
  }
  return out;
}

HypergeomSolution solve(const HypergeomProblem& problem, std::optional<std::size_t> n_max,
                        const SolveOptions& options) {
  const JacobiParams params = problem.jacobi_params();
  if (n_max && *n_max > options.cap) throw DegreeCapExceeded(*n_max, options.cap);

  const std::size_t limit = n_max.value_or(options.cap);
  auto basis = std::make_shared<JacobiBasis>(params, n_max ? *n_max : std::min<std::size_t>(limit, 8),
                                             options.cap);
  const WidePoly g_wide = problem.g.power_basis();

  std::vector<Complex> g_coeffs;
  if (n_max) {
    g_coeffs = detail::projection(*basis, g_wide, *n_max);
  } else {
    double largest = 0.0;
    std::size_t run = 0;
    for (std::size_t n = 0; n <= limit; ++n) {
      if (n > basis->n_max()) basis->extend(std::min(limit, 2 * n));
      const Complex gn =
          detail::finite_part_poly_weight_wide(params, g_wide * basis->wide_poly(n)) /
          basis->norm(n);
      g_coeffs.push_back(gn);
      const double size = std::abs(gn) * std::sqrt(std::abs(basis->norm(n)));
      largest = std::max(largest, size);
      run = (size < kAutoStopLevel * largest) ? run + 1 : 0;
      if (run >= kAutoStopRun) break;
    }
  }
  const std::size_t n_trunc = g_coeffs.size() - 1;

  double largest = 0.0;
  std::vector<double> forcing(n_trunc + 1);
  for (std::size_t n = 0; n <= n_trunc; ++n) {
    forcing[n] = std::abs(g_coeffs[n]) * std::sqrt(std::abs(basis->norm(n)));
    largest = std::max(largest, forcing[n]);
  }
  const auto resonant =
      check_resonance(problem.a, problem.b, problem.c, n_trunc, options.resonance_tolerance);
  for (std::size_t n : resonant) {
    if (forcing[n] > options.compatibility_tolerance * largest) throw ResonantEigenvalue(n);
  }

  double margin = std::numeric_limits<double>::infinity();
  std::vector<std::string> warnings;
  std::vector<Complex> u(n_trunc + 1);
  for (std::size_t n = 0; n <= n_trunc; ++n) {
    const Complex lambda = lambda_n(problem.a, problem.b, n);
    const Complex gap = problem.c - lambda;
    if (std::find(resonant.begin(), resonant.end(), n) != resonant.end()) {
      warnings.push_back("c = lambda_" + std::to_string(n) + " but g_" + std::to_string(n) +
                         " vanishes; u_" + std::to_string(n) +
                         " set to 0 (any multiple of p_" + std::to_string(n) +
                         " may be added)");
      u[n] = 0.0;
      continue;
    }
    margin = std::min(margin, std::abs(gap));
    if (relative_gap(problem.c, lambda) <= options.warning_tolerance) {
      std::ostringstream msg;
      msg << "c is within " << options.warning_tolerance << " (relative) of lambda_" << n
          << "; g_" << n << " is amplified by " << 1.0 / std::abs(gap);
      warnings.push_back(msg.str());
    }
    u[n] = g_coeffs[n] / gap;
  }

  JacobiExpansion expansion{params, std::move(u), n_trunc, 0.0, std::nullopt};
  expansion.tail_estimate = detail::tail_estimate(*basis, expansion.coeffs);
  if (std::isfinite(problem.g.decay_rate()) && problem.g.decay_rate() > 1.0) {
    expansion.domain = EllipseDomain{problem.g.decay_rate()};
  }
  HypergeomSolution sol{std::move(expansion), {}, margin, resonant, std::move(warnings), nullptr};
  sol.g_coeffs = std::move(g_coeffs);
  sol.basis = std::move(basis);
  return sol;
}

DensePoly hypergeometric_operator(Complex a, Complex b, Complex c, const DensePoly& u) {
  return apply_operator(a, b, c, u);
}

double residual(const HypergeomProblem& problem, const HypergeomSolution& solution,
                std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("residual: grid is empty");
  const WidePoly u = detail::expansion_polynomial_wide(solution.expansion.coeffs, *solution.basis);
  const WidePoly r = apply_operator(detail::widen(problem.a), detail::widen(problem.b),
                                    detail::widen(problem.c), u) -
                     problem.g.power_basis();
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(detail::narrow(r(WideComplex(x)))));
  return worst;
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) return {0.0};
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return out;
}

}  // namespace fpj
