#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fpj/detail/wide.hpp"
#include "fpj/polynomial.hpp"
#include "fpj/special_functions.hpp"

namespace fpj {

/// Default maximum degree of a Jacobi basis.
inline constexpr std::size_t kDefaultDegreeCap = 40;

enum class ParamMode {
  /// alpha = 0 or beta = 0 allowed (the weight is regular at that endpoint).
  permissive,
  /// Additionally rejects alpha = 0 and beta = 0.
  strict,
};

/// Exponents of the weight w(x) = x^alpha (1-x)^beta on [0,1].
///
/// Admissible when alpha, beta are not in {-1, -2, ...} and alpha + beta is
/// not in {-2, -3, ...} (all within kPoleTolerance). Construction throws
/// InvalidParameters otherwise.
class JacobiParams {
 public:
  JacobiParams(Complex alpha, Complex beta, ParamMode mode = ParamMode::permissive);

  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }
  ParamMode mode() const noexcept { return mode_; }

  /// Re alpha > -1 and Re beta > -1: every weighted integral converges.
  bool classical() const noexcept { return alpha_.real() > -1.0 && beta_.real() > -1.0; }

  /// x^alpha (1-x)^beta for 0 < x < 1.
  Complex weight(double x) const;

 private:
  Complex alpha_;
  Complex beta_;
  ParamMode mode_;
};

/// p_n = w^{-1} d^n/dx^n [ (x(1-x))^n w ] via the Leibniz expansion, with the
/// weight removed by exponent shifts. Leading coefficient (-1)^n (n+a+b+1)_n.
DensePoly jacobi_rodrigues(const JacobiParams& params, std::size_t n,
                           std::size_t cap = kDefaultDegreeCap);

/// n! P_n^{(a,b)}(1-2x) from the classical three-term recurrence. Equal to
/// jacobi_rodrigues; kept as an independent construction.
DensePoly jacobi_via_recurrence(const JacobiParams& params, std::size_t n,
                                std::size_t cap = kDefaultDegreeCap);

/// (-1)^n (n+a+b+1)_n.
Complex leading_coefficient(const JacobiParams& params, std::size_t n);

/// a_n = n! Gamma(n+a+1) Gamma(n+b+1) / ((2n+a+b+1) Gamma(n+a+b+1)), the
/// finite-part value of the integral of p_n^2 w. a_0 = beta_fp(a+1, b+1).
Complex norm_an(const JacobiParams& params, std::size_t n);

/// Carlson's R_n(z) = R_n(-a-n, -b-n; z-1, z), expanded binomially with each
/// moment a continued Beta value. Proportional to p_n.
DensePoly carlson_rn(const JacobiParams& params, std::size_t n);

/// Coefficients of p_{n+1} = (s_n + t_n x) p_n + u_n p_{n-1}, valid for n >= 1.
struct RecurrenceStep {
  Complex s;
  Complex t;
  Complex u;
};

RecurrenceStep recurrence_step(const JacobiParams& params, std::size_t n);

/// Jacobi polynomials p_0..p_N for one parameter pair, with their norms.
///
/// Extension is single-writer; once built, all const members are safe to call
/// concurrently.
class JacobiBasis {
 public:
  JacobiBasis(JacobiParams params, std::size_t n_max, std::size_t cap = kDefaultDegreeCap);

  const JacobiParams& params() const noexcept { return params_; }
  std::size_t n_max() const noexcept { return polys_.size() - 1; }
  std::size_t cap() const noexcept { return cap_; }

  const DensePoly& poly(std::size_t n) const { return polys_.at(n); }
  const detail::WidePoly& wide_poly(std::size_t n) const { return wide_.at(n); }
  Complex norm(std::size_t n) const { return norms_.at(n); }

  /// Grows the basis to degree n_max (no-op if already there).
  void extend(std::size_t n_max);

  /// Finite-part integral of p_n p_k w, as the exact Beta sum of the product.
  Complex gram_entry(std::size_t n, std::size_t k) const;

  /// p_n(x) by forward recurrence.
  Complex evaluate(std::size_t n, Complex x) const;

  /// sum_n coeffs[n] p_n(x) by Clenshaw's backward recurrence.
  Complex clenshaw(std::span<const Complex> coeffs, Complex x) const;

 private:
  JacobiParams params_;
  std::size_t cap_;
  std::vector<detail::WidePoly> wide_;
  std::vector<DensePoly> polys_;
  std::vector<Complex> norms_;
  std::vector<RecurrenceStep> steps_;  // steps_[n] builds p_{n+1}; steps_[0] unused
};

namespace detail {
WidePoly rodrigues_wide(const JacobiParams& params, std::size_t n);
WidePoly recurrence_wide(const JacobiParams& params, std::size_t n);
}  // namespace detail

}  // namespace fpj
