#include "fpj/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fpj/errors.hpp"

namespace fpj {
namespace {

using detail::WideComplex;
using detail::WidePoly;

constexpr double kChebyshevNoise = 1e-14;
constexpr double kFitFloor = 1e-13;
constexpr double kTerminationLevel = 1e-10;
constexpr double kCliffRatio = 1e-8;
constexpr std::size_t kMinFitPoints = 8;
constexpr std::size_t kTailSamples = 65;

// Least-squares slope of ys against xs.
double fitted_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

double chebyshev_decay(const std::vector<Complex>& c) {
  double largest = 0.0;
  for (const auto& v : c) largest = std::max(largest, std::abs(v));
  std::vector<double> xs, ys;
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (std::abs(c[m]) > kChebyshevNoise * largest) {
      xs.push_back(static_cast<double>(m));
      ys.push_back(std::log(std::abs(c[m])));
    }
  }
  if (xs.size() < 2) return std::numeric_limits<double>::infinity();
  const double slope = fitted_slope(xs, ys);
  return slope < 0.0 ? std::exp(-slope) : 1.0;
}

void require_same_params(const JacobiParams& a, const JacobiParams& b) {
  if (a.alpha() != b.alpha() || a.beta() != b.beta()) {
    throw std::invalid_argument("expansion and basis have different Jacobi parameters");
  }
}

}  // namespace

EllipseDomain EllipseDomain::through(Complex z) {
  // focal sum s = (rho + 1/rho) / 2
  const double s = std::max(std::abs(z) + std::abs(z - 1.0), 1.0);
  return EllipseDomain{s + std::sqrt(s * s - 1.0)};
}

ChebyshevModel::ChebyshevModel(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  double largest = 0.0;
  for (const auto& v : coeffs_) largest = std::max(largest, std::abs(v));
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= kChebyshevNoise * largest) {
    coeffs_.pop_back();
  }
  decay_rate_ = chebyshev_decay(coeffs_);
}

Complex ChebyshevModel::operator()(Complex x) const {
  const Complex y = 2.0 * x - 1.0;
  Complex b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    const Complex bk = coeffs_[k] + 2.0 * y * b1 - b2;
    b2 = b1;
    b1 = bk;
  }
  return coeffs_[0] + y * b1 - b2;
}

WidePoly ChebyshevModel::power_basis() const {
  const WidePoly y{WideComplex(-1), WideComplex(2)};
  const WidePoly two_y = y * WideComplex(2);
  WidePoly b1, b2;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    WidePoly bk = two_y * b1 - b2 + WidePoly{detail::widen(coeffs_[k])};
    b2 = std::move(b1);
    b1 = std::move(bk);
  }
  return y * b1 - b2 + WidePoly{detail::widen(coeffs_[0])};
}

EndpointFunction ChebyshevModel::endpoint_function() const {
  const WidePoly wide = power_basis();
  const double inf = std::numeric_limits<double>::infinity();
  auto f = *this;
  return EndpointFunction{[f](double x) { return f(Complex(x, 0.0)); },
                          TaylorPiece{Endpoint::zero, detail::narrow(wide).coeffs(), inf},
                          TaylorPiece{Endpoint::one,
                                      detail::narrow(taylor_shift(wide, WideComplex(1))).coeffs(),
                                      inf}};
}

ChebyshevModel chebyshev_fit(const std::function<Complex(double)>& f, std::size_t degree) {
  if (degree == 0) {
    const Complex v = f(0.5);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationFailure("function is not finite at x = 0.5");
    }
    return ChebyshevModel({v});
  }
  const std::size_t m_count = degree;
  const double md = static_cast<double>(m_count);
  std::vector<Complex> values(m_count + 1);
  for (std::size_t j = 0; j <= m_count; ++j) {
    const double x = 0.5 * (1.0 + std::cos(std::numbers::pi * static_cast<double>(j) / md));
    Complex v;
    try {
      v = f(x);
    } catch (const EvaluationFailure&) {
      throw;
    } catch (const std::exception& e) {
      throw EvaluationFailure(std::string("function evaluation failed: ") + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationFailure("function is not finite at Chebyshev node x = " + std::to_string(x));
    }
    values[j] = v;
  }
  std::vector<Complex> coeffs(m_count + 1);
  for (std::size_t m = 0; m <= m_count; ++m) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j <= m_count; ++j) {
      // cos(pi m j / M) with the product reduced mod 2M for accuracy
      const std::size_t idx = (m * j) % (2 * m_count);
      double w = std::cos(std::numbers::pi * static_cast<double>(idx) / md);
      if (j == 0 || j == m_count) w *= 0.5;
      sum += w * values[j];
    }
    double scale = 2.0 / md;
    if (m == 0 || m == m_count) scale *= 0.5;
    coeffs[m] = scale * sum;
  }
  return ChebyshevModel(std::move(coeffs));
}

namespace detail {

std::vector<Complex> projection(const JacobiBasis& basis, const WidePoly& f, std::size_t n_trunc) {
  if (n_trunc > basis.n_max()) throw DegreeCapExceeded(n_trunc, basis.n_max());
  std::vector<Complex> out(n_trunc + 1);
  for (std::size_t n = 0; n <= n_trunc; ++n) {
    out[n] = finite_part_poly_weight_wide(basis.params(), f * basis.wide_poly(n)) / basis.norm(n);
  }
  return out;
}

double tail_estimate(const JacobiBasis& basis, const std::vector<Complex>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  double sup = 0.0;
  for (std::size_t i = 0; i < kTailSamples; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(kTailSamples - 1);
    sup = std::max(sup, std::abs(basis.evaluate(n, x)));
  }
  return std::abs(coeffs[n]) * sup;
}

WidePoly expansion_polynomial_wide(const std::vector<Complex>& coeffs, const JacobiBasis& basis) {
  WidePoly sum;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    sum += basis.wide_poly(n) * widen(coeffs[n]);
  }
  return sum;
}

}  // namespace detail

JacobiExpansion expansion_coefficients(const JacobiBasis& basis, const ChebyshevModel& model,
                                       std::size_t n_trunc) {
  auto coeffs = detail::projection(basis, model.power_basis(), n_trunc);
  JacobiExpansion out{basis.params(), std::move(coeffs), n_trunc, 0.0, std::nullopt};
  out.tail_estimate = detail::tail_estimate(basis, out.coeffs);
  if (std::isfinite(model.decay_rate()) && model.decay_rate() > 1.0) {
    out.domain = EllipseDomain{model.decay_rate()};
  }
  return out;
}

JacobiExpansion expansion_coefficients(const JacobiBasis& basis, const DensePoly& f,
                                       std::size_t n_trunc) {
  auto coeffs = detail::projection(basis, detail::widen(f), n_trunc);
  JacobiExpansion out{basis.params(), std::move(coeffs), n_trunc, 0.0, std::nullopt};
  out.tail_estimate = detail::tail_estimate(basis, out.coeffs);
  return out;
}

Complex evaluate_expansion(const JacobiExpansion& expansion, const JacobiBasis& basis, Complex x,
                           std::vector<std::string>* warnings) {
  require_same_params(expansion.params, basis.params());
  if (warnings && expansion.domain && !expansion.domain->contains(x)) {
    warnings->push_back("x = (" + std::to_string(x.real()) + ", " + std::to_string(x.imag()) +
                        ") lies outside the estimated ellipse of convergence (rho = " +
                        std::to_string(expansion.domain->rho) + ")");
  }
  return basis.clenshaw(expansion.coeffs, x);
}

DensePoly expansion_polynomial(const JacobiExpansion& expansion, const JacobiBasis& basis) {
  require_same_params(expansion.params, basis.params());
  return detail::narrow(detail::expansion_polynomial_wide(expansion.coeffs, basis));
}

double convergence_estimate(const JacobiExpansion& expansion) {
  const auto& f = expansion.coeffs;
  std::vector<double> e(f.size());
  double scale = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    e[n] = std::abs(f[n]) * std::sqrt(std::abs(norm_an(expansion.params, n)));
    scale = std::max(scale, e[n]);
  }
  const double inf = std::numeric_limits<double>::infinity();
  if (scale == 0.0) return inf;

  std::size_t last = 0;
  for (std::size_t n = 0; n < e.size(); ++n) {
    if (e[n] > kTerminationLevel * scale) last = n;
  }
  if (last + 1 < e.size() && e[last + 1] < kCliffRatio * e[last]) return inf;

  std::vector<double> xs, ys;
  // the leading run above the floor; later isolated points are amplified roundoff
  for (std::size_t n = 1; n < e.size() && e[n] > kFitFloor * scale; ++n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::log(e[n]));
  }
  if (xs.size() < kMinFitPoints) {
    throw InsufficientData("convergence_estimate needs at least 8 coefficients above the noise floor");
  }
  return std::exp(-fitted_slope(xs, ys));
}

}  // namespace fpj
