#include "fpj/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fpj/errors.hpp"
#include "fpj/special_functions.hpp"

namespace fpj {
namespace {

constexpr double kSeriesTailTolerance = 1e-13;
// Remainder series are summed directly while t stays below this fraction of
// the radius of convergence.
constexpr double kSeriesZone = 0.75;
constexpr std::size_t kSeriesTerms = 160;
constexpr unsigned kQuadratureDepth = 15;
constexpr double kRoundoffFloor = 1e-14;

Complex power(double t, Complex e) { return std::exp(e * std::log(t)); }

bool nonnegative_integer(Complex z) {
  return std::abs(z.imag()) == 0.0 && z.real() >= 0.0 && z.real() == std::round(z.real());
}

// Data needed to integrate t^expo (1-t)^other f near t = 0 over [0, length].
struct EndpointIntegrand {
  Complex expo;
  Complex other;
  std::vector<Complex> f_coeffs;  // Taylor coefficients of f in powers of t
  double f_radius;
  std::function<Complex(double)> f_value;  // f at distance t from the endpoint
  double length;
};

Complex endpoint_part(const EndpointIntegrand& in, std::size_t order, double abs_tol) {
  // h(t) = f(t) (1-t)^other; (1-t)^other = sum_j (-other)_j / j! t^j.
  const bool terminating = nonnegative_integer(in.other);
  const double radius = terminating ? in.f_radius : std::min(in.f_radius, 1.0);
  const std::size_t terms = std::max(kSeriesTerms, order + 1);

  std::vector<Complex> binom(terms);
  binom[0] = 1.0;
  for (std::size_t j = 1; j < terms; ++j) {
    binom[j] = binom[j - 1] * (static_cast<double>(j - 1) - in.other) / static_cast<double>(j);
  }
  std::vector<Complex> h(terms, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < std::min(terms, in.f_coeffs.size()); ++i) {
    if (in.f_coeffs[i] == Complex(0.0, 0.0)) continue;
    for (std::size_t j = 0; i + j < terms; ++j) h[i + j] += in.f_coeffs[i] * binom[j];
  }

  TaylorPiece singular{Endpoint::zero, std::vector<Complex>(h.begin(), h.begin() + order),
                       std::numeric_limits<double>::infinity()};
  const Complex closed_form = finite_part_series(in.expo + 1.0, singular, in.length);

  const DensePoly head(std::vector<Complex>(h.begin(), h.begin() + order));
  const DensePoly tail(std::vector<Complex>(h.begin() + order, h.end()));
  const Complex shifted = in.expo + static_cast<double>(order);

  auto remainder = [&](double t) -> Complex {
    if (t <= 0.0) return {0.0, 0.0};
    if (t <= kSeriesZone * radius) {
      return power(t, shifted) * tail(t);
    }
    const Complex hv = in.f_value(t) * power(1.0 - t, in.other);
    return power(t, in.expo) * (hv - head(t));
  };

  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  double error = 0.0;
  double l1 = 0.0;
  (void)GK::integrate(remainder, 0.0, in.length, 0, 0.0, &error, &l1);
  // absolute target, but never below what double rounding of the integrand permits
  const double target = std::max(abs_tol, kRoundoffFloor * l1);
  const double rel = std::clamp(0.5 * target / std::max(l1, 1e-300), kRoundoffFloor, 1e-3);
  const Complex integral =
      GK::integrate(remainder, 0.0, in.length, kQuadratureDepth, rel, &error, &l1);
  if (!(error <= std::max(abs_tol, kRoundoffFloor * l1))) {
    throw QuadratureFailure("finite_part_split: remainder quadrature error " +
                            std::to_string(error) + " exceeds tolerance");
  }
  return closed_form + integral;
}

}  // namespace

TaylorPiece make_taylor_piece(Endpoint center, std::vector<Complex> coeffs, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("Taylor piece radius must be positive");
  if (std::isfinite(radius) && !coeffs.empty()) {
    const double r = radius / 4.0;
    double scale = 1.0;
    double rk = 1.0;
    for (std::size_t k = 0; k < std::min<std::size_t>(4, coeffs.size()); ++k, rk *= r) {
      scale = std::max(scale, std::abs(coeffs[k]) * rk);
    }
    rk = 1.0;
    for (const auto& c : coeffs) {
      if (std::abs(c) * rk > 1e12 * scale) {
        throw std::invalid_argument("Taylor coefficients grow faster than the stated radius");
      }
      rk *= r;
    }
  }
  return TaylorPiece{center, std::move(coeffs), radius};
}

Complex finite_part_series(Complex alpha, const TaylorPiece& piece, double x) {
  if (piece.center != Endpoint::zero) {
    throw std::invalid_argument("finite_part_series expects a piece centred at 0");
  }
  if (near_nonpositive_integer(alpha)) {
    throw PoleError("finite_part_series: exponent is a nonpositive integer");
  }
  if (!(x > 0.0)) throw std::invalid_argument("finite_part_series: x must be positive");
  if (x >= piece.radius) throw NonConvergent("finite_part_series: x outside the disc of convergence");

  const bool finite_radius = std::isfinite(piece.radius);
  const double q = finite_radius ? x / piece.radius : 0.0;
  Complex sum = 0.0;
  double xn = 1.0;
  double bound = 0.0;  // max_k |c_k| radius^k
  double rk = 1.0;
  for (std::size_t n = 0; n < piece.coeffs.size(); ++n) {
    const Complex c = piece.coeffs[n];
    sum += c * xn / (static_cast<double>(n) + alpha);
    if (finite_radius) {
      bound = std::max(bound, std::abs(c) * rk);
      const double np1 = static_cast<double>(n + 1);
      const double tail =
          bound * std::pow(q, np1) / (1.0 - q) / std::max(std::abs(np1 + alpha), 1e-300);
      if (tail < kSeriesTailTolerance * std::abs(sum)) break;
      rk *= piece.radius;
    }
    xn *= x;
  }
  return power(x, alpha) * sum;
}

namespace detail {

Complex finite_part_poly_weight_wide(const JacobiParams& params, const WidePoly& p) {
  // B(a+k+1, b+1) = B(a+1, b+1) (a+1)_k / (a+b+2)_k
  const WideComplex a1 = widen(params.alpha()) + WideComplex(1);
  const WideComplex ab2 = widen(params.alpha()) + widen(params.beta()) + WideComplex(2);
  WideComplex ratio(1);
  WideComplex sum(0);
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    sum += c[k] * ratio;
    const WideComplex kk(static_cast<double>(k));
    ratio *= (a1 + kk) / (ab2 + kk);
  }
  return narrow(sum) * beta_fp(params.alpha() + 1.0, params.beta() + 1.0);
}

}  // namespace detail

Complex finite_part_poly_weight(const JacobiParams& params, const DensePoly& p) {
  return detail::finite_part_poly_weight_wide(params, detail::widen(p));
}

EndpointFunction EndpointFunction::from_polynomial(const DensePoly& p) {
  const detail::WidePoly wide = detail::widen(p);
  const DensePoly at_one = detail::narrow(taylor_shift(wide, detail::WideComplex(1)));
  const double inf = std::numeric_limits<double>::infinity();
  return EndpointFunction{[wide](double x) { return detail::narrow(wide(detail::WideComplex(x))); },
                          TaylorPiece{Endpoint::zero, p.coeffs(), inf},
                          TaylorPiece{Endpoint::one, at_one.coeffs(), inf}};
}

std::size_t default_subtraction_order(const JacobiParams& params) {
  const double worst = std::max({-params.alpha().real(), -params.beta().real(), 0.0});
  return static_cast<std::size_t>(std::ceil(worst)) + 2;
}

Complex finite_part_split(const JacobiParams& params, const EndpointFunction& f,
                          const SplitOptions& options) {
  const double s = options.split;
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("finite_part_split: split must lie in (0,1)");
  if (f.at_zero.center != Endpoint::zero || f.at_one.center != Endpoint::one) {
    throw std::invalid_argument("finite_part_split: Taylor pieces have the wrong centres");
  }
  if (s >= f.at_zero.radius || 1.0 - s >= f.at_one.radius) {
    throw NonConvergent("finite_part_split: split point outside a Taylor disc");
  }
  const double worst = std::max(-params.alpha().real(), -params.beta().real());
  const std::size_t order = options.order.value_or(default_subtraction_order(params));
  if (static_cast<double>(order) < std::ceil(worst) + 1.0) {
    throw InvalidParameters("finite_part_split: subtraction order too low for these exponents");
  }

  // Near 1, substitute tau = 1 - x: f(1 - tau) = sum_j (-1)^j c_j tau^j.
  std::vector<Complex> mirrored = f.at_one.coeffs;
  for (std::size_t j = 1; j < mirrored.size(); j += 2) mirrored[j] = -mirrored[j];

  const EndpointIntegrand left{params.alpha(), params.beta(), f.at_zero.coeffs, f.at_zero.radius,
                               f.value, s};
  const EndpointIntegrand right{params.beta(), params.alpha(), std::move(mirrored),
                                f.at_one.radius, [&f](double tau) { return f.value(1.0 - tau); },
                                1.0 - s};
  return endpoint_part(left, order, options.abs_tolerance) +
         endpoint_part(right, order, options.abs_tolerance);
}

}  // namespace fpj
