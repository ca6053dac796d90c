#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fpj/polynomial.hpp"
#include "fpj/special_functions.hpp"

namespace fpj::test {

inline constexpr std::uint64_t kSeed = 20240611;

inline double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got);
}

inline double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

/// Largest coefficientwise difference, relative to the larger polynomial.
inline double poly_rel_diff(const DensePoly& p, const DensePoly& q) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  double diff = 0.0;
  for (std::size_t k = 0; k < n; ++k) diff = std::max(diff, std::abs(p[k] - q[k]));
  const double scale = std::max(max_abs(p.coeffs()), max_abs(q.coeffs()));
  return scale > 0.0 ? diff / scale : diff;
}

class Random {
 public:
  explicit Random(std::uint64_t seed = kSeed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  Complex complex_in_box(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }
  /// Uniform in the disc of radius r about `center`.
  Complex in_disc(Complex center, double r) {
    const double rho = r * std::sqrt(uniform(0.0, 1.0));
    const double t = uniform(0.0, 2.0 * 3.141592653589793);
    return center + std::polar(rho, t);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  DensePoly poly(std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    for (auto& v : c) v = complex_in_box(1.0);
    return DensePoly(std::move(c));
  }

 private:
  std::mt19937_64 engine_;
};

/// Ordinary integral of f(x) x^alpha (1-x)^beta over [0,1] (Re alpha, Re beta > -1).
inline Complex weighted_quadrature(const std::function<Complex(double)>& f, Complex alpha, Complex beta) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto part = [&](bool imag) {
    // xc is the signed distance to the nearer endpoint
    return integrator.integrate([&](double x, double xc) {
      const double left = x < 0.5 ? -xc : x;
      const double right = x < 0.5 ? 1.0 - x : xc;
      const Complex v = f(x) * std::pow(left, alpha) * std::pow(right, beta);
      return imag ? v.imag() : v.real();
    }, 0.0, 1.0);
  };
  return {part(false), part(true)};
}

/// Parameter pairs used across suites: classical, Re alpha < -1, complex.
inline const std::vector<std::pair<Complex, Complex>>& parameter_pairs() {
  static const std::vector<std::pair<Complex, Complex>> pairs = {
      {{0.0, 0.0}, {0.0, 0.0}},   {{-0.5, 0.0}, {-0.5, 0.0}}, {{2.3, 0.0}, {1.7, 0.0}},
      {{-1.5, 0.3}, {-2.4, 0.0}}, {{0.5, 0.0}, {-1.7, 0.2}},  {{1.3, 0.0}, {-1.6, 0.0}},
      {{-2.7, -0.4}, {0.8, 0.5}},
  };
  return pairs;
}

}  // namespace fpj::test
