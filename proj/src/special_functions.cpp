#include "fpj/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fpj/errors.hpp"

namespace fpj {
namespace {

constexpr double kLanczosG = 607.0 / 128.0;

// Godfrey's coefficients for g = 607/128.
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;
constexpr double kDirectGammaLimit = 50.0;
constexpr double kBetaLogThreshold = 20.0;
constexpr double kExactBetaOrder = 30.0;

[[noreturn]] void throw_pole(const char* fn, Complex z) {
  std::ostringstream os;
  os << fn << ": argument (" << z.real() << ", " << z.imag() << ") is a pole";
  throw PoleError(os.str());
}

// log Gamma(z) for Re z >= 1/2.
Complex log_gamma_right(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex sum = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    sum += kLanczosCoeffs[k] / (zm1 + static_cast<double>(k));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z), stable for large |Im z| where sin itself overflows.
Complex log_sin_pi(Complex z) {
  if (std::abs(z.imag()) < 30.0) {
    return std::log(sin_pi(z));
  }
  if (z.imag() < 0.0) {
    return std::conj(log_sin_pi(std::conj(z)));
  }
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| tiny here.
  const Complex i_pi_z = Complex(0.0, std::numbers::pi) * z;
  const Complex small = std::exp(2.0 * i_pi_z);
  return -i_pi_z + std::log(Complex(0.0, 0.5)) + std::log(1.0 - small);
}

}  // namespace

bool near_nonpositive_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol || z.real() > tol) {
    return false;
  }
  return std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex sin_pi(Complex z) {
  const double n = std::round(z.real());
  const double r = z.real() - n;
  const double y = std::numbers::pi * z.imag();
  double s = std::sin(std::numbers::pi * r);
  double c = std::cos(std::numbers::pi * r);
  if (r == 0.0) {
    s = 0.0;
    c = 1.0;
  }
  Complex value(s * std::cosh(y), c * std::sinh(y));
  if (std::fmod(std::abs(n), 2.0) == 1.0) {
    value = -value;
  }
  return value;
}

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw_pole("log_gamma", z);
  }
  if (z.real() >= 0.5) {
    return log_gamma_right(z);
  }
  return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Complex complex_gamma(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw_pole("complex_gamma", z);
  }
  if (std::abs(z) > kDirectGammaLimit) {
    return std::exp(log_gamma(z));
  }
  if (z.real() >= 0.5) {
    return std::exp(log_gamma_right(z));
  }
  return std::numbers::pi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
}

Complex reciprocal_gamma(Complex z) {
  if (z.real() >= 0.5) {
    return std::exp(-log_gamma_right(z));
  }
  const Complex s = sin_pi(z);
  if (s == Complex(0.0, 0.0)) {
    return {0.0, 0.0};
  }
  if (std::abs(z) > kDirectGammaLimit) {
    return std::exp(log_sin_pi(z) + log_gamma_right(1.0 - z) - std::log(std::numbers::pi));
  }
  return s * std::exp(log_gamma_right(1.0 - z)) / std::numbers::pi;
}

Complex pochhammer(Complex a, std::size_t n) {
  Complex result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    result *= a + static_cast<double>(k);
  }
  return result;
}

Complex beta_fp(Complex a, Complex b) {
  if (near_nonpositive_integer(a)) {
    throw_pole("beta_fp", a);
  }
  if (near_nonpositive_integer(b)) {
    throw_pole("beta_fp", b);
  }
  // B(z, m) = (m-1)! / (z)_m for a small positive integer m
  auto integer_order = [](Complex z) {
    return z.imag() == 0.0 && z.real() >= 1.0 && z.real() <= kExactBetaOrder &&
           z.real() == std::round(z.real());
  };
  if (integer_order(b) || integer_order(a)) {
    const Complex z = integer_order(b) ? a : b;
    const auto m = static_cast<std::size_t>(integer_order(b) ? b.real() : a.real());
    Complex ratio = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      ratio *= (k == 0 ? 1.0 : static_cast<double>(k)) / (z + static_cast<double>(k));
    }
    return ratio;
  }
  const Complex s = a + b;
  const Complex rg = reciprocal_gamma(s);
  if (rg == Complex(0.0, 0.0)) {
    return {0.0, 0.0};
  }
  const double largest = std::max({std::abs(a), std::abs(b), std::abs(s)});
  if (largest > kBetaLogThreshold) {
    if (near_nonpositive_integer(s)) {
      // Tiny but nonzero 1/Gamma(s); the log path would reject s as a pole.
      return std::exp(log_gamma(a) + log_gamma(b)) * rg;
    }
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(s));
  }
  return complex_gamma(a) * complex_gamma(b) * rg;
}

}  // namespace fpj
