#pragma once

#include <complex>
#include <cstddef>

namespace fpj {

using Complex = std::complex<double>;

/// Absolute distance (on both components) under which an argument is treated
/// as a nonpositive integer.
inline constexpr double kPoleTolerance = 1e-10;

/// True when z is within `tol` of one of 0, -1, -2, ...
bool near_nonpositive_integer(Complex z, double tol = kPoleTolerance);

/// sin(pi z) with exact argument reduction on the real part, so integer z
/// gives exactly zero.
Complex sin_pi(Complex z);

/// Gamma function for complex z.
///
/// Lanczos approximation (g = 607/128, 15 terms) on Re z >= 1/2 and the
/// reflection formula elsewhere; for |z| > 50 the value is formed as
/// exp(log_gamma(z)) so intermediate powers never overflow. Throws PoleError
/// near nonpositive integers.
Complex complex_gamma(Complex z);

/// A branch of log Gamma(z). The imaginary part is not continuous across the
/// negative real axis; callers only exponentiate sums of these values.
Complex log_gamma(Complex z);

/// 1/Gamma(z). Entire; exactly zero at nonpositive integers.
Complex reciprocal_gamma(Complex z);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Complex pochhammer(Complex a, std::size_t n);

/// Beta function continued to all a, b off the poles of Gamma:
/// Gamma(a) Gamma(b) / Gamma(a+b). For Re a, Re b > 0 this is the Beta
/// integral; otherwise it is the Hadamard finite part of that integral.
/// Vanishes when a+b is a nonpositive integer. Computed in log space when any
/// of |a|, |b|, |a+b| exceeds 20.
Complex beta_fp(Complex a, Complex b);

}  // namespace fpj
