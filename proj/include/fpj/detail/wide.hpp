#pragma once

// 100-digit complex arithmetic used behind the double-precision API wherever a
// power-basis sum cancels heavily (Jacobi coefficients, Gram entries, Beta
// sums). Results are narrowed to double before they leave the library.

#include <complex>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "fpj/polynomial.hpp"

namespace fpj {
namespace detail {

using WideFloat = boost::multiprecision::cpp_bin_float<100>;
using WideReal = boost::multiprecision::number<WideFloat, boost::multiprecision::et_off>;
using WideComplex = boost::multiprecision::number<boost::multiprecision::complex_adaptor<WideFloat>,
                                                  boost::multiprecision::et_off>;

/// Largest total power-basis degree whose Beta sum keeps about 15 correct
/// digits at this precision (coefficients grow roughly like 5.83^degree).
inline constexpr std::size_t kWideDegreeBudget = 110;

using WidePoly = BasicPoly<WideComplex>;

}  // namespace detail

template <>
struct TrimTolerance<detail::WideComplex> {
  static double value() { return 1e-90; }
};

namespace detail {

inline WideComplex widen(std::complex<double> z) { return WideComplex(z.real(), z.imag()); }

inline std::complex<double> narrow(const WideComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline WidePoly widen(const DensePoly& p) {
  std::vector<WideComplex> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(widen(v));
  return WidePoly(std::move(c));
}

inline DensePoly narrow(const WidePoly& p) {
  std::vector<std::complex<double>> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(narrow(v));
  return DensePoly(std::move(c));
}

}  // namespace detail

}  // namespace fpj
