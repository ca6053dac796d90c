#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "fpj/detail/wide.hpp"
#include "fpj/jacobi.hpp"
#include "fpj/polynomial.hpp"

namespace fpj {

enum class Endpoint { zero, one };

/// Local Taylor data of a function at x = 0 or x = 1.
///
/// At Endpoint::zero coefficient k multiplies x^k; at Endpoint::one it
/// multiplies (x - 1)^k.
struct TaylorPiece {
  Endpoint center = Endpoint::zero;
  std::vector<Complex> coeffs;
  double radius = std::numeric_limits<double>::infinity();
};

/// Validates radius > 0 and that the coefficients do not grow faster than the
/// claimed radius allows (loose heuristic: |c_k| (radius/4)^k stays below 1e12
/// times the largest of the first four such terms, or of 1). Throws
/// std::invalid_argument.
TaylorPiece make_taylor_piece(Endpoint center, std::vector<Complex> coeffs, double radius);

/// H-int_0^x t^{alpha-1} f(t) dt = x^alpha sum_n c_n x^n / (n + alpha), for a
/// piece centred at 0.
///
/// Summation stops once a geometric tail bound falls below 1e-13 of the
/// partial sum (all coefficients are used for an infinite radius). Throws
/// PoleError for alpha in {0, -1, ...} and NonConvergent for x >= radius.
Complex finite_part_series(Complex alpha, const TaylorPiece& at_zero, double x);

/// H-int_0^1 p(x) x^alpha (1-x)^beta dx = sum_k p_k B(alpha+k+1, beta+1).
Complex finite_part_poly_weight(const JacobiParams& params, const DensePoly& p);

/// A function known both pointwise and through its Taylor data at 0 and 1.
struct EndpointFunction {
  std::function<Complex(double)> value;
  TaylorPiece at_zero;
  TaylorPiece at_one;

  static EndpointFunction from_polynomial(const DensePoly& p);
};

struct SplitOptions {
  double split = 0.5;
  /// Number of Taylor terms subtracted at each endpoint; default_subtraction_order when empty.
  std::optional<std::size_t> order;
  double abs_tolerance = 1e-12;
};

/// ceil(max(-Re alpha, -Re beta, 0)) + 2.
std::size_t default_subtraction_order(const JacobiParams& params);

/// H-int_0^1 f w by splitting at an interior point: near each endpoint the
/// first m Taylor terms of f times the regular weight factor are integrated in
/// closed form (finite part), and the bounded remainder by adaptive
/// Gauss-Kronrod quadrature.
///
/// Independent of the Beta-sum route; used to cross-check it.
Complex finite_part_split(const JacobiParams& params, const EndpointFunction& f,
                          const SplitOptions& options = {});

namespace detail {
Complex finite_part_poly_weight_wide(const JacobiParams& params, const WidePoly& p);
}  // namespace detail

}  // namespace fpj
