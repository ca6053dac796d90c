#include "fpj/jacobi.hpp"

#include <cmath>
#include <sstream>

#include "fpj/errors.hpp"
#include "fpj/hadamard.hpp"

namespace fpj {
namespace {

using detail::WideComplex;
using detail::WidePoly;

std::string describe(Complex a, Complex b) {
  std::ostringstream os;
  os << "alpha = (" << a.real() << ", " << a.imag() << "), beta = (" << b.real() << ", "
     << b.imag() << ")";
  return os.str();
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw DegreeCapExceeded(n, cap);
}

// Row n of Pascal's triangle.
std::vector<WideComplex> binomial_row(std::size_t n) {
  std::vector<WideComplex> row(n + 1, WideComplex(1));
  for (std::size_t k = 1; k < n; ++k) {
    row[k] = row[k - 1] * WideComplex(static_cast<double>(n - k + 1)) /
             WideComplex(static_cast<double>(k));
  }
  return row;
}

// y (y-1) ... (y-k+1)
WideComplex falling(const WideComplex& y, std::size_t k) {
  WideComplex r(1);
  for (std::size_t i = 0; i < k; ++i) r *= y - WideComplex(static_cast<double>(i));
  return r;
}

// Classical recurrence coefficients A_n, B_n, C_n for n >= 1, any scalar type.
template <typename T>
struct ClassicalCoeffs {
  T a, b, c;
};

template <typename T>
ClassicalCoeffs<T> classical_coeffs(const T& alpha, const T& beta, std::size_t n) {
  const T s = alpha + beta;
  const T nn = T(static_cast<double>(n));
  const T d1 = nn + s + T(1);
  const T d2 = T(2) * nn + s;
  using std::abs;
  if (static_cast<double>(abs(d1)) <= kPoleTolerance ||
      static_cast<double>(abs(d2)) <= kPoleTolerance) {
    throw RecurrenceBreakdown("three-term recurrence denominator vanishes at n = " +
                              std::to_string(n));
  }
  const T np1 = nn + T(1);
  const T a = (d2 + T(1)) * (d2 + T(2)) / (T(2) * np1 * d1);
  const T b = (alpha * alpha - beta * beta) * (d2 + T(1)) / (T(2) * np1 * d1 * d2);
  const T c = (nn + alpha) * (nn + beta) * (d2 + T(2)) / (np1 * d1 * d2);
  return {a, b, c};
}

WidePoly first_degree(const WideComplex& alpha, const WideComplex& beta) {
  return WidePoly{alpha + WideComplex(1), -(alpha + beta + WideComplex(2))};
}

}  // namespace

JacobiParams::JacobiParams(Complex alpha, Complex beta, ParamMode mode)
    : alpha_(alpha), beta_(beta), mode_(mode) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) ||
      !std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
    throw InvalidParameters("non-finite Jacobi parameters");
  }
  if (near_nonpositive_integer(alpha + 1.0) || near_nonpositive_integer(beta + 1.0)) {
    throw InvalidParameters("alpha and beta must avoid -1, -2, ...: " + describe(alpha, beta));
  }
  if (near_nonpositive_integer(alpha + beta + 2.0)) {
    throw InvalidParameters("alpha + beta must avoid -2, -3, ...: " + describe(alpha, beta));
  }
  if (mode == ParamMode::strict &&
      (near_nonpositive_integer(alpha) || near_nonpositive_integer(beta))) {
    throw InvalidParameters("strict mode excludes alpha = 0 and beta = 0: " +
                            describe(alpha, beta));
  }
}

Complex JacobiParams::weight(double x) const {
  return std::exp(alpha_ * std::log(x) + beta_ * std::log1p(-x));
}

namespace detail {

WidePoly rodrigues_wide(const JacobiParams& params, std::size_t n) {
  const WideComplex alpha = widen(params.alpha());
  const WideComplex beta = widen(params.beta());
  const WideComplex nn(static_cast<double>(n));
  const auto outer = binomial_row(n);

  // d^n/dx^n [x^{n+a} (1-x)^{n+b}] / w
  //   = sum_k C(n,k) (n+a)^{(k)} (-1)^{n-k} (n+b)^{(n-k)} x^{n-k} (1-x)^k
  std::vector<WideComplex> coeffs(n + 1, WideComplex(0));
  for (std::size_t k = 0; k <= n; ++k) {
    WideComplex term = outer[k] * falling(nn + alpha, k) * falling(nn + beta, n - k);
    if ((n - k) % 2 == 1) term = -term;
    const auto inner = binomial_row(k);
    for (std::size_t j = 0; j <= k; ++j) {
      const WideComplex piece = term * inner[j];
      if (j % 2 == 1) {
        coeffs[n - k + j] -= piece;
      } else {
        coeffs[n - k + j] += piece;
      }
    }
  }
  return WidePoly(std::move(coeffs));
}

WidePoly recurrence_wide(const JacobiParams& params, std::size_t n) {
  const WideComplex alpha = widen(params.alpha());
  const WideComplex beta = widen(params.beta());
  WidePoly prev{WideComplex(1)};
  if (n == 0) return prev;
  WidePoly cur = first_degree(alpha, beta);
  const WidePoly x = WidePoly::monomial(1);
  for (std::size_t m = 1; m < n; ++m) {
    const auto k = classical_coeffs(alpha, beta, m);
    const WideComplex mp1(static_cast<double>(m + 1));
    const WideComplex shift = mp1 * (k.a + k.b);
    const WideComplex slope = WideComplex(-2) * mp1 * k.a;
    const WideComplex back = -mp1 * WideComplex(static_cast<double>(m)) * k.c;
    WidePoly next = cur * shift + (x * cur) * slope + prev * back;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

DensePoly jacobi_rodrigues(const JacobiParams& params, std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  return detail::narrow(detail::rodrigues_wide(params, n));
}

DensePoly jacobi_via_recurrence(const JacobiParams& params, std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  return detail::narrow(detail::recurrence_wide(params, n));
}

Complex leading_coefficient(const JacobiParams& params, std::size_t n) {
  const Complex k =
      pochhammer(static_cast<double>(n) + params.alpha() + params.beta() + 1.0, n);
  return n % 2 == 1 ? -k : k;
}

Complex norm_an(const JacobiParams& params, std::size_t n) {
  const Complex a = params.alpha();
  const Complex b = params.beta();
  const Complex s = a + b;
  // a_1 / a_0 = (a+1)(b+1) / (s+3); for k >= 2
  // a_k / a_{k-1} = k (k+a) (k+b) (2k+s-1) / ((k+s) (2k+s+1))
  Complex value = beta_fp(a + 1.0, b + 1.0);
  if (n >= 1) value *= (a + 1.0) * (b + 1.0) / (s + 3.0);
  for (std::size_t k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    value *= kd * (kd + a) * (kd + b) * (2.0 * kd + s - 1.0) / ((kd + s) * (2.0 * kd + s + 1.0));
  }
  return value;
}

DensePoly carlson_rn(const JacobiParams& params, std::size_t n) {
  const double nd = static_cast<double>(n);
  const Complex b = -params.alpha() - nd;
  const Complex bp = -params.beta() - nd;
  const Complex denom = beta_fp(b, bp);
  if (denom == Complex(0.0, 0.0)) {
    throw PoleError("carlson_rn: B(-a-n, -b-n) vanishes (-a-b-2n is a nonpositive integer)");
  }
  // (z - u)^n = sum_j C(n,j) z^{n-j} (-u)^j, integrated termwise against the kernel.
  std::vector<Complex> coeffs(n + 1);
  double binom = 1.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const Complex moment = beta_fp(b + static_cast<double>(j), bp) / denom;
    coeffs[n - j] = (j % 2 == 1 ? -binom : binom) * moment;
    binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
  }
  return DensePoly(std::move(coeffs));
}

RecurrenceStep recurrence_step(const JacobiParams& params, std::size_t n) {
  const auto k = classical_coeffs(params.alpha(), params.beta(), n);
  const double np1 = static_cast<double>(n + 1);
  return {np1 * (k.a + k.b), -2.0 * np1 * k.a, -np1 * static_cast<double>(n) * k.c};
}

JacobiBasis::JacobiBasis(JacobiParams params, std::size_t n_max, std::size_t cap)
    : params_(params), cap_(cap) {
  extend(n_max);
}

void JacobiBasis::extend(std::size_t n_max) {
  check_cap(n_max, cap_);
  if (steps_.empty()) steps_.push_back({});
  for (std::size_t n = polys_.size(); n <= n_max; ++n) {
    wide_.push_back(detail::rodrigues_wide(params_, n));
    polys_.push_back(detail::narrow(wide_.back()));
    norms_.push_back(norm_an(params_, n));
    if (n >= 1 && steps_.size() == n) steps_.push_back(recurrence_step(params_, n));
  }
}

Complex JacobiBasis::gram_entry(std::size_t n, std::size_t k) const {
  return detail::finite_part_poly_weight_wide(params_, wide_.at(n) * wide_.at(k));
}

Complex JacobiBasis::evaluate(std::size_t n, Complex x) const {
  if (n > n_max()) throw DegreeCapExceeded(n, n_max());
  Complex prev = 1.0;
  if (n == 0) return prev;
  Complex cur = (params_.alpha() + 1.0) - (params_.alpha() + params_.beta() + 2.0) * x;
  for (std::size_t m = 1; m < n; ++m) {
    const auto& st = steps_[m];
    const Complex next = (st.s + st.t * x) * cur + st.u * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex JacobiBasis::clenshaw(std::span<const Complex> coeffs, Complex x) const {
  if (coeffs.empty()) return {0.0, 0.0};
  const std::size_t top = coeffs.size() - 1;
  if (top > n_max()) throw DegreeCapExceeded(top, n_max());
  if (top == 0) return coeffs[0];
  Complex b1 = 0.0;  // b_{k+1}
  Complex b2 = 0.0;  // b_{k+2}
  for (std::size_t k = top; k >= 1; --k) {
    Complex bk = coeffs[k];
    if (k + 1 <= top) bk += (steps_[k].s + steps_[k].t * x) * b1;
    if (k + 2 <= top) bk += steps_[k + 1].u * b2;
    b2 = b1;
    b1 = bk;
  }
  const Complex p1 = (params_.alpha() + 1.0) - (params_.alpha() + params_.beta() + 2.0) * x;
  Complex sum = coeffs[0] + b1 * p1;
  if (top >= 2) sum += steps_[1].u * b2;
  return sum;
}

}  // namespace fpj
