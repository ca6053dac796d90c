#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace fpj {

/// Relative threshold (against the largest coefficient magnitude) below which
/// a trailing coefficient is dropped. Specialised for extended precision.
template <typename Scalar>
struct TrimTolerance {
  static double value() { return 1e-14; }
};

/// Dense polynomial in the power basis; coefficient k multiplies x^k.
///
/// Always kept in canonical form: the highest stored coefficient is nonzero
/// (relative to TrimTolerance) unless the polynomial is zero, which is stored
/// as the single coefficient 0. Hence degree() == coeffs().size() - 1.
template <typename Scalar>
class BasicPoly {
 public:
  using value_type = Scalar;

  BasicPoly() : coeffs_{Scalar(0)} {}
  explicit BasicPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  BasicPoly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static BasicPoly monomial(std::size_t k, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return BasicPoly(std::move(v));
  }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Scalar(0); }
  Scalar leading() const { return coeffs_.back(); }

  Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

  /// Horner evaluation.
  template <typename X>
  auto operator()(const X& x) const {
    using R = decltype(Scalar{} * x);
    R acc = R(coeffs_.back());
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
      acc = acc * x + R(coeffs_[k]);
    }
    return acc;
  }

  BasicPoly& operator+=(const BasicPoly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    trim();
    return *this;
  }

  BasicPoly& operator-=(const BasicPoly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
    trim();
    return *this;
  }

  BasicPoly& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly p, const BasicPoly& q) { return p += q; }
  friend BasicPoly operator-(BasicPoly p, const BasicPoly& q) { return p -= q; }
  friend BasicPoly operator*(BasicPoly p, const Scalar& s) { return p *= s; }
  friend BasicPoly operator*(const Scalar& s, BasicPoly p) { return p *= s; }
  friend BasicPoly operator-(BasicPoly p) { return p *= Scalar(-1); }

  friend BasicPoly operator*(const BasicPoly& p, const BasicPoly& q) {
    std::vector<Scalar> out(p.coeffs_.size() + q.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        out[i + j] += p.coeffs_[i] * q.coeffs_[j];
      }
    }
    return BasicPoly(std::move(out));
  }

  friend bool operator==(const BasicPoly&, const BasicPoly&) = default;

 private:
  void trim() {
    if (coeffs_.empty()) {
      coeffs_.push_back(Scalar(0));
      return;
    }
    using std::abs;
    double largest = 0.0;
    for (const auto& c : coeffs_) largest = std::max(largest, static_cast<double>(abs(c)));
    const double cut = TrimTolerance<Scalar>::value() * largest;
    while (coeffs_.size() > 1 && static_cast<double>(abs(coeffs_.back())) <= cut) {
      coeffs_.pop_back();
    }
    if (coeffs_.size() == 1 && static_cast<double>(abs(coeffs_[0])) == 0.0) {
      coeffs_[0] = Scalar(0);
    }
  }

  std::vector<Scalar> coeffs_;
};

using DensePoly = BasicPoly<std::complex<double>>;

/// k-th derivative; the zero polynomial once `order` exceeds the degree.
template <typename Scalar>
BasicPoly<Scalar> derivative(const BasicPoly<Scalar>& p, std::size_t order = 1) {
  const auto& c = p.coeffs();
  if (order > p.degree()) return BasicPoly<Scalar>();
  std::vector<Scalar> out(c.size() - order, Scalar(0));
  for (std::size_t k = order; k < c.size(); ++k) {
    double factor = 1.0;
    for (std::size_t j = 0; j < order; ++j) factor *= static_cast<double>(k - j);
    out[k - order] = c[k] * Scalar(factor);
  }
  return BasicPoly<Scalar>(std::move(out));
}

/// Polynomial in t = x - shift, i.e. the Taylor coefficients of p at `shift`.
template <typename Scalar>
BasicPoly<Scalar> taylor_shift(const BasicPoly<Scalar>& p, const Scalar& shift) {
  // Repeated synthetic division.
  std::vector<Scalar> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) {
      c[k - 1] += shift * c[k];
    }
  }
  return BasicPoly<Scalar>(std::move(c));
}

}  // namespace fpj
