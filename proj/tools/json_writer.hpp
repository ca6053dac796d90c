#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fpj::cli {

/// Ordered JSON value with deterministic output: floats as %.17g, non-finite
/// floats as the strings "inf", "-inf" and "nan".
class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() : value_(nullptr) {}
  Json(std::nullptr_t) : value_(nullptr) {}
  Json(bool b) : value_(b) {}
  Json(double d) : value_(d) {}
  Json(std::int64_t i) : value_(i) {}
  Json(std::size_t i) : value_(static_cast<std::int64_t>(i)) {}
  Json(int i) : value_(static_cast<std::int64_t>(i)) {}
  Json(std::string s) : value_(std::move(s)) {}
  Json(const char* s) : value_(std::string(s)) {}
  Json(std::complex<double> z) : value_(Array{Json(z.real()), Json(z.imag())}) {}
  Json(Array a) : value_(std::move(a)) {}
  Json(Object o) : value_(std::move(o)) {}

  static Json array() { return Json(Array{}); }
  static Json object() { return Json(Object{}); }

  template <typename T>
  static Json list(const std::vector<T>& items) {
    Array a;
    a.reserve(items.size());
    for (const auto& v : items) a.emplace_back(v);
    return Json(std::move(a));
  }

  /// Appends a key to an object (keys keep insertion order).
  Json& set(std::string key, Json v);
  Json& push(Json v);

  /// Two-space indented text with a trailing newline. Arrays of scalars stay
  /// on one line.
  std::string dump() const;

 private:
  void write(std::string& out, int indent) const;
  bool is_scalar() const;
  bool is_flat_array() const;

  std::variant<std::nullptr_t, bool, double, std::int64_t, std::string, Array, Object> value_;
};

/// %.17g, or "inf" / "-inf" / "nan".
std::string format_double(double d);

}  // namespace fpj::cli
