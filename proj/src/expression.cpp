#include "fpj/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fpj/errors.hpp"

namespace fpj {
namespace {

using Node = Expression::Node;
using Kind = Expression::Kind;

std::unique_ptr<Node> leaf(Kind kind, Complex value = {}) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->value = value;
  return n;
}

std::unique_ptr<Node> branch(Kind kind, std::unique_ptr<Node> lhs, std::unique_ptr<Node> rhs = {}) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Length of the decimal number starting at src[pos], or 0.
std::size_t scan_number(std::string_view src, std::size_t pos) {
  std::size_t i = pos;
  std::size_t digits = 0;
  while (i < src.size() && is_digit(src[i])) ++i, ++digits;
  if (i < src.size() && src[i] == '.') {
    ++i;
    while (i < src.size() && is_digit(src[i])) ++i, ++digits;
  }
  if (digits == 0) return 0;
  if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
    if (j < src.size() && is_digit(src[j])) {
      while (j < src.size() && is_digit(src[j])) ++j;
      i = j;
    }
  }
  return i - pos;
}

double to_double(std::string_view text) {
  return std::strtod(std::string(text).c_str(), nullptr);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::unique_ptr<Node> parse() {
    skip_space();
    if (pos_ == src_.size()) fail({"expression"}, "empty expression");
    auto root = expr();
    skip_space();
    if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"}, "unexpected character");
    return root;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    std::string msg = what + " at offset " + std::to_string(pos_) + "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += ", ";
      msg += expected[i];
    }
    throw ParseError(pos_, std::move(expected), msg);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::unique_ptr<Node> expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = branch(Kind::add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = branch(Kind::sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = branch(Kind::mul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = branch(Kind::div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> unary() {
    if (accept('-')) return branch(Kind::neg, unary());
    return power();
  }

  std::unique_ptr<Node> power() {
    auto base = primary();
    while (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ == start) fail({"nonnegative integer"}, "exponent must be a nonnegative integer literal");
      unsigned long e = 0;
      const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, e);
      if (ec != std::errc{} || ptr != src_.data() + pos_) {
        pos_ = start;
        fail({"nonnegative integer"}, "exponent out of range");
      }
      auto node = branch(Kind::power, std::move(base));
      node->exponent = e;
      base = std::move(node);
    }
    return base;
  }

  std::unique_ptr<Node> primary() {
    skip_space();
    if (pos_ == src_.size()) fail({"number", "'x'", "'i'", "'('", "function"}, "unexpected end of input");
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) fail({"')'"}, "unbalanced parenthesis");
      return inner;
    }
    if (const std::size_t len = scan_number(src_, pos_); len > 0) {
      const double v = to_double(src_.substr(pos_, len));
      pos_ += len;
      if (pos_ < src_.size() && src_[pos_] == 'i' &&
          !(pos_ + 1 < src_.size() && is_alpha(src_[pos_ + 1]))) {
        ++pos_;
        return leaf(Kind::constant, Complex(0.0, v));
      }
      return leaf(Kind::constant, Complex(v, 0.0));
    }
    if (is_alpha(src_[pos_])) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_alpha(src_[pos_])) ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == "x") return leaf(Kind::variable);
      if (name == "i") return leaf(Kind::constant, Complex(0.0, 1.0));
      Kind kind;
      if (name == "exp") {
        kind = Kind::exp;
      } else if (name == "sin") {
        kind = Kind::sin;
      } else if (name == "cos") {
        kind = Kind::cos;
      } else if (name == "sinh") {
        kind = Kind::sinh;
      } else if (name == "cosh") {
        kind = Kind::cosh;
      } else {
        pos_ = start;
        fail({"'x'", "'i'", "exp", "sin", "cos", "sinh", "cosh"}, "unknown identifier '" + std::string(name) + "'");
      }
      if (!accept('(')) fail({"'('"}, "function name must be followed by '('");
      auto arg = expr();
      if (!accept(')')) fail({"')'"}, "unbalanced parenthesis");
      return branch(kind, std::move(arg));
    }
    fail({"number", "'x'", "'i'", "'('", "function"}, "unexpected character");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

Complex integer_power(Complex base, unsigned long e) {
  Complex result(1.0, 0.0);
  while (e) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Complex eval(const Node& n, Complex x) {
  switch (n.kind) {
    case Kind::constant: return n.value;
    case Kind::variable: return x;
    case Kind::add: return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Kind::sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Kind::mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Kind::div: {
      const Complex d = eval(*n.rhs, x);
      if (d == Complex(0.0, 0.0)) {
        throw EvaluationFailure("division by zero at x = (" + std::to_string(x.real()) + ", " +
                                std::to_string(x.imag()) + ")");
      }
      return eval(*n.lhs, x) / d;
    }
    case Kind::neg: return -eval(*n.lhs, x);
    case Kind::power: return integer_power(eval(*n.lhs, x), n.exponent);
    case Kind::exp: return std::exp(eval(*n.lhs, x));
    case Kind::sin: return std::sin(eval(*n.lhs, x));
    case Kind::cos: return std::cos(eval(*n.lhs, x));
    case Kind::sinh: return std::sinh(eval(*n.lhs, x));
    case Kind::cosh: return std::cosh(eval(*n.lhs, x));
  }
  return {};
}

}  // namespace

Complex Expression::operator()(Complex x) const {
  const Complex v = eval(*root_, x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw EvaluationFailure("expression is not finite at x = (" + std::to_string(x.real()) + ", " +
                            std::to_string(x.imag()) + ")");
  }
  return v;
}

Expression parse_expression(std::string_view source) { return Expression(Parser(source).parse()); }

Complex parse_complex(std::string_view src) {
  std::size_t pos = 0;
  auto fail = [&](std::vector<std::string> expected, const std::string& what) {
    throw ParseError(pos, std::move(expected),
                     "invalid complex literal '" + std::string(src) + "': " + what + " at offset " +
                         std::to_string(pos));
  };
  // One signed component; sets imaginary when it ends in 'i'.
  auto component = [&](bool& imaginary) -> double {
    double sign = 1.0;
    if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
      if (src[pos] == '-') sign = -1.0;
      ++pos;
    }
    double v = 1.0;
    const std::size_t len = scan_number(src, pos);
    if (len > 0) {
      v = to_double(src.substr(pos, len));
      pos += len;
    }
    imaginary = pos < src.size() && src[pos] == 'i';
    if (imaginary) {
      ++pos;
    } else if (len == 0) {
      fail({"number", "'i'"}, "expected a number");
    }
    return sign * v;
  };

  if (src.empty()) fail({"number", "'i'"}, "empty literal");
  bool imaginary = false;
  const double first = component(imaginary);
  if (pos == src.size()) return imaginary ? Complex(0.0, first) : Complex(first, 0.0);
  if (imaginary || (src[pos] != '+' && src[pos] != '-')) fail({"'+'", "'-'", "end of input"}, "unexpected character");
  bool second_imaginary = false;
  const double second = component(second_imaginary);
  if (!second_imaginary) fail({"'i'"}, "second component must be imaginary");
  if (pos != src.size()) fail({"end of input"}, "trailing characters");
  return {first, second};
}

}  // namespace fpj
