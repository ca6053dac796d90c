#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fpj/special_functions.hpp"

namespace fpj {

/// Syntax tree of an analytic expression in one variable x.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)*
///   primary := number ['i'] | 'i' | 'x' | func '(' expr ')' | '(' expr ')'
///   func    := exp | sin | cos | sinh | cosh
///
/// Exponents are nonnegative integer literals, so every expression is entire
/// apart from the zeros of its denominators.
class Expression {
 public:
  enum class Kind { constant, variable, add, sub, mul, div, neg, power, exp, sin, cos, sinh, cosh };

  struct Node {
    Kind kind;
    Complex value{};          // constant
    unsigned long exponent{};  // power
    std::unique_ptr<Node> lhs;
    std::unique_ptr<Node> rhs;
  };

  explicit Expression(std::unique_ptr<Node> root) : root_(std::move(root)) {}

  /// Throws EvaluationFailure on division by zero or a non-finite result.
  Complex operator()(Complex x) const;

  const Node& root() const noexcept { return *root_; }

 private:
  std::shared_ptr<const Node> root_;
};

/// Throws ParseError carrying the byte offset of the failure and the tokens
/// that would have been accepted there.
Expression parse_expression(std::string_view source);

/// A complex literal: "2", "-1.5", "3.5i", "-i", "1+2i", "-1.5e-3-0.3i".
/// Whitespace is not allowed inside the literal. Throws ParseError.
Complex parse_complex(std::string_view source);

}  // namespace fpj
