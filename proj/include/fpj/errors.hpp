#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on (or within tolerance of) a pole of Gamma or of a
/// finite-part continuation.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Jacobi / hypergeometric parameters violate the admissibility conditions.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(std::size_t requested, std::size_t cap)
      : Error("degree " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

class RecurrenceBreakdown : public Error {
 public:
  using Error::Error;
};

/// A series was requested outside its disc of convergence.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// A user-supplied function returned a non-finite value (or divided by zero).
class EvaluationFailure : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// c coincides with an eigenvalue lambda_n of the hypergeometric operator.
class ResonantEigenvalue : public Error {
 public:
  explicit ResonantEigenvalue(std::size_t n)
      : Error("c is resonant with eigenvalue lambda_" + std::to_string(n)), n_(n) {}

  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace fpj
