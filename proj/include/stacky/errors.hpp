#pragma once

#include <stdexcept>
#include <string>

namespace stacky {

/// Base of every error raised by the library.  The CLI maps subclasses of
/// ValidationError to exit code 2 and subclasses of BoundError to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class BoundError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OrderBoundExceeded : public BoundError {
 public:
  using BoundError::BoundError;
};

class BudgetExceeded : public BoundError {
 public:
  using BoundError::BoundError;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& detail)
      : ValidationError("parse error at position " + std::to_string(position) + ": " + detail +
                        " (expected " + expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class NotCentral : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotCoprime : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RequiresOpenCurve : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotHomomorphism : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EquivarianceFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PeifferFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CompatibilityFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotASection : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotAPgl2Subgroup : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace stacky
