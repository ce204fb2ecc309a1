#pragma once

#include <stdexcept>
#include <string>

namespace tgwa {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid scalar operation: division by zero, q used in a plain rational
/// field, inversion of zero.
class ScalarError : public Error {
 public:
  using Error::Error;
};

/// A quantum integer [j]_q vanished where the factorial formula requires it
/// to be invertible.
class RootOfUnityError : public ScalarError {
 public:
  using ScalarError::ScalarError;
};

/// Operands belong to different ring contexts.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Wrong degree: inhomogeneous input, or nonzero degree where zero is required.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Generator or letter index out of range, or i = j where i != j is required.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A matrix fails the generalized Cartan matrix conditions.
class GcmError : public Error {
 public:
  using Error::Error;
};

/// The input is outside the documented scope of a checker (never a verdict).
class UnsupportedShapeError : public Error {
 public:
  using Error::Error;
};

/// Iteration cap reached before a span closed; does not claim non-finiteness.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Two independently verified routes disagree.  Indicates a fault in the
/// implementation, never in the input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Syntax error with source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& message)
      : Error(message), line_(0), column_(0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tgwa
