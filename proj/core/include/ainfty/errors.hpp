#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ainfty {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }

  std::size_t line_;
  std::size_t column_;
};

/// An error that carries the basis element or tuple that exposes it.
class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, std::string witness)
      : Error(witness.empty() ? what : what + " [witness: " + witness + "]"),
        witness_(std::move(witness)) {}

  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class ValidationError : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class InvalidComplex : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class JacobiFailure : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

/// A Hodge identity failed; this is an implementation bug, not bad input.
class InvariantViolation : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class NonUnique : public Error {
 public:
  using Error::Error;
};

class DependentInput : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class NotHarmonic : public Error {
 public:
  using Error::Error;
};

class NotDefined : public Error {
 public:
  using Error::Error;
};

}  // namespace ainfty
