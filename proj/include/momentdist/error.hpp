#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momentdist {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something the operation cannot accept (bad sizes, empty
/// inputs, invalid vertex ids, infeasible generator parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A well-formed edge that the graph model forbids (self-loops).
class RejectedEdgeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

/// A metric that needs a positive definite argument got a (numerically)
/// singular one.
class SingularMatrixError : public NumericError {
 public:
  SingularMatrixError(double smallest_eigenvalue, const std::string& what)
      : NumericError(what), smallest_eigenvalue_(smallest_eigenvalue) {}

  double smallest_eigenvalue() const noexcept { return smallest_eigenvalue_; }

 private:
  double smallest_eigenvalue_;
};

class ConvergenceError : public NumericError {
 public:
  ConvergenceError(std::size_t iterations, double residual, const std::string& what)
      : NumericError(what), iterations_(iterations), residual_(residual) {}

  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

/// Inconsistent or out-of-range configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace momentdist
