#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromabound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DIMACS or serialized input. `line()` is 1-based; 0 means end of input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Invalid generator or configuration parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is undefined for this input (no edges, W vanishing on every edge).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (non-Hermitian, non-unitary, not traceless, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double off_norm)
      : Error(what), off_norm_(off_norm) {}
  /// Off-diagonal Frobenius norm reached before giving up.
  double off_norm() const { return off_norm_; }

 private:
  double off_norm_;
};

/// A coloring is not proper; carries one monochromatic edge.
class ColoringError : public Error {
 public:
  ColoringError(std::size_t u, std::size_t v, const std::string& what)
      : Error(what), u_(u), v_(v) {}
  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

}  // namespace chromabound
