#pragma once

#include <stdexcept>
#include <string>

namespace dem {

/// Base class of every error raised by the solver library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A thermodynamic or volume-fraction state outside its admissible region.
class InvalidStateError : public Error {
public:
  using Error::Error;
};

/// A numerical procedure (Riemann solver, Newton iteration) failed.
class SolverError : public Error {
public:
  using Error::Error;
};

/// Malformed or inconsistent user configuration.
class ConfigError : public Error {
public:
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based source line, or 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

private:
  int line_;
};

} // namespace dem
