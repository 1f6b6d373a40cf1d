#ifndef VLOC_ERRORS_HPP
#define VLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vloc {

// Base of all vloc exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver-side failures (CLI exit code 2).
struct SolverError : Error {
  using Error::Error;
};

// Stationary state is not unique (Liouvillian nullspace dimension > 1).
struct DegenerateSteadyState : SolverError {
  using SolverError::SolverError;
};

// The trace-constrained linear system could not be solved.
struct SingularSystem : SolverError {
  using SolverError::SolverError;
};

// RK4 step too coarse: trace drift exceeded the tolerance.
struct StepTooLarge : SolverError {
  using SolverError::SolverError;
};

// Closed-form denominator at a resonance pole.
struct DenominatorUnderflow : SolverError {
  using SolverError::SolverError;
};

// Map-analysis misuse.
struct EmptyQuadrant : Error {
  using Error::Error;
};
struct GridNotSymmetric : Error {
  using Error::Error;
};

// Configuration errors (CLI exit code 1).
struct ConfigError : Error {
  using Error::Error;
};
struct ParseError : ConfigError {
  ParseError(int line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};
struct UnknownKey : ConfigError {
  UnknownKey(int line, const std::string& key)
      : ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'"),
        line(line) {}
  int line;
};
struct RangeError : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace vloc

#endif
