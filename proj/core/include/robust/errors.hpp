#ifndef ROBUST_ERRORS_HPP
#define ROBUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace robust {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (RGI/solution/realization/fractional files).
struct ParseError : Error {
  ParseError(const std::string& what, int line, int col)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line;
  int col;
};

/// A structural invariant of an instance or solution is violated
/// (lower bound above upper, disconnected graph, terminal out of range,
/// infeasible solution, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Parameters outside their mathematical domain.
struct DomainError : Error {
  using Error::Error;
};

/// An enumeration cap was exceeded. Oracles never truncate silently.
struct CapError : Error {
  using Error::Error;
};

/// LP solver failures (infeasible, unbounded, pivot cap).
struct SolveError : Error {
  using Error::Error;
};

}  // namespace robust

#endif
