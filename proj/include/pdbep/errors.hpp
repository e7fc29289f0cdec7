#pragma once

#include <stdexcept>
#include <string>

namespace pdbep {

// Bad instance text; `line` is 1-based within the parsed stream.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// Caller handed an argument outside a routine's contract.
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance shape does not match what a solver needs (e.g. not a tree).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver declines an instance it could not handle honestly
// (e.g. exhaustive search over too many edges).
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant went sideways; always a bug, never user error.
struct SolverError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pdbep
