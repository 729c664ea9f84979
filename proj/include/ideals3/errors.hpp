#pragma once
#include <stdexcept>
#include <string>

namespace ideals3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeTooLarge : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DependentVectors : Error { using Error::Error; };
struct NotAnIdeal : Error { using Error::Error; };
struct InvalidParameters : Error { using Error::Error; };

// Raised when an enumeration disagrees with a structural fact that must hold.
// Reaching one of these means a bug, so the CLI maps them to exit code 3.
struct InconsistencyDetected : Error { using Error::Error; };
struct BoundViolation : InconsistencyDetected { using InconsistencyDetected::InconsistencyDetected; };

struct ParseError : Error {
  int line = 0, column = 0;
  ParseError(const std::string& what, int l = 0, int c = 0) : Error(what), line(l), column(c) {}
};

}  // namespace ideals3
