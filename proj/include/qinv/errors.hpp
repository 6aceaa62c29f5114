#pragma once

#include <stdexcept>
#include <string>

namespace qinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed link text. line/column are 1-based; column 0 means "whole line".
struct ParseError : Error {
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

// An evaluation engine refused a diagram that exceeds its configured cap.
struct CapacityError : Error {
  using Error::Error;
};

// A normalization base vanished at the requested level.
struct DegenerateLevelError : Error {
  using Error::Error;
};

// A special framed link violates the framing / linking conditions.
struct ValidationError : Error {
  using Error::Error;
};

// Caller broke a precondition (level mismatch, out-of-range component, ...).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace qinv
