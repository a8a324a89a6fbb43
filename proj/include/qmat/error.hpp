#pragma once

#include <stdexcept>
#include <string>

namespace qmat {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input data: unknown labels, malformed tables, kind mismatches,
/// rejected structures at load time.
struct ValidationError : Error {
  using Error::Error;
};

/// Boundary mismatch between composed or paired structures.
struct BoundaryError : Error {
  using Error::Error;
};

/// A materialized carrier or enumeration would exceed its configured cap.
struct CapError : Error {
  using Error::Error;
};

/// An internal invariant failed. Seeing this means a bug in the library,
/// not in the caller's data.
struct InternalError : Error {
  using Error::Error;
};

/// Parse failure with a source position.
struct ParseError : ValidationError {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg)
      : ValidationError("line " + std::to_string(line_) + ", col " +
                        std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace qmat
