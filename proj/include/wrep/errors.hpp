#pragma once

#include <stdexcept>
#include <string>

namespace wrep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotRational : Error {
  using Error::Error;
};
struct OrderMismatch : Error {
  using Error::Error;
};
struct BoundExceeded : Error {
  using Error::Error;
};
struct NotAGroup : Error {
  using Error::Error;
};
struct GroupMismatch : Error {
  using Error::Error;
};
struct BasisMismatch : Error {
  using Error::Error;
};
struct DegreeMismatch : Error {
  using Error::Error;
};
struct UnknownType : Error {
  using Error::Error;
};
struct NotWreath : Error {
  using Error::Error;
};
struct NotHomogeneous : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct WindowTooSmall : Error {
  using Error::Error;
};
struct UnknownTheorem : Error {
  using Error::Error;
};
struct DegreeTooSmall : Error {
  using Error::Error;
};

// Group-file parsing failure; carries 1-based line/column of the offending token.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace wrep
