#pragma once

#include <stdexcept>
#include <string>

namespace river {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Ambient dimensions or partition lengths disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A literal table was queried outside the window it was read from.
class WindowExceeded : public Error {
 public:
  WindowExceeded(int row, long twist, long column);

  int row() const { return row_; }
  long twist() const { return twist_; }
  long column() const { return column_; }

 private:
  int row_;
  long twist_;
  long column_;
};

/// Text could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// The question cannot be answered from the data available (finite window,
/// missing Hilbert polynomial).
class Undecidable : public Error {
 public:
  using Error::Error;
};

}  // namespace river
