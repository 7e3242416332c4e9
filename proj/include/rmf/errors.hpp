#pragma once

#include <stdexcept>
#include <string>

namespace rmf {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid values or geometry (empty sets, degenerate pairs, bad dimensions).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input files (CSV rows, pairing lines).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failures (unreadable or unwritable paths).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmf
