#pragma once

#include <stdexcept>
#include <string>

namespace ssr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content; the message carries the offending line number.
class ParseError : public IoError {
 public:
  using IoError::IoError;
};

/// An iterative kernel failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace ssr
