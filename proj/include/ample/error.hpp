#pragma once

#include <stdexcept>
#include <string>

namespace ample {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Depth or table-size guard tripped.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ample
