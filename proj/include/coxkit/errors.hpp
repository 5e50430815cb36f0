#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad matrix text, invalid word, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A result would leave the enumerated ball; the caller must enlarge the radius.
class OutOfBallError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (element count, braid closure, facet count, ...) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A file could not be written or read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxkit
