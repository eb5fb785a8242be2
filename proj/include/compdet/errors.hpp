#pragma once

#include <stdexcept>
#include <string>

namespace compdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid (n, k), index, or flag value supplied by a caller.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A composition was looked up in a set that does not contain it.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of an operation (e.g. shifting a zero part).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Polynomials from different variable contexts were combined, or an
/// evaluation was missing a variable.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Matrix too large for the requested backend.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An invariant that can only fail through a library bug (e.g. an exact
/// division that left a remainder).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace compdet
