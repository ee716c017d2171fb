#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad index, crossing
/// input where noncrossing is required, mismatched ground sets, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Enumeration requested beyond the configured size limit.
class SizeLimitError : public Error {
public:
  SizeLimitError(int n, int limit)
      : Error("size limit exceeded: n = " + std::to_string(n) +
              " is larger than the configured limit " + std::to_string(limit)),
        n_(n), limit_(limit) {}

  int n() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

private:
  int n_;
  int limit_;
};

/// Raised when an internal consistency assertion fails. Always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace skein
