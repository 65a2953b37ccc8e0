#pragma once

#include <stdexcept>
#include <string>

namespace cyclogab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (non-prime p, bad shape, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two values built over different cyclotomic fields were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The support pattern does not satisfy the intersection condition.
class ConditionViolated : public Error {
 public:
  using Error::Error;
};

/// Every random draw of the construction failed.
class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

/// A result that theory guarantees was not obtained; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclogab
