#pragma once

#include <stdexcept>

namespace ordex {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elements of two different carriers were mixed in a single operation.
class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

/// A value-level precondition was violated: zero divisor, empty interval,
/// base point out of range, operation unsupported by the carrier, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed element, interval, or family text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordex
