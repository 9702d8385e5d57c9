#pragma once

#include <stdexcept>
#include <string>

namespace eqschubert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied bad input (out-of-range index, malformed literal, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in different ambient rings or Grassmannians.
class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An operation needing v <= u was handed an incomparable pair.
class NotComparable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Raised by basis expansion when a tuple is not an integral combination
/// of Schubert classes.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

/// A chain-formula result kept a denominator.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqschubert
