#pragma once

#include <stdexcept>
#include <string>

namespace asf {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not line up (apply, compose, pairing, concatenation).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Construction data violates a type invariant (NaN/Inf entries, empty
/// coordinate lists, exponents below one, negative tolerances).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The operand is too small for the requested construction.
class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

/// Matrix inversion failed: singular, ill-conditioned below the reciprocal
/// condition threshold, or the inverse residual check did not hold.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An exact operator norm was requested at an exponent that has no closed
/// form; only p in {1, 2, inf} are supported exactly.
class UnsupportedExact : public Error {
 public:
  using Error::Error;
};

/// A tight scaling of zero was requested; tightness requires lambda != 0.
class ZeroLambda : public Error {
 public:
  using Error::Error;
};

/// The operation requires an invertible frame operator and the system's is
/// not.
class NotAnASF : public Error {
 public:
  using Error::Error;
};

}  // namespace asf
