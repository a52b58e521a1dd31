#pragma once

#include <stdexcept>
#include <string>

namespace qhyper {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value is undefined at the requested point: division by zero, a vanishing
/// Pochhammer denominator, a singular difference quotient. Samplers treat this
/// as "resample".
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller passed arguments outside an operation's contract (e.g. |q| >= 1 for
/// an infinite product, arity mismatch).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A rational numerator or denominator grew beyond the configured bit limit.
class MagnitudeError : public Error {
 public:
  using Error::Error;
};

/// A numeric series did not meet its stopping rule within the term budget, or
/// is divergent by construction.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhyper
