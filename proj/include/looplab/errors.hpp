#pragma once

#include <stdexcept>
#include <string>

namespace looplab {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A truncated numerical procedure did not reach its stated tolerance.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// The loop (or constant matrix) has no factorization on the top stratum.
class NotInTopStratum : public Error {
 public:
  using Error::Error;
};

class InvalidLevel : public Error {
 public:
  using Error::Error;
};

/// Argument hits a pole of a closed-form expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonReducedSequence : public Error {
 public:
  using Error::Error;
};

/// Too many samples of an experiment failed to produce an observable.
class ExperimentDegenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace looplab
