#pragma once

#include <stdexcept>

namespace orlicz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (t <= 0, p < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this kind of input (e.g. M_Phi of an infinite Young function).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A series or constant that is infinite for the requested parameters.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis of a check does not hold on the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No admissible k0 (or an infinite Young-function value inside the window).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace orlicz
