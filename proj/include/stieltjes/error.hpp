#pragma once

#include <stdexcept>
#include <string>

namespace stieltjes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression, rational literal or problem document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic that is undefined in the coefficient algebra (division by zero,
/// non-invertible Wronskian).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// The operator has no fundamental system we can compute or accept.
class UnsupportedOperator : public Error {
 public:
  using Error::Error;
};

/// A query outside the domain of a Green's function or operator form.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace stieltjes
