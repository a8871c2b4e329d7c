#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands over different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Division by zero, or an element with no inverse (a reducible modulus).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class ReducibleModulus : public Error {
 public:
  using Error::Error;
};

// The requested operation is not available over this field.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when the genus formulas cannot be applied to an input pair.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Always a defect in the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rhg
