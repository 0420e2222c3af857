#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbonkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatchError : public Error {
 public:
  ContextMismatchError() : Error("operands live in different cyclotomic contexts") {}
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero in cyclotomic field") {}
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class BoundaryMismatchError : public Error {
 public:
  using Error::Error;
};

/// A quantum integer [k] vanished where an inverse was needed.
class QuantumOrderError : public Error {
 public:
  using Error::Error;
};

class InconsistentCharacterError : public Error {
 public:
  using Error::Error;
};

class NegativityError : public Error {
 public:
  using Error::Error;
};

class TruncationOverflowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NonScalarError : public Error {
 public:
  using Error::Error;
};

class NonRepresentablePhaseError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ribbonkit
