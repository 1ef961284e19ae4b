#pragma once

#include <stdexcept>
#include <string>

namespace detsum {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in GF(2^k)") {}
};

// Malformed or out-of-contract input (bad partition, self-loop, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The field GF(2^k) has too few elements for the requested interpolation.
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

// Instance exceeds the size an exponential routine is willing to handle.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace detsum
