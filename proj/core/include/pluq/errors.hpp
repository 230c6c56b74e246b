#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pluq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when a derived decomposition is requested from factors whose
// pivoting strategy does not reveal the rank profile matrix.
class NotRevealingError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pluq
