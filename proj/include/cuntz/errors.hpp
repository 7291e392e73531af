#pragma once

#include <stdexcept>
#include <string>

namespace cuntz {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class RankMismatch : public Error {
 public:
  RankMismatch(int lhs, int rhs)
      : Error("rank mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

// Precondition violations on indices, levels, sizes and shapes.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised when an element leaves the balanced (weight-0) subalgebra where
// positivity and the matrix picture are available.
class OutOfBalancedScope : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cuntz
