#pragma once

#include <stdexcept>
#include <string>

namespace rolelogic {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed source text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Identifier rules, undeclared or clashing predicate names.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside its domain (e.g. a sugar node reached the
// evaluator, a depth-2 operand reached the spatial eliminator).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rolelogic
