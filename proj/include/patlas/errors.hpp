#pragma once

#include <stdexcept>
#include <string>

namespace patlas {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or input-validity violation (bad point, mismatched ring, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The computation needs something the exact arithmetic cannot represent,
/// e.g. a second quadratic extension.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in a presentation file; carries a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace patlas
