#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally valid input that violates a data-model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A referenced author, paper or node does not exist.
class UnknownEntityError : public Error {
 public:
  using Error::Error;
};

}  // namespace kindex
