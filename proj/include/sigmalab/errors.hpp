#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigmalab {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed an argument outside an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed tree text. `line()` is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("parse error: line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A family parameter set or degree sequence that no tree can realize.
class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured size cap (vertex count, enumeration order).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigmalab
