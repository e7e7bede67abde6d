#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something structurally invalid (vertex id out of range,
// mismatched dimensions, non-bijective permutation, ...).
class InputError : public Error {
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

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

// Two engines disagreed on a count or a triangle listing. Always a bug.
class CrossValidationError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace tricount
