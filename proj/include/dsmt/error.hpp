#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsmt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Non-finite samples, non-positive mass, inconsistent belief values.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsmt
