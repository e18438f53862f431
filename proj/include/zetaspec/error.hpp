#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetaspec {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (t < 0, limit < 2, ...).
class DomainError : public Error {
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

class OrderingError : public Error {
 public:
  using Error::Error;
};

// The zero scan found a different number of sign changes than the counting function predicts.
class MissedZeroError : public Error {
 public:
  MissedZeroError(std::size_t found, long expected, const std::string& what)
      : Error(what), found_(found), expected_(expected) {}
  std::size_t found() const noexcept { return found_; }
  long expected() const noexcept { return expected_; }

 private:
  std::size_t found_;
  long expected_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetaspec
