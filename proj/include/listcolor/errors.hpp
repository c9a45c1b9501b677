#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace listcolor {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was not met by its caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Desk-scale guard tripped (enumeration or search would be too large).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class NotACertificate : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside the regime a bound formula is stated for.
class RegimeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Text-format error. `line` is 1-based for line-oriented formats; for the
/// expression grammar `offset` holds the 0-based byte offset instead.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset = 0)
      : Error(what), line_(line), offset_(offset) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

}  // namespace listcolor
