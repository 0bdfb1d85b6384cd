#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSequenceError : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class CycleError : public Error { using Error::Error; };
class JoinConditionError : public Error { using Error::Error; };
class ChainError : public Error { using Error::Error; };
class DomRanError : public Error { using Error::Error; };
class NotGradedError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };

/// Malformed input text; `line` is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cobweb
