#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dissrho {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (index range, missing edge, bad parameter).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; `offset()` is the byte position where decoding failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  /// The description without the offset suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace dissrho
