#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umbilic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("syntax error at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of an operation does not hold for the given input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed: an implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace umbilic
