#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stokes {

// Bad user-supplied data: malformed text, violated preconditions, inconsistent
// invariants. The CLI maps these to exit code 1.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that could not be tokenized or parsed. `position` is a 0-based byte
// offset into the input.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t position, const std::string& what)
      : InvalidInput("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal invariant failed. This is always a bug in this library, never
// the caller's fault.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stokes
