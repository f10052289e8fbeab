#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotbound {

// Malformed or out-of-contract user input. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in one of the text formats; position is a 0-based byte offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A desk-scale guard refused the computation (crossing limit, search ceiling).
// Not a mathematical failure. Exit code 2.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug. Exit code 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace knotbound
