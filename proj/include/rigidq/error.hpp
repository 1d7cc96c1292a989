#pragma once

#include <stdexcept>
#include <string>

namespace rigidq {

// Malformed text input (quiver files, descriptors, representation files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a precondition (negative dimension vector,
// non-root argument, shape mismatch, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Underlying graph of some component is not a simply-laced Dynkin diagram.
class NotDynkinError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Raised when an internal consistency check fails. Signals a bug in the
// implementation, never a problem with the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rigidq
