#pragma once

#include <stdexcept>
#include <string>

namespace liaison {

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or identity that was supposed to hold did not (CLI exit code 3).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested degree horizon cannot witness the claim being checked.
class HorizonError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace liaison
