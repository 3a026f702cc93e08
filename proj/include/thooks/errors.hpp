#pragma once

#include <stdexcept>

namespace thooks {

/// Raised when an abacus move is requested that the abacus cannot make.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Refusal to run an enumeration past its size guard without an explicit
/// override.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thooks
