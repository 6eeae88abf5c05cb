#pragma once

#include <stdexcept>
#include <string>

namespace bk {

// Malformed arguments or violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural guarantee was observed to fail (non-integral or negative
// coefficient, inconsistent overdetermined system). Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bk
