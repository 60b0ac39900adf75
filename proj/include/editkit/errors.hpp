#pragma once

#include <stdexcept>
#include <string>

namespace editkit {

// Bad user input: malformed files, missing ids, out-of-range values.
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A library invariant did not hold (exit code 2 in the CLI).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace editkit
