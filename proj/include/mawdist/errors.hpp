#pragma once

#include <stdexcept>

namespace mawdist {

// Bad user input: malformed file, symbol outside the alphabet, invalid
// configuration. Mapped to CLI exit code 2.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariant. Mapped to CLI exit code 3.
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mawdist
