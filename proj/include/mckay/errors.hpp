#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Bad input: out-of-range parameters, malformed literals, unknown labels.
// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical self-check failed (inexact division, orthogonality, parity).
// Always indicates a bug or a genuine counterexample, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Cache or report I/O failed. Kept apart from the math failures above.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mckay
