#pragma once

#include <stdexcept>
#include <string>

namespace tdm {

// A documented precondition of an operation does not hold for the input.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// A proof step needed more triangular pivots than log2(delta) allows.
struct NotDeltaModular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive search would exceed the configured size cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tdm
