#pragma once

#include <stdexcept>
#include <string>

namespace skewbetti {

// Rejected user input: monotonicity violations, unknown labels, size limits.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A structural guarantee failed at runtime (top cell missing, shape mismatch,
// cross-method disagreement inside a single operation). Never silently skipped.
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace skewbetti
