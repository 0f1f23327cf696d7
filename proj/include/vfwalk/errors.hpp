#pragma once

#include <stdexcept>
#include <string>

namespace vfwalk {

// Bad construction input or bad CLI usage.  The CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation could not be completed: eigensolver failure, singular point
// on an evaluation grid, branch crossing, exhausted enumeration budget.
// The CLI maps this to exit code 3.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};

}  // namespace vfwalk
