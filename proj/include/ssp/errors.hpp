// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace ssp {

// Instance exceeds a solver's node cap; never degraded to an approximation.
struct TooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver ran past its wall-clock budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ssp
