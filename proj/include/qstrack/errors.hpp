// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace qstrack {

// Incompatible or malformed matrix/vector shapes.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Invalid user-supplied configuration (bad key, out-of-range value, ...).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Index or time argument outside its valid range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Numeric failure: non-finite input, singular system, division by zero.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A call violated an API contract (e.g. metrics fed logs without the
// fields the metric needs).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Too few usable data points for a statistical fit.
struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qstrack
