#pragma once

#include <stdexcept>
#include <string>

namespace oosr2 {

/// Bad user input: malformed files, invalid configuration, dimension mismatches.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate or numerically invalid state reached during estimation.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace oosr2
