#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace gitstate {

// Bad input or precondition violation; the CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Deadline expired mid-computation; the CLI maps this to exit code 1.
struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline void check_deadline(const Deadline& dl, const char* where) {
  if (dl && std::chrono::steady_clock::now() > *dl) throw TimeoutError(where);
}

}  // namespace gitstate
