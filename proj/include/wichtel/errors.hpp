#pragma once

#include <stdexcept>

namespace wichtel {

/// Exhaustive enumeration was requested above the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A cross-method identity that must always hold failed at runtime.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wichtel
