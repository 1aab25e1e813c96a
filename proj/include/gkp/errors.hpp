#pragma once

#include <stdexcept>

namespace gkp {

// Thrown when a computation would exceed a documented size guard.
// The message names the override when one exists.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a runtime-checked mathematical invariant fails. This is never a
// user error: it means either a bug or a falsified statement, and test
// harnesses treat it as a failure.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace gkp
