#pragma once

#include <stdexcept>

namespace labelshift {

// Bad input or violated precondition.  The CLI maps this to exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerically degenerate state (singular matrix, vanished support).  Exit code 3.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace labelshift
