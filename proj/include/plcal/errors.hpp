#pragma once

#include <stdexcept>

namespace plcal {

// Bad input data: parse failures and campaign invariant violations.
// The CLI maps this to exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input on which a computation is undefined:
// degenerate fit geometry, unreachable coverage threshold, and the like.
// The CLI maps this to exit code 3.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace plcal
