#pragma once

#include <stdexcept>
#include <string>

namespace sqwalk {

// Violated caller contract (bad input, out-of-range dimension, ...).
// The CLI maps this to exit code 2.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Violated spectral/gap promise detected at run time (forbidden-band singular
// values, negative absorbing mass, ...). The CLI maps this to exit code 3.
struct promise_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A spectrum with no eigenvalue above the zero threshold.
struct no_nonzero_eigenvalue : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace sqwalk
