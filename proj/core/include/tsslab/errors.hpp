// errors.hpp — error types shared across the library.
//
// validation_error: a caller handed us bad input (non-Hermitian matrix,
// non-normalized state, unknown tag). Mapped to exit code 2 by the CLI.
// convergence_error: an iterative routine failed to converge within its
// budget. Mapped to exit code 3 by the CLI.

#pragma once

#include <stdexcept>
#include <string>

namespace tsslab {

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tsslab
