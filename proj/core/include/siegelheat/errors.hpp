#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Input fails a structural invariant (asymmetric matrix, non-symplectic g, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Computation left its reliable regime (ill-conditioning, pairing violation,
// quadrature error estimate above tolerance, ...).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iteration budget exhausted before the termination predicate held.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace siegel
