#pragma once

#include <optional>

#include "siegelheat/siegel_point.hpp"

namespace siegel {

// Y_red = U^t Y U with U integral unimodular.
struct MinkowskiResult {
    Mat y_reduced;
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> u;
};

// Enumeration-based Minkowski reduction, exact for n <= 4 at desk scale.
// radius bounds the sup-norm of the candidate primitive vectors.
MinkowskiResult minkowski_reduce(const Mat& y, int radius = 5);

// Checks the diagonal/sign conditions exactly and the primitive-vector
// minimality over all primitive h with |h|_inf <= bound.
bool is_minkowski_reduced(const Mat& y, int bound = 5, double tol = 1e-12);

struct ReductionResult {
    SiegelPoint z_reduced;
    SymplecticMatrix gamma;  // integral, act(gamma, Z_input) = z_reduced
    int steps = 0;
};

// Non-termination carries the partial state.
struct reduction_incomplete : convergence_error {
    reduction_incomplete(std::string what, ReductionResult partial)
        : convergence_error(std::move(what)), partial_result(std::move(partial)) {}
    ReductionResult partial_result;
};

// Iterates Minkowski reduction of Y, integer translation of X, and a finite
// generator list of symplectic inversions until the reducedness predicates
// hold or max_iter is reached.  Degrees n <= 3.
ReductionResult siegel_reduce(const SiegelPoint& z, int max_iter = 64);

} // namespace siegel
