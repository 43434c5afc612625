#pragma once

#include <functional>

#include "siegelheat/siegel_point.hpp"

namespace siegel {

// Scalar field on H_n, evaluated at (X, Y).
using ScalarField = std::function<Complex(const Mat& x, const Mat& y)>;

struct MaassOptions {
    double step = 1e-3;
    bool richardson = false;  // combine steps h and h/2 for an O(h^4) estimate
};

// Second-order central-difference application of the weight-kappa Maass
// Laplacian
//   tr( Y ((Y d/dX)^t d/dX + (Y d/dY)^t d/dY) - i kappa Y d/dX ) f,
// with the symmetrized partials (d/dX)_{jk} = (1+delta_{jk})/2 d/dx_{jk}.
Complex apply_maass_laplacian(const ScalarField& f, const SiegelPoint& z, int kappa,
                              const MaassOptions& opts = {});

} // namespace siegel
