#pragma once

#include "siegelheat/siegel_point.hpp"

namespace siegel {

enum class DistanceConvention { paper, metric };

// Symplectic action Z -> (AZ + B)(CZ + D)^{-1}.
SiegelPoint act(const SymplecticMatrix& g, const SiegelPoint& z);

// Eigenvalues of (Z-W)(conj(Z)-W)^{-1}(conj(Z)-conj(W))(Z-conj(W))^{-1},
// sorted descending.  Computed as the squared singular values of the Cayley
// transform of W^{-1/2}-normalized Z, which realizes the cross-ratio matrix
// as one similar to a Hermitian PSD matrix; tiny negatives are clamped to 0.
CrossRatioSpectrum cross_ratio_spectrum(const SiegelPoint& z, const SiegelPoint& w);

// r_j = (1/2) log((1 + sqrt(rho_j)) / (1 - sqrt(rho_j))) = atanh(sqrt(rho_j)).
RadialVector radial_coordinates(const SiegelPoint& z, const SiegelPoint& w);

// paper:  sqrt(2) * (sum_j log^2((1+sqrt(rho_j))/(1-sqrt(rho_j))))^{1/2}
// metric: same without the sqrt(2) factor (arc length of the n=1 metric)
double distance(const SiegelPoint& z, const SiegelPoint& w,
                DistanceConvention convention = DistanceConvention::paper);

// 1 / prod_j cosh^2(r_j(Z,W)) = 4^n det(Im Z) det(Im W) / |det(W - conj(Z))|^2.
double cosh_product(const SiegelPoint& z, const SiegelPoint& w);

// Cayley transform H_n -> D_n, zeta = (Z - i)(Z + i)^{-1}, and its inverse.
CMat cayley(const SiegelPoint& z);
SiegelPoint inverse_cayley(const CMat& zeta);

// Iwasawa a-part H(g) in the K0 A0 N0 (KAN) order: g = k exp(H(g)) n.
// Computed from the unit-upper-triangular factorization of Im(g^{-1} . i1)
// via the duality H_KAN(g) = -H_NAK(g^{-1}).
Vec iwasawa_a_part(const SymplecticMatrix& g);

} // namespace siegel
