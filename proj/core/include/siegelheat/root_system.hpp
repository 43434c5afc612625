#pragma once

#include <vector>

#include "siegelheat/linalg.hpp"

namespace siegel {

// Type-C_n root data: positive roots {2e_j} u {e_j +- e_k, j<k}, half-sum
// rho0 = (n, n-1, ..., 1), pairing <e_j, e_k> = delta_jk / (4(n+1)).
struct RootSystemData {
    int n = 0;
    std::vector<Vec> positive_roots;  // coefficient vectors in the e-basis
    Vec rho0;
    double pairing_scale = 0.0;  // 1 / (4(n+1))

    static RootSystemData make(int n);
};

// Spectral parameter; the Casimir eigenvalue is always recomputed.
struct SpectralParameter {
    Vec lambda;
    double casimir() const;
};

// epsilon(v) = prod v_j * prod_{j<k} (v_j + v_k) * prod_{j<k} (v_j - v_k)
double epsilon_poly(const Vec& v);

// delta(v) = prod sh(v_j) * prod_{j<k} sh((v_j+v_k)/2) sh((v_j-v_k)/2)
double delta_fn(const Vec& v);

// nu(v): same product with ch in place of sh
double nu_fn(const Vec& v);

// tau(lambda) = prod th(pi lambda_j / 2) * prod_{j<k} th(pi(lambda_j+-lambda_k)/2)
double tau_fn(const Vec& lambda);

// |c(lambda)|^{-2} by Bhanu Murti's product formula
double c_inverse_sq(const Vec& lambda);
// the same value as pi^{-n^2/2} 2^{-n^2} epsilon(lambda) tau(lambda)
double c_inverse_sq_reduced(const Vec& lambda);

// sum_{sigma in W} det(sigma) exp(i sigma lambda(r)), evaluated as
// det[ 2i sin(lambda_j r_k) ].
Complex weyl_alternating_sum(const Vec& lambda, const Vec& r);

// lambda_omega = -(sum j^2 + sum lambda_j^2)/4
double casimir_eigenvalue(const Vec& lambda);

// <rho0, rho0>_0 = (1^2 + ... + n^2) / (4(n+1))
double rho0_pairing(int n);

// E(lambda, x) = det[sin(lambda_j x_k)] / (epsilon(lambda) epsilon(x)).
// Smooth in both arguments; the removable singularities at Weyl-chamber
// walls (coinciding or vanishing entries on either side) are evaluated by
// confluent divided differences in mu_j = lambda_j^2, nu_k = x_k^2 of the
// kernel g(u) = sin(sqrt(u))/sqrt(u).  Nodes whose squared values lie within
// wall_tol * max(1, scale) of each other are snapped to their cluster mean
// and handled with exact derivative formulas.
double sin_det_ratio(const Vec& lambda, const Vec& x, double wall_tol = 1e-5);

// epsilon(x)/delta(x) as a stable product of y/sinh(y) factors
double eps_over_delta(const Vec& x);
double log_abs_eps_over_delta(const Vec& x);  // always finite

// Weyl-sum / (i^{n^2} eps(lambda) delta(x)): the wall-safe radial integrand
// core, equal to 2^n (-1)^{n(n-1)/2} E(lambda,x) eps(x)/delta(x).
double weyl_ratio_integrand(const Vec& lambda, const Vec& x);

// prod_{m=0}^{n-1} (2m+1)!, the r->0 normalizer of the complex spherical fn
double complex_spherical_norm(int n);

} // namespace siegel
