#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "siegelheat/linalg.hpp"

namespace siegel {

enum class QuadratureMethod { gauss_legendre, gauss_hermite, monte_carlo };

// Reproducibility contract: identical (seed, workers, samples) produce
// bit-identical results (fixed sample partition, reduction in worker order).
struct QuadratureSpec {
    QuadratureMethod method = QuadratureMethod::monte_carlo;
    long long samples = 100000;   // points for quadrature, draws for MC
    std::uint64_t seed = 1;
    int workers = 1;
    double scale = 1.0;           // sampler width for the Hermitian factor
};

// splitmix64 step; used to derive per-worker substreams
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng(split_seed(seed, stream));
}

// int x^m e^{-x^2} dx over R, exact: odd m vanish, even m give Gamma((m+1)/2)
double gaussian_moment(int m);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1] (Newton on the recurrence)
QuadratureRule gauss_legendre(int npoints);
// Gauss-Hermite with weight e^{-x^2} (Golub-Welsch)
QuadratureRule gauss_hermite(int npoints);

// integral of f over [a, b]
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec);

// adaptive Simpson with absolute/relative tolerance; deterministic
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10, int max_depth = 48);

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

// Deterministic parallel Monte Carlo: worker w draws its fixed index range
// from substream (seed, w); partial sums combine in worker order.
McResult mc_integrate(const std::function<double(Rng&)>& sample_value,
                      const QuadratureSpec& spec);

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// R-diagonal phase correction.
CMat sample_unitary(int n, Rng& rng);

// real symplectic orthogonal embedding [[A, B], [-B, A]] of u = A + iB
Mat unitary_embedding(const CMat& u);

// Positive-definite Hermitian factor h = exp(S), S Hermitian Gaussian with
// unitarily invariant density q(S) ~ exp(-tr(S^2)/(2 scale^2)).  log_weight
// corrects from q to the invariant measure prod_{i<j} (sh(d_ij)/d_ij)^2 dS
// on the factor space (d_ij = eigenvalue gaps of S); the global measure
// normalization stays with the caller.
struct HermitianSample {
    CMat h;
    Vec log_eigs;      // eigenvalues of S = log h
    double log_weight;
};

HermitianSample sample_hermitian_factor(int n, double scale, Rng& rng);

} // namespace siegel
