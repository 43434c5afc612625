#pragma once

#include <Eigen/Dense>
#include <complex>

#include "siegelheat/errors.hpp"

namespace siegel {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline bool is_symmetric(const Mat& m, double tol = 1e-12) {
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

inline Mat sym_part(const Mat& m) { return 0.5 * (m + m.transpose()); }
inline CMat csym_part(const CMat& m) { return 0.5 * (m + m.transpose()); }

inline double min_eigenvalue_sym(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Symmetric positive-definite square root.
inline Mat spd_sqrt(const Mat& y) {
    Eigen::SelfAdjointEigenSolver<Mat> es(y);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw validation_error("spd_sqrt: matrix is not positive definite");
    return es.operatorSqrt();
}

inline Mat spd_inv_sqrt(const Mat& y) {
    Eigen::SelfAdjointEigenSolver<Mat> es(y);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw validation_error("spd_inv_sqrt: matrix is not positive definite");
    return es.operatorInverseSqrt();
}

// M = P D P^t with P unit upper-triangular and D positive diagonal
// (the reversed-order variant of the unpivoted LDL^t factorization).
// Requires M symmetric positive definite.
inline void udu_decompose(const Mat& m, Mat& p, Vec& d) {
    const Eigen::Index n = m.rows();
    Mat a = m;
    p = Mat::Identity(n, n);
    d = Vec::Zero(n);
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        d(k) = a(k, k);
        if (!(d(k) > 0.0))
            throw numerical_error("udu_decompose: pivot not positive");
        for (Eigen::Index i = 0; i < k; ++i) p(i, k) = a(i, k) / d(k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j <= i; ++j)
                a(j, i) -= p(j, k) * d(k) * p(i, k);
    }
}

// x / sinh(x), even and smooth through x = 0.
inline double x_over_sinh(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 / (1.0 + x2 / 6.0 * (1.0 + x2 / 20.0));
    }
    return x / std::sinh(x);
}

// log(sinh(x)/x), even and smooth through x = 0.
inline double log_sinh_over_x(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return std::log1p(x2 / 6.0 * (1.0 + x2 / 20.0));
    }
    return std::log(std::sinh(ax) / ax);
}

} // namespace siegel
