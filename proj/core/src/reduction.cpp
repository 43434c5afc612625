#include "siegelheat/reduction.hpp"

#include "siegelheat/symplectic.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace siegel {

namespace {

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

long long suffix_gcd(const IVec& h, int from) {
    long long g = 0;
    for (int i = from; i < h.size(); ++i) g = std::gcd(g, std::llabs(h(i)));
    return g;
}

// Unimodular Q with first column v; requires gcd(v) = 1.
// Integer row reduction of v to +-e_0, applying inverse column ops to Qinv.
IMat unimodular_with_first_column(const IVec& v) {
    const int m = static_cast<int>(v.size());
    IVec w = v;
    IMat qinv = IMat::Identity(m, m);
    // eliminate w(i) for i >= 1 against a pivot kept in w(0)
    for (;;) {
        int piv = -1;
        for (int i = 0; i < m; ++i)
            if (w(i) != 0 && (piv < 0 || std::llabs(w(i)) < std::llabs(w(piv)))) piv = i;
        if (piv != 0) {
            // swap rows 0 and piv; inverse op: swap columns 0 and piv of qinv
            std::swap(w(0), w(piv));
            qinv.col(0).swap(qinv.col(piv));
        }
        bool done = true;
        for (int i = 1; i < m; ++i) {
            if (w(i) == 0) continue;
            const long long q = w(i) / w(0);
            w(i) -= q * w(0);
            // row_i -= q row_0 on w; inverse: col_0 += q col_i on qinv
            qinv.col(0) += q * qinv.col(i);
            if (w(i) != 0) done = false;
        }
        if (done) break;
    }
    if (w(0) < 0) {
        qinv.col(0) = -qinv.col(0);
        w(0) = -w(0);
    }
    if (w(0) != 1) throw validation_error("unimodular completion: vector not primitive");
    return qinv;
}

// V unimodular with columns e_0..e_{k-1}, then h, then a completion.
IMat completion_matrix(int n, int k, const IVec& h) {
    IMat v = IMat::Identity(n, n);
    const int m = n - k;
    IVec tail(m);
    for (int i = 0; i < m; ++i) tail(i) = h(k + i);
    const IMat q = unimodular_with_first_column(tail);
    v.block(k, k, m, m) = q;
    for (int i = 0; i < k; ++i) v(i, k) = h(i);
    return v;
}

Mat apply_u(const Mat& y, const IMat& u) {
    const Mat ud = u.cast<double>();
    return sym_part(ud.transpose() * y * ud);
}

// All nonzero integer vectors with |h|_inf <= radius whose suffix from `from`
// is primitive, visiting h and -h once.
template <typename F>
void for_each_candidate(int n, int radius, int from, F&& f) {
    IVec h = IVec::Zero(n);
    const long long lo = -radius, hi = radius;
    std::vector<long long> idx(n, lo);
    for (;;) {
        for (int i = 0; i < n; ++i) h(i) = idx[i];
        bool nonzero = false;
        for (int i = 0; i < n; ++i) nonzero |= (h(i) != 0);
        if (nonzero) {
            // canonical representative of {h, -h}: first nonzero entry positive
            int first = 0;
            while (h(first) == 0) ++first;
            if (h(first) > 0 && suffix_gcd(h, from) == 1) f(h);
        }
        int pos = 0;
        while (pos < n && ++idx[pos] > hi) idx[pos++] = lo;
        if (pos == n) break;
    }
}

} // namespace

MinkowskiResult minkowski_reduce(const Mat& y, int radius) {
    const int n = static_cast<int>(y.rows());
    if (n > 4) throw validation_error("minkowski_reduce: unsupported degree n > 4");
    if (!is_symmetric(y, 1e-10) || min_eigenvalue_sym(y) <= 0.0)
        throw validation_error("minkowski_reduce: Y must be symmetric positive definite");

    IMat u = IMat::Identity(n, n);
    Mat yc = sym_part(y);
    const double rel = 1.0 - 1e-12;
    for (int pass = 0; pass < 256; ++pass) {
        bool improved = false;
        for (int k = 0; k < n && !improved; ++k) {
            double best = yc(k, k);
            IVec besth;
            for_each_candidate(n, radius, k, [&](const IVec& h) {
                const Vec hd = h.cast<double>();
                const double q = hd.dot(yc * hd);
                if (q < best * rel && q < best) {
                    best = q;
                    besth = h;
                }
            });
            if (besth.size() > 0) {
                const IMat v = completion_matrix(n, k, besth);
                u = (u * v).eval();
                yc = apply_u(y, u);
                improved = true;
            }
        }
        if (!improved) break;
    }
    // enforce y_{k,k+1} >= 0 by sign flips of columns, left to right
    for (int j = 1; j < n; ++j) {
        if (yc(j - 1, j) < 0.0) {
            u.col(j) = -u.col(j);
            yc = apply_u(y, u);
        }
    }
    return MinkowskiResult{yc, u};
}

bool is_minkowski_reduced(const Mat& y, int bound, double tol) {
    const int n = static_cast<int>(y.rows());
    for (int k = 0; k + 1 < n; ++k) {
        if (y(k, k) > y(k + 1, k + 1) + tol) return false;
        if (y(k, k + 1) < -tol) return false;
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (std::abs(2.0 * y(j, k)) > y(j, j) + tol) return false;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
        for_each_candidate(n, bound, k, [&](const IVec& h) {
            const Vec hd = h.cast<double>();
            if (hd.dot(y * hd) < y(k, k) - tol - 1e-12 * y(k, k)) ok = false;
        });
    }
    return ok;
}

namespace {

IMat symplectic_gl_embedding_int(const IMat& u, const IMat& uinv) {
    const int n = static_cast<int>(u.rows());
    IMat g = IMat::Zero(2 * n, 2 * n);
    g.topLeftCorner(n, n) = u.transpose();
    g.bottomRightCorner(n, n) = uinv;
    return g;
}

IMat integer_inverse_unimodular(const IMat& u) {
    // adjugate route; determinants are +-1 so the inverse is integral
    const Mat ud = u.cast<double>();
    const Mat inv = ud.inverse();
    IMat r(u.rows(), u.cols());
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j) r(i, j) = std::llround(inv(i, j));
    return r;
}

IMat translation_int(const IMat& s) {
    const int n = static_cast<int>(s.rows());
    IMat g = IMat::Identity(2 * n, 2 * n);
    g.topRightCorner(n, n) = s;
    return g;
}

// J embedded on the j-th diagonal coordinate (all coordinates for j = -1).
IMat inversion_int(int n, int j) {
    IMat g = IMat::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const bool inv = (j < 0) || (i == j);
        if (inv) {
            g(i, n + i) = 1;
            g(n + i, i) = -1;
        } else {
            g(i, i) = 1;
            g(n + i, n + i) = 1;
        }
    }
    return g;
}

} // namespace

ReductionResult siegel_reduce(const SiegelPoint& z, int max_iter) {
    const int n = z.degree();
    if (n > 3) throw validation_error("siegel_reduce: unsupported degree n > 3");

    std::vector<IMat> inversions;
    inversions.push_back(inversion_int(n, -1));
    if (n > 1)
        for (int j = 0; j < n; ++j) inversions.push_back(inversion_int(n, j));

    IMat gamma = IMat::Identity(2 * n, 2 * n);
    SiegelPoint zc = z;
    int steps = 0;
    auto apply = [&](const IMat& g) {
        gamma = (g * gamma).eval();
        zc = act(SymplecticMatrix(g.cast<double>()), zc);
        ++steps;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        // (a) Minkowski-reduce the imaginary part
        if (!is_minkowski_reduced(zc.Y())) {
            const MinkowskiResult mr = minkowski_reduce(zc.Y());
            apply(symplectic_gl_embedding_int(mr.u, integer_inverse_unimodular(mr.u)));
            changed = true;
        }
        // (b) integer-translate the real part into |x_{jk}| <= 1/2
        IMat s = IMat::Zero(n, n);
        bool translate = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                s(a, b) = -std::llround(zc.X()(a, b));
                translate |= (s(a, b) != 0);
            }
        if (translate) {
            apply(translation_int((s + s.transpose().eval()) / 2));
            changed = true;
        }
        // (c) raise |det(CZ+D)| with a generator if it is below 1
        for (const IMat& g : inversions) {
            const int nn = n;
            const CMat c = g.bottomLeftCorner(nn, nn).cast<double>().cast<Complex>();
            const CMat d = g.bottomRightCorner(nn, nn).cast<double>().cast<Complex>();
            const double mag = std::abs((c * zc.Z() + d).determinant());
            if (mag < 1.0 - 1e-9) {
                apply(g);
                changed = true;
                break;
            }
        }
        if (!changed)
            return ReductionResult{zc, SymplecticMatrix(gamma.cast<double>()), steps};
    }
    throw reduction_incomplete(
        "siegel_reduce: no fixed point within max_iter",
        ReductionResult{zc, SymplecticMatrix(gamma.cast<double>()), steps});
}

} // namespace siegel
