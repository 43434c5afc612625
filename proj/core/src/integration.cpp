#include "siegelheat/integration.hpp"

#include <cmath>
#include <thread>

namespace siegel {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double gaussian_moment(int m) {
    if (m < 0) throw validation_error("gaussian_moment: m must be >= 0");
    if (m % 2 == 1) return 0.0;
    return std::tgamma(0.5 * (m + 1));
}

QuadratureRule gauss_legendre(int npoints) {
    if (npoints < 1) throw validation_error("gauss_legendre: need at least one point");
    QuadratureRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    const int half = (npoints + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-node initial guess, then Newton on P_n
        double x = std::cos(EIGEN_PI * (i + 0.75) / (npoints + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= npoints; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = npoints * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[npoints - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[npoints - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_hermite(int npoints) {
    if (npoints < 1) throw validation_error("gauss_hermite: need at least one point");
    // Golub-Welsch on the Hermite Jacobi matrix (off-diagonals sqrt(k/2))
    Mat j = Mat::Zero(npoints, npoints);
    for (int k = 1; k < npoints; ++k) {
        const double b = std::sqrt(0.5 * k);
        j(k - 1, k) = b;
        j(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(j);
    QuadratureRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    const double mu0 = std::sqrt(EIGEN_PI);
    for (int i = 0; i < npoints; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec) {
    const int np = static_cast<int>(spec.samples);
    switch (spec.method) {
        case QuadratureMethod::gauss_legendre: {
            const QuadratureRule rule = gauss_legendre(np);
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            double sum = 0.0;
            for (int i = 0; i < np; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
            return half * sum;
        }
        case QuadratureMethod::gauss_hermite: {
            // integral over R of f, via f(x) e^{x^2} against the GH weight;
            // suitable for Gaussian-decaying f (a, b ignored)
            const QuadratureRule rule = gauss_hermite(np);
            double sum = 0.0;
            for (int i = 0; i < np; ++i) {
                const double x = rule.nodes[i];
                sum += rule.weights[i] * f(x) * std::exp(x * x);
            }
            return sum;
        }
        case QuadratureMethod::monte_carlo: {
            const double len = b - a;
            return mc_integrate(
                       [&](Rng& rng) {
                           std::uniform_real_distribution<double> u(a, b);
                           return f(u(rng)) * len;
                       },
                       spec)
                .estimate;
        }
    }
    throw validation_error("integrate_1d: unknown method");
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double m, double b, double fa,
               double fm, double fb, double whole, double tol, int depth, int max_depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= max_depth || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    if (std::isnan(fa) || std::isnan(fm) || std::isnan(fb))
        throw numerical_error("integrate_adaptive: NaN integrand at interval probe");
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, m, b, fa, fm, fb, whole, tol, 0, max_depth);
}

McResult mc_integrate(const std::function<double(Rng&)>& sample_value,
                      const QuadratureSpec& spec) {
    const long long n = spec.samples;
    const int workers = std::max(1, spec.workers);
    if (n <= 0) throw validation_error("mc_integrate: samples must be positive");

    std::vector<double> sums(workers, 0.0), sqs(workers, 0.0);
    auto run_worker = [&](int w) {
        const long long lo = n * w / workers, hi = n * (w + 1) / workers;
        Rng rng = make_rng(spec.seed, static_cast<std::uint64_t>(w));
        double s = 0.0, s2 = 0.0;
        for (long long i = lo; i < hi; ++i) {
            const double v = sample_value(rng);
            s += v;
            s2 += v * v;
        }
        sums[w] = s;
        sqs[w] = s2;
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& t : pool) t.join();
    }

    double sum = 0.0, sq = 0.0;
    for (int w = 0; w < workers; ++w) {  // fixed order
        sum += sums[w];
        sq += sqs[w];
    }
    if (std::isnan(sum)) throw numerical_error("mc_integrate: NaN in sample stream");
    McResult out;
    out.samples = n;
    out.estimate = sum / static_cast<double>(n);
    const double var = std::max(0.0, sq / n - out.estimate * out.estimate);
    out.std_error = n > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
    return out;
}

CMat sample_unitary(int n, Rng& rng) {
    std::normal_distribution<double> g;
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<CMat> qr(a);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

Mat unitary_embedding(const CMat& u) {
    const int n = static_cast<int>(u.rows());
    Mat k(2 * n, 2 * n);
    k.topLeftCorner(n, n) = u.real();
    k.topRightCorner(n, n) = u.imag();
    k.bottomLeftCorner(n, n) = -u.imag();
    k.bottomRightCorner(n, n) = u.real();
    return k;
}

HermitianSample sample_hermitian_factor(int n, double scale, Rng& rng) {
    if (scale <= 0.0) throw validation_error("sample_hermitian_factor: scale must be > 0");
    std::normal_distribution<double> g;
    CMat s(n, n);
    const double off = scale / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        s(i, i) = Complex(scale * g(rng), 0.0);
        for (int j = i + 1; j < n; ++j) {
            s(i, j) = Complex(off * g(rng), off * g(rng));
            s(j, i) = std::conj(s(i, j));
        }
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(s);
    const Vec eig = es.eigenvalues();
    HermitianSample out;
    out.log_eigs = eig;
    CMat d = CMat::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = std::exp(eig(i));
    out.h = es.eigenvectors() * d * es.eigenvectors().adjoint();
    out.h = 0.5 * (out.h + CMat(out.h.adjoint()));

    // log of prod_{i<j} (sh(d_ij)/d_ij)^2 / q(S); tr(S^2) = sum of eig^2
    double lw = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lw += 2.0 * log_sinh_over_x(eig(i) - eig(j));
    lw += eig.squaredNorm() / (2.0 * scale * scale);
    lw += 0.5 * n * std::log(2.0 * EIGEN_PI * scale * scale);
    lw += 0.5 * n * (n - 1) * std::log(EIGEN_PI * scale * scale);
    out.log_weight = lw;
    return out;
}

} // namespace siegel
