#include "siegelheat/root_system.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

RootSystemData RootSystemData::make(int n) {
    RootSystemData d;
    d.n = n;
    d.pairing_scale = 1.0 / (4.0 * (n + 1));
    d.rho0 = Vec(n);
    for (int j = 0; j < n; ++j) d.rho0(j) = n - j;
    for (int j = 0; j < n; ++j) {
        Vec a = Vec::Zero(n);
        a(j) = 2.0;
        d.positive_roots.push_back(a);
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Vec a = Vec::Zero(n), b = Vec::Zero(n);
            a(j) = 1.0;
            a(k) = 1.0;
            b(j) = 1.0;
            b(k) = -1.0;
            d.positive_roots.push_back(a);
            d.positive_roots.push_back(b);
        }
    return d;
}

double SpectralParameter::casimir() const { return casimir_eigenvalue(lambda); }

double epsilon_poly(const Vec& v) {
    const int n = static_cast<int>(v.size());
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= v(j);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) p *= (v(j) + v(k)) * (v(j) - v(k));
    return p;
}

double delta_fn(const Vec& v) {
    const int n = static_cast<int>(v.size());
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= std::sinh(v(j));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            p *= std::sinh(0.5 * (v(j) + v(k))) * std::sinh(0.5 * (v(j) - v(k)));
    return p;
}

double nu_fn(const Vec& v) {
    const int n = static_cast<int>(v.size());
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= std::cosh(v(j));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            p *= std::cosh(0.5 * (v(j) + v(k))) * std::cosh(0.5 * (v(j) - v(k)));
    return p;
}

double tau_fn(const Vec& lambda) {
    const int n = static_cast<int>(lambda.size());
    const double hp = 0.5 * EIGEN_PI;
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= std::tanh(hp * lambda(j));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            p *= std::tanh(hp * (lambda(j) + lambda(k))) * std::tanh(hp * (lambda(j) - lambda(k)));
    return p;
}

double c_inverse_sq(const Vec& lambda) {
    const int n = static_cast<int>(lambda.size());
    const double hp = 0.5 * EIGEN_PI;
    double p = std::pow(EIGEN_PI, -0.5 * n * n);
    for (int j = 0; j < n; ++j) p *= 0.5 * lambda(j) * std::tanh(hp * lambda(j));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            const double s = lambda(j) + lambda(k), d = lambda(j) - lambda(k);
            p *= 0.5 * s * std::tanh(hp * s) * 0.5 * d * std::tanh(hp * d);
        }
    return p;
}

double c_inverse_sq_reduced(const Vec& lambda) {
    const int n = static_cast<int>(lambda.size());
    return std::pow(EIGEN_PI, -0.5 * n * n) * std::pow(2.0, -n * n) * epsilon_poly(lambda) *
           tau_fn(lambda);
}

Complex weyl_alternating_sum(const Vec& lambda, const Vec& r) {
    const int n = static_cast<int>(lambda.size());
    CMat m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(j, k) = Complex(0.0, 2.0) * std::sin(lambda(j) * r(k));
    return m.determinant();
}

double casimir_eigenvalue(const Vec& lambda) {
    const int n = static_cast<int>(lambda.size());
    double s = 0.0;
    for (int j = 1; j <= n; ++j) s += static_cast<double>(j) * j;
    return -(s + lambda.squaredNorm()) / 4.0;
}

double rho0_pairing(int n) {
    double s = 0.0;
    for (int j = 1; j <= n; ++j) s += static_cast<double>(j) * j;
    return s / (4.0 * (n + 1));
}

namespace {

// g(u) = sin(sqrt u)/sqrt u.  Derivatives: g^{(m)}(u) = (-1/2)^m j_m(sqrt u)/u^{m/2},
// with the Taylor series sum_p (-1)^{p+m} ((p+m)!/p!) u^p / (2p+2m+1)! near u = 0.
double sinc_sqrt_deriv(int m, double u) {
    if (u < 0.25) {
        double c = (m % 2 == 0) ? 1.0 : -1.0;  // c_0 = (-1)^m m!/(2m+1)!
        for (int i = m + 1; i <= 2 * m + 1; ++i) c /= i;
        double sum = 0.0, up = 1.0;
        for (int p = 0; p < 40; ++p) {
            const double t = c * up;
            sum += t;
            if (std::abs(t) < 1e-19 * (std::abs(sum) + 1e-300)) break;
            c *= -static_cast<double>(p + m + 1) /
                 ((p + 1.0) * (2.0 * p + 2 * m + 2) * (2.0 * p + 2 * m + 3));
            up *= u;
        }
        return sum;
    }
    const double z = std::sqrt(u);
    const double jm = std::sph_bessel(static_cast<unsigned>(m), z);
    // (-1/2)^m j_m(z)/u^{m/2} = (-1)^m j_m(z) / (2z)^m
    double denom = 1.0;
    for (int i = 0; i < m; ++i) denom *= 2.0 * z;
    return ((m % 2 == 0) ? 1.0 : -1.0) * jm / denom;
}

// d^a_mu d^b_nu of F(mu, nu) = g(mu nu)
double mixed_partial(int a, int b, double mu, double nu) {
    const int lo = std::min(a, b);
    double sum = 0.0;
    for (int i = 0; i <= lo; ++i) {
        double coef = 1.0;  // C(a,i) C(b,i) i!
        for (int t = 0; t < i; ++t)
            coef *= static_cast<double>(a - t) * static_cast<double>(b - t) / (t + 1);
        for (int t = 2; t <= i; ++t) coef *= t;
        sum += coef * std::pow(nu, a - i) * std::pow(mu, b - i) *
               sinc_sqrt_deriv(a + b - i, mu * nu);
    }
    return sum;
}

constexpr int kMaxDeg = 5;

// memoized bivariate confluent divided differences of g(mu nu) over sorted,
// snapped node lists (equal nodes contiguous)
struct DD2 {
    const std::vector<double>& mu;
    const std::vector<double>& nu;
    double table[kMaxDeg][kMaxDeg][kMaxDeg][kMaxDeg];
    bool have[kMaxDeg][kMaxDeg][kMaxDeg][kMaxDeg] = {};

    double get(int i, int j, int k, int l) {
        if (have[i][j][k][l]) return table[i][j][k][l];
        double v;
        if (mu[j] != mu[i]) {
            v = (get(i + 1, j, k, l) - get(i, j - 1, k, l)) / (mu[j] - mu[i]);
        } else if (nu[l] != nu[k]) {
            v = (get(i, j, k + 1, l) - get(i, j, k, l - 1)) / (nu[l] - nu[k]);
        } else {
            double fact = 1.0;
            for (int t = 2; t <= j - i; ++t) fact *= t;
            for (int t = 2; t <= l - k; ++t) fact *= t;
            v = mixed_partial(j - i, l - k, mu[i], nu[k]) / fact;
        }
        have[i][j][k][l] = true;
        table[i][j][k][l] = v;
        return v;
    }
};

// nodes v_i^2 sorted ascending; clusters are snapped to their mean.  The
// clustering happens in the squared variable, where the divided differences
// divide: a gap g costs roundoff ~ eps/g^2 unsnapped and bias ~ g^2 snapped,
// so the tolerance sits at the crossover.
std::vector<double> snapped_squares(const Vec& v, double tol) {
    std::vector<double> s(v.size());
    for (int i = 0; i < v.size(); ++i) s[i] = v(i) * v(i);
    std::sort(s.begin(), s.end());
    const double tol_sq = tol * std::max(1.0, s.back());
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i + 1;
        double sum = s[i];
        while (j < s.size() && s[j] - s[j - 1] <= tol_sq) sum += s[j++];
        const double mean = sum / static_cast<double>(j - i);
        for (size_t t = i; t < j; ++t) s[t] = mean;
        i = j;
    }
    return s;
}

} // namespace

double sin_det_ratio(const Vec& lambda, const Vec& x, double wall_tol) {
    const int n = static_cast<int>(lambda.size());
    if (n != x.size()) throw validation_error("sin_det_ratio: size mismatch");
    if (n >= kMaxDeg) throw validation_error("sin_det_ratio: degree too large");
    const std::vector<double> mu = snapped_squares(lambda, wall_tol);
    const std::vector<double> nu = snapped_squares(x, wall_tol);
    DD2 dd{mu, nu, {}, {}};
    Mat b(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) b(j, k) = dd.get(0, j, 0, k);
    return b.determinant();
}

double eps_over_delta(const Vec& x) {
    const int n = static_cast<int>(x.size());
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= x_over_sinh(x(j));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            p *= 4.0 * x_over_sinh(0.5 * (x(j) + x(k))) * x_over_sinh(0.5 * (x(j) - x(k)));
    return p;
}

double log_abs_eps_over_delta(const Vec& x) {
    const int n = static_cast<int>(x.size());
    double s = 0.0;
    for (int j = 0; j < n; ++j) s -= log_sinh_over_x(x(j));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            s += 2.0 * std::log(2.0) - log_sinh_over_x(0.5 * (x(j) + x(k))) -
                 log_sinh_over_x(0.5 * (x(j) - x(k)));
    return s;
}

double weyl_ratio_integrand(const Vec& lambda, const Vec& x) {
    const int n = static_cast<int>(lambda.size());
    const double sign = (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return std::pow(2.0, n) * sign * sin_det_ratio(lambda, x) * eps_over_delta(x);
}

double complex_spherical_norm(int n) {
    double p = 1.0;
    for (int m = 0; m < n; ++m) {
        double f = 1.0;
        for (int i = 2; i <= 2 * m + 1; ++i) f *= i;
        p *= f;
    }
    return p;
}

} // namespace siegel
