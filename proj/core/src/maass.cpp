#include "siegelheat/maass.hpp"

#include <vector>

namespace siegel {

namespace {

struct Coord {
    int a, b;    // a <= b
    bool in_x;   // coordinate of X or of Y
};

// Perturb one independent coordinate of the symmetric pair (X, Y).
void bump(Mat& x, Mat& y, const Coord& c, double h) {
    Mat& m = c.in_x ? x : y;
    m(c.a, c.b) += h;
    if (c.a != c.b) m(c.b, c.a) += h;
}

class Stencil {
  public:
    Stencil(const ScalarField& f, const SiegelPoint& z, double h)
        : f_(f), x0_(z.X()), y0_(z.Y()), h_(h) {
        const int n = z.degree();
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                coords_.push_back({a, b, true});
                coords_.push_back({a, b, false});
            }
        // the whole stencil must stay inside the Y > 0 cone
        Mat yprobe = y0_;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) yprobe(a, b) -= (a == b ? h : 2 * h);
        if (min_eigenvalue_sym(yprobe) <= 0.0)
            throw numerical_error("apply_maass_laplacian: stencil leaves the Y > 0 cone");
        f0_ = eval({});
    }

    Complex eval(const std::vector<std::pair<int, double>>& bumps) const {
        Mat x = x0_, y = y0_;
        for (const auto& [ci, step] : bumps) bump(x, y, coords_[ci], step);
        return f_(x, y);
    }

    Complex first(int i) const {
        return (eval({{i, h_}}) - eval({{i, -h_}})) / (2.0 * h_);
    }

    Complex second(int i, int j) const {
        if (i == j)
            return (eval({{i, h_}}) - 2.0 * f0_ + eval({{i, -h_}})) / (h_ * h_);
        return (eval({{i, h_}, {j, h_}}) - eval({{i, h_}, {j, -h_}}) -
                eval({{i, -h_}, {j, h_}}) + eval({{i, -h_}, {j, -h_}})) /
               (4.0 * h_ * h_);
    }

    int index(int a, int b, bool in_x) const {
        const int lo = std::min(a, b), hi = std::max(a, b);
        for (size_t k = 0; k < coords_.size(); ++k)
            if (coords_[k].a == lo && coords_[k].b == hi && coords_[k].in_x == in_x)
                return static_cast<int>(k);
        throw std::logic_error("stencil coordinate lookup failed");
    }

  private:
    const ScalarField& f_;
    Mat x0_, y0_;
    double h_;
    std::vector<Coord> coords_;
    Complex f0_;
};

Complex apply_once(const ScalarField& f, const SiegelPoint& z, int kappa, double h) {
    const int n = z.degree();
    const Mat& y = z.Y();
    Stencil st(f, z, h);

    // cache the symmetrized second partials over independent coordinates
    const int m = n * (n + 1);  // number of coordinates (X and Y)
    std::vector<std::vector<Complex>> hess(m, std::vector<Complex>(m));
    std::vector<bool> have(m * m, false);
    auto second = [&](int i, int j) {
        if (!have[i * m + j]) {
            hess[i][j] = st.second(i, j);
            have[i * m + j] = have[j * m + i] = true;
            hess[j][i] = hess[i][j];
        }
        return hess[i][j];
    };

    auto dfac = [](int j, int k) { return j == k ? 1.0 : 0.5; };  // (1+delta)/2

    Complex acc(0, 0);
    // tr(Y dX Y dX) + tr(Y dY Y dY), coefficients frozen
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const double coef = y(a, b) * y(c, d) * dfac(b, c) * dfac(d, a);
                    if (coef == 0.0) continue;
                    acc += coef * (second(st.index(b, c, true), st.index(d, a, true)) +
                                   second(st.index(b, c, false), st.index(d, a, false)));
                }
    // -i kappa tr(Y dX)
    if (kappa != 0) {
        Complex lin(0, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                lin += y(a, b) * dfac(b, a) * st.first(st.index(b, a, true));
        acc -= Complex(0, 1) * static_cast<double>(kappa) * lin;
    }
    return acc;
}

} // namespace

Complex apply_maass_laplacian(const ScalarField& f, const SiegelPoint& z, int kappa,
                              const MaassOptions& opts) {
    if (opts.step <= 0.0) throw validation_error("apply_maass_laplacian: step must be > 0");
    const Complex vh = apply_once(f, z, kappa, opts.step);
    if (!opts.richardson) return vh;
    const Complex vh2 = apply_once(f, z, kappa, 0.5 * opts.step);
    return (4.0 * vh2 - vh) / 3.0;
}

} // namespace siegel
