#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <random>

#include "siegelheat/maass.hpp"
#include "siegelheat/symplectic.hpp"

using namespace siegel;

namespace {

SiegelPoint point1(double x, double y) {
    Mat mx(1, 1), my(1, 1);
    mx << x;
    my << y;
    return SiegelPoint(mx, my);
}

std::mt19937_64 rng(20240811ull);

Mat random_symmetric(int n, double scale) {
    std::normal_distribution<double> g;
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = scale * g(rng);
    return sym_part(m);
}

SiegelPoint random_point(int n) {
    Mat m = random_symmetric(n, 0.7);
    Mat y = m * m.transpose() + 0.3 * Mat::Identity(n, n);
    return SiegelPoint(random_symmetric(n, 0.5), y);
}

// exp of a random element of the symplectic Lie algebra
SymplecticMatrix random_symplectic(int n, double scale = 0.4) {
    Mat a(n, n);
    std::normal_distribution<double> g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = scale * g(rng);
    const Mat b = random_symmetric(n, scale);
    const Mat c = random_symmetric(n, scale);
    Mat x(2 * n, 2 * n);
    x.topLeftCorner(n, n) = a;
    x.topRightCorner(n, n) = b;
    x.bottomLeftCorner(n, n) = c;
    x.bottomRightCorner(n, n) = -a.transpose();
    return SymplecticMatrix(x.exp());
}

// defining product (Z-W)(conj Z - W)^{-1}(conj Z - conj W)(Z - conj W)^{-1};
// independent oracle for the SVD-based spectrum
Vec cross_ratio_brute(const SiegelPoint& z, const SiegelPoint& w) {
    const CMat zc = z.Z(), wc = w.Z();
    const CMat m = (zc - wc) * (zc.conjugate() - wc).inverse() *
                   (zc.conjugate() - wc.conjugate()) * (zc - wc.conjugate()).inverse();
    Eigen::ComplexEigenSolver<CMat> es(m);
    Vec out(z.degree());
    for (int j = 0; j < z.degree(); ++j) {
        REQUIRE(std::abs(es.eigenvalues()(j).imag()) < 1e-8);
        out(j) = es.eigenvalues()(j).real();
    }
    std::sort(out.data(), out.data() + out.size(), std::greater<double>());
    return out;
}

} // namespace

TEST_CASE("act: identity, translation, inversion") {
    const SiegelPoint z0 = SiegelPoint::base_point(2);
    const SiegelPoint z1 = act(SymplecticMatrix::identity(2), z0);
    CHECK((z1.X() - z0.X()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((z1.Y() - z0.Y()).cwiseAbs().maxCoeff() < 1e-14);

    Mat s(1, 1);
    s << 1.0;
    const SiegelPoint t = act(SymplecticMatrix::translation(s), point1(0, 1));
    CHECK(t.X()(0, 0) == doctest::Approx(1.0));
    CHECK(t.Y()(0, 0) == doctest::Approx(1.0));

    // J_1 . 2i = -1/(2i) = i/2
    const SiegelPoint j = act(SymplecticMatrix::standard_j(1), point1(0, 2));
    CHECK(j.X()(0, 0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(j.Y()(0, 0) == doctest::Approx(0.5));
}

TEST_CASE("act: non-symplectic matrix rejected") {
    Mat g = Mat::Identity(2, 2);
    g(0, 0) = 2.0;
    CHECK_THROWS_AS(SymplecticMatrix{g}, validation_error);
}

TEST_CASE("imaginary part transform and determinant identity") {
    for (int n : {1, 2, 3}) {
        for (int rep = 0; rep < 20; ++rep) {
            const SiegelPoint z = random_point(n);
            const SymplecticMatrix g = random_symplectic(n);
            const SiegelPoint gz = act(g, z);
            const CMat den = g.C().cast<Complex>() * z.Z() + g.D().cast<Complex>();
            // Im(gZ) = (CZ+D)^{-t} Im(Z) (C conj(Z) + D)^{-1}
            const CMat lhs = gz.Y().cast<Complex>();
            const CMat rhs = den.transpose().inverse() * z.Y().cast<Complex>() *
                             (g.C().cast<Complex>() * z.Z().conjugate() + g.D().cast<Complex>()).inverse();
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
            const double det_ratio = z.Y().determinant() / std::norm(den.determinant());
            CHECK(gz.Y().determinant() == doctest::Approx(det_ratio).epsilon(1e-10));
        }
    }
}

TEST_CASE("act respects composition") {
    for (int n : {1, 2, 3}) {
        for (int rep = 0; rep < 10; ++rep) {
            const SiegelPoint z = random_point(n);
            const SymplecticMatrix g1 = random_symplectic(n);
            const SymplecticMatrix g2 = random_symplectic(n);
            const SiegelPoint a = act(g1 * g2, z);
            const SiegelPoint b = act(g1, act(g2, z));
            CHECK((a.X() - b.X()).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((a.Y() - b.Y()).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("cross ratio: examples and brute-force agreement") {
    const SiegelPoint zi = point1(0, 1);
    const SiegelPoint z2i = point1(0, 2);
    CHECK(cross_ratio_spectrum(zi, zi).rho(0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(cross_ratio_spectrum(zi, z2i).rho(0) == doctest::Approx(1.0 / 9.0));

    // rho(i e^{2r}, i) = tanh^2(r)
    for (double r : {0.3, 1.0, 2.5}) {
        const SiegelPoint ze = point1(0, std::exp(2 * r));
        const double th = std::tanh(r);
        CHECK(cross_ratio_spectrum(ze, zi).rho(0) == doctest::Approx(th * th).epsilon(1e-12));
    }

    for (int n : {1, 2, 3}) {
        for (int rep = 0; rep < 10; ++rep) {
            const SiegelPoint z = random_point(n);
            const SiegelPoint w = random_point(n);
            const Vec a = cross_ratio_spectrum(z, w).rho;
            const Vec b = cross_ratio_brute(z, w);
            CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
            CHECK(a.minCoeff() >= 0.0);
            CHECK(a.maxCoeff() < 1.0);
        }
    }
}

TEST_CASE("cross ratio symmetry and invariance") {
    for (int n : {1, 2}) {
        for (int rep = 0; rep < 25; ++rep) {
            const SiegelPoint z = random_point(n);
            const SiegelPoint w = random_point(n);
            const SymplecticMatrix g = random_symplectic(n);
            const Vec a = cross_ratio_spectrum(z, w).rho;
            const Vec b = cross_ratio_spectrum(w, z).rho;
            const Vec c = cross_ratio_spectrum(act(g, z), act(g, w)).rho;
            CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
            CHECK((a - c).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("radial coordinates") {
    const SiegelPoint zi = point1(0, 1);
    CHECK(radial_coordinates(zi, zi).r(0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(radial_coordinates(zi, point1(0, 2)).r(0) == doctest::Approx(0.5 * std::log(2.0)));

    Mat x = Mat::Zero(2, 2), y(2, 2);
    y << std::exp(2.0), 0, 0, std::exp(1.0);
    const RadialVector rv = radial_coordinates(SiegelPoint(x, y), SiegelPoint::base_point(2));
    CHECK(rv.r(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rv.r(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rv.canonical);
}

TEST_CASE("distance: conventions and symplectic invariance") {
    const SiegelPoint zi = point1(0, 1);
    const SiegelPoint z2i = point1(0, 2);
    CHECK(distance(zi, zi) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(distance(zi, z2i, DistanceConvention::paper) ==
          doctest::Approx(std::sqrt(2.0) * std::log(2.0)));
    CHECK(distance(zi, z2i, DistanceConvention::metric) == doctest::Approx(std::log(2.0)));

    for (int n : {1, 2, 3}) {
        for (int rep = 0; rep < 20; ++rep) {
            const SiegelPoint z = random_point(n);
            const SiegelPoint w = random_point(n);
            const SymplecticMatrix g = random_symplectic(n);
            for (auto conv : {DistanceConvention::paper, DistanceConvention::metric}) {
                const double d1 = distance(z, w, conv);
                const double d2 = distance(act(g, z), act(g, w), conv);
                CHECK(d1 == doctest::Approx(d2).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("cosh product: examples and radial consistency") {
    CHECK(cosh_product(SiegelPoint::base_point(2), SiegelPoint::base_point(2)) ==
          doctest::Approx(1.0));
    CHECK(cosh_product(point1(0, 1), point1(0, 2)) == doctest::Approx(8.0 / 9.0));
    for (double s : {0.5, 1.0, 3.0})
        CHECK(cosh_product(point1(0, 1), point1(s, 1)) == doctest::Approx(4.0 / (s * s + 4.0)));

    for (int n : {1, 2, 3}) {
        for (int rep = 0; rep < 10; ++rep) {
            const SiegelPoint z = random_point(n);
            const SiegelPoint w = random_point(n);
            const RadialVector rv = radial_coordinates(z, w);
            double prod = 1.0;
            for (int j = 0; j < n; ++j) prod /= std::pow(std::cosh(rv.r(j)), 2);
            CHECK(cosh_product(z, w) == doctest::Approx(prod).epsilon(1e-10));
        }
    }
}

TEST_CASE("cayley transform round trip") {
    const CMat zero = cayley(SiegelPoint::base_point(3));
    CHECK(zero.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(cayley(point1(0, 2))(0, 0).real() == doctest::Approx(1.0 / 3.0));
    CHECK(std::abs(cayley(point1(0, 2))(0, 0).imag()) < 1e-14);

    const SiegelPoint back = inverse_cayley(CMat::Zero(2, 2));
    CHECK((back.Y() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

    for (int n : {1, 2, 3}) {
        for (int rep = 0; rep < 10; ++rep) {
            const SiegelPoint z = random_point(n);
            const SiegelPoint rt = inverse_cayley(cayley(z));
            CHECK((rt.X() - z.X()).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((rt.Y() - z.Y()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }

    CHECK_THROWS_AS(inverse_cayley(CMat::Identity(2, 2)), std::domain_error);
}

TEST_CASE("iwasawa a-part") {
    CHECK(iwasawa_a_part(SymplecticMatrix::identity(2)).cwiseAbs().maxCoeff() < 1e-14);

    Mat d(2, 2);
    d << std::exp(1.0), 0, 0, std::exp(-1.0);
    CHECK(iwasawa_a_part(SymplecticMatrix(d))(0) == doctest::Approx(1.0));

    // n=1, g = [[1,0],[1,1]]: direct K0 A0 N0 factorization gives
    // e^H cos t = 1, e^H sin t = 1, so H = (1/2) log 2
    Mat g(2, 2);
    g << 1, 0, 1, 1;
    CHECK(iwasawa_a_part(SymplecticMatrix(g))(0) == doctest::Approx(0.5 * std::log(2.0)));

    // cross-check against an explicit KAN factorization at n=1
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        const double th = 3.0 * u(rng), hh = u(rng), xx = 2.0 * u(rng);
        Mat k(2, 2), a(2, 2), nn(2, 2);
        k << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
        a << std::exp(hh), 0, 0, std::exp(-hh);
        nn << 1, xx, 0, 1;
        const SymplecticMatrix gk((k * a * nn).eval());
        CHECK(iwasawa_a_part(gk)(0) == doctest::Approx(hh).epsilon(1e-10));
    }

    // H is left-K0-invariant and right-N0-invariant; on A it is log a
    for (int n : {2, 3}) {
        std::normal_distribution<double> gs;
        for (int rep = 0; rep < 10; ++rep) {
            const SymplecticMatrix g = random_symplectic(n);
            const Vec h = iwasawa_a_part(g);

            // random k0 from a Haar-ish unitary (QR of a complex Gaussian)
            CMat ginibre(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ginibre(i, j) = Complex(gs(rng), gs(rng));
            const CMat q = Eigen::HouseholderQR<CMat>(ginibre).householderQ();
            Mat k0(2 * n, 2 * n);
            k0.topLeftCorner(n, n) = q.real();
            k0.topRightCorner(n, n) = q.imag();
            k0.bottomLeftCorner(n, n) = -q.imag();
            k0.bottomRightCorner(n, n) = q.real();
            const Vec hk = iwasawa_a_part(SymplecticMatrix(k0) * g);
            CHECK((hk - h).cwiseAbs().maxCoeff() < 1e-9);

            // random n0: P unit upper-triangular, Q with P Q^t = Q P^t
            Mat p = Mat::Identity(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) p(i, j) = 0.5 * gs(rng);
            const Mat qs = p * random_symmetric(n, 0.5);  // Q = P S gives P Q^t = Q P^t
            Mat n0 = Mat::Zero(2 * n, 2 * n);
            n0.topLeftCorner(n, n) = p;
            n0.topRightCorner(n, n) = qs;
            n0.bottomRightCorner(n, n) = p.inverse().transpose();
            const Vec hn = iwasawa_a_part(g * SymplecticMatrix(n0));
            CHECK((hn - h).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("maass laplacian: constants, power fields, determinant fields") {
    const SiegelPoint z = point1(0.2, 1.3);
    const ScalarField one = [](const Mat&, const Mat&) { return Complex(1, 0); };
    CHECK(std::abs(apply_maass_laplacian(one, z, 0)) < 1e-9);

    // n=1, kappa=0: y^s has eigenvalue s(s-1)
    for (double s : {2.0, 3.5, 6.0}) {
        const ScalarField ys = [s](const Mat&, const Mat& y) {
            return Complex(std::pow(y(0, 0), s), 0.0);
        };
        const Complex v = apply_maass_laplacian(ys, z, 0);
        const double expect = s * (s - 1.0) * std::pow(z.Y()(0, 0), s);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-6));
        CHECK(std::abs(v.imag()) < 1e-9);
    }

    // n=2, kappa=0: det(Y)^s has eigenvalue n s (s - (n+1)/2)
    Mat x2 = random_symmetric(2, 0.3);
    Mat ybase = random_symmetric(2, 0.4);
    Mat y2 = ybase * ybase.transpose() + Mat::Identity(2, 2);
    const SiegelPoint z2(x2, y2);
    for (double s : {1.0, 2.5}) {
        const ScalarField dets = [s](const Mat&, const Mat& y) {
            return Complex(std::pow(y.determinant(), s), 0.0);
        };
        const Complex v = apply_maass_laplacian(dets, z2, 0, {1e-3, true});
        const double expect = 2.0 * s * (s - 1.5) * std::pow(z2.Y().determinant(), s);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-6));
    }

    // weight-kappa eigenvalue on det(Y)^{kappa/2} exp(2 pi i tr(TZ)),
    // a holomorphic test field: eigenvalue (n kappa / 4)(kappa - n - 1)
    for (int n : {1, 2}) {
        const int kappa = 8;
        Mat t = Mat::Identity(n, n);
        t(0, 0) = 2.0;
        const ScalarField phi = [t, kappa](const Mat& x, const Mat& y) {
            const Complex tr = (t.cast<Complex>() *
                                (x.cast<Complex>() + Complex(0, 1) * y.cast<Complex>()))
                                   .trace();
            return std::pow(y.determinant(), kappa / 2.0) *
                   std::exp(Complex(0, 2 * EIGEN_PI) * tr);
        };
        const SiegelPoint zz = n == 1 ? point1(0.1, 0.9) : z2;
        const Complex v = apply_maass_laplacian(phi, zz, kappa, {5e-4, true});
        const Complex f0 = phi(zz.X(), zz.Y());
        const double expect = n * kappa / 4.0 * (kappa - n - 1.0);
        CHECK(std::abs(v / f0 - expect) < 1e-4 * std::abs(expect));
    }

    // stencil leaving the cone
    CHECK_THROWS_AS(apply_maass_laplacian(one, point1(0.0, 1e-4), 0), numerical_error);
}

TEST_CASE("siegel point json round trip") {
    const SiegelPoint z = random_point(2);
    const SiegelPoint back = SiegelPoint::from_json(z.to_json());
    CHECK((back.X() - z.X()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.Y() - z.Y()).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS(SiegelPoint::from_json("{\"n\": 1, \"X\": [0]}"));
}
