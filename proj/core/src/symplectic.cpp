#include "siegelheat/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

SiegelPoint act(const SymplecticMatrix& g, const SiegelPoint& z) {
    if (g.degree() != z.degree())
        throw validation_error("act: degree mismatch between g and Z");
    const int n = z.degree();
    const CMat zc = z.Z();
    const CMat a = g.A().cast<Complex>();
    const CMat b = g.B().cast<Complex>();
    const CMat c = g.C().cast<Complex>();
    const CMat d = g.D().cast<Complex>();
    const CMat den = c * zc + d;

    Eigen::FullPivLU<CMat> lu(CMat(den.transpose()));
    if (!lu.isInvertible() || lu.rcond() < 1e-13)
        throw numerical_error("act: CZ + D numerically singular");
    // gZ = (AZ+B)(CZ+D)^{-1}; solve the transposed system to avoid an inverse
    const CMat gz = lu.solve(CMat((a * zc + b).transpose())).transpose();
    Mat x(n, n), y(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            x(i, j) = gz(i, j).real();
            y(i, j) = gz(i, j).imag();
        }
    return SiegelPoint(sym_part(x), sym_part(y));
}

namespace {

// W-normalized copy of Z: V = Yw^{-1/2} (Z - Xw) Yw^{-1/2}, so that
// rho(Z, W) and rho(V, i1) have the same spectrum.
CMat normalize_against(const SiegelPoint& z, const SiegelPoint& w) {
    const Mat yinvsqrt = spd_inv_sqrt(w.Y());
    const CMat shifted = z.Z() - w.X().cast<Complex>();
    return csym_part(yinvsqrt.cast<Complex>() * shifted * yinvsqrt.cast<Complex>());
}

} // namespace

CrossRatioSpectrum cross_ratio_spectrum(const SiegelPoint& z, const SiegelPoint& w) {
    if (z.degree() != w.degree())
        throw validation_error("cross_ratio_spectrum: degree mismatch");
    const int n = z.degree();
    const CMat v = normalize_against(z, w);
    const CMat eye = CMat::Identity(n, n);
    const CMat vi = v + Complex(0, 1) * eye;
    Eigen::FullPivLU<CMat> lu(vi);
    if (!lu.isInvertible())
        throw numerical_error("cross_ratio_spectrum: V + i singular");
    const CMat zeta = (v - Complex(0, 1) * eye) * lu.inverse();
    // rho_j = sigma_j(zeta)^2: the cross-ratio matrix is similar to
    // zeta * conj(zeta) = zeta zeta^*, Hermitian PSD with spectrum in [0,1).
    Eigen::JacobiSVD<CMat> svd(zeta);
    Vec rho = svd.singularValues().array().square();
    for (int j = 0; j < n; ++j) {
        if (rho(j) < 0.0) {
            if (rho(j) < -1e-10)
                throw numerical_error("cross_ratio_spectrum: negative eigenvalue beyond clamp");
            rho(j) = 0.0;
        }
        if (rho(j) >= 1.0) {
            if (rho(j) > 1.0 + 1e-8)
                throw numerical_error("cross_ratio_spectrum: eigenvalue >= 1, input corrupt");
            rho(j) = std::nextafter(1.0, 0.0);
        }
    }
    std::sort(rho.data(), rho.data() + n, std::greater<double>());
    return CrossRatioSpectrum{std::move(rho)};
}

RadialVector radial_coordinates(const SiegelPoint& z, const SiegelPoint& w) {
    const CrossRatioSpectrum spec = cross_ratio_spectrum(z, w);
    Vec r(spec.rho.size());
    for (int j = 0; j < r.size(); ++j) {
        const double s = std::sqrt(spec.rho(j));
        if (s >= 1.0)
            throw std::domain_error("radial_coordinates: rho_j >= 1");
        r(j) = std::atanh(s);
    }
    return RadialVector{std::move(r), true};
}

double distance(const SiegelPoint& z, const SiegelPoint& w, DistanceConvention convention) {
    const RadialVector rv = radial_coordinates(z, w);
    const double norm2 = 2.0 * rv.r.norm();  // sum log^2((1+s)/(1-s)) = sum (2 r_j)^2
    return convention == DistanceConvention::paper ? std::sqrt(2.0) * norm2 : norm2;
}

double cosh_product(const SiegelPoint& z, const SiegelPoint& w) {
    const int n = z.degree();
    const CMat num = w.Z() - z.Z().conjugate();
    const Complex det = num.determinant();
    const double dz = z.Y().determinant();
    const double dw = w.Y().determinant();
    return std::pow(4.0, n) * dz * dw / std::norm(det);
}

CMat cayley(const SiegelPoint& z) {
    const int n = z.degree();
    const CMat eye = CMat::Identity(n, n);
    const CMat zc = z.Z();
    Eigen::FullPivLU<CMat> lu(CMat(zc + Complex(0, 1) * eye));
    return csym_part((zc - Complex(0, 1) * eye) * lu.inverse());
}

SiegelPoint inverse_cayley(const CMat& zeta) {
    const int n = static_cast<int>(zeta.rows());
    if (zeta.cols() != n) throw validation_error("inverse_cayley: zeta must be square");
    if ((zeta - zeta.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw validation_error("inverse_cayley: zeta must be complex symmetric");
    Eigen::JacobiSVD<CMat> svd(zeta);
    if (svd.singularValues().maxCoeff() >= 1.0 - 1e-14)
        throw std::domain_error("inverse_cayley: zeta on or outside the unit domain");
    const CMat eye = CMat::Identity(n, n);
    Eigen::FullPivLU<CMat> lu(CMat(eye - zeta));
    const CMat zc = Complex(0, 1) * (eye + zeta) * lu.inverse();
    Mat x(n, n), y(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            x(i, j) = zc(i, j).real();
            y(i, j) = zc(i, j).imag();
        }
    return SiegelPoint(sym_part(x), sym_part(y));
}

Vec iwasawa_a_part(const SymplecticMatrix& g) {
    const int n = g.degree();
    const SiegelPoint w = act(g.inverse(), SiegelPoint::base_point(n));
    Mat p;
    Vec d;
    udu_decompose(w.Y(), p, d);
    Vec h(n);
    for (int j = 0; j < n; ++j) h(j) = -0.5 * std::log(d(j));
    return h;
}

} // namespace siegel
