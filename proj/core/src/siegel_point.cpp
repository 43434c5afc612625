#include "siegelheat/siegel_point.hpp"

#include <json.hpp>

#include <sstream>

namespace siegel {

SiegelPoint::SiegelPoint(Mat x, Mat y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.rows() != x_.cols() || y_.rows() != y_.cols() || x_.rows() != y_.rows())
        throw validation_error("SiegelPoint: X and Y must be square of equal size");
    if (x_.rows() < 1) throw validation_error("SiegelPoint: degree must be >= 1");
    if (!is_symmetric(x_) || !is_symmetric(y_))
        throw validation_error("SiegelPoint: X and Y must be symmetric (tol 1e-12)");
    x_ = sym_part(x_);
    y_ = sym_part(y_);
    if (min_eigenvalue_sym(y_) <= 0.0)
        throw validation_error("SiegelPoint: Y must be positive definite");
}

SiegelPoint SiegelPoint::base_point(int n) {
    return SiegelPoint(Mat::Zero(n, n), Mat::Identity(n, n));
}

std::string SiegelPoint::to_json() const {
    nlohmann::json j;
    const int n = degree();
    j["n"] = n;
    auto& jx = j["X"] = nlohmann::json::array();
    auto& jy = j["Y"] = nlohmann::json::array();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            jx.push_back(x_(a, b));
            jy.push_back(y_(a, b));
        }
    return j.dump();
}

SiegelPoint SiegelPoint::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int n = j.at("n").get<int>();
    if (n < 1) throw validation_error("SiegelPoint::from_json: n must be >= 1");
    const auto& jx = j.at("X");
    const auto& jy = j.at("Y");
    if (static_cast<int>(jx.size()) != n * n || static_cast<int>(jy.size()) != n * n)
        throw validation_error("SiegelPoint::from_json: X and Y must be row-major n*n arrays");
    Mat x(n, n), y(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            x(a, b) = jx[a * n + b].get<double>();
            y(a, b) = jy[a * n + b].get<double>();
        }
    return SiegelPoint(std::move(x), std::move(y));
}

Mat standard_skew_form(int n) {
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    return j;
}

SymplecticMatrix::SymplecticMatrix(Mat g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols() || g_.rows() % 2 != 0 || g_.rows() < 2)
        throw validation_error("SymplecticMatrix: matrix must be 2n x 2n");
    if (symplectic_defect() > 1e-10)
        throw validation_error("SymplecticMatrix: g^t J g != J (tol 1e-10)");
}

double SymplecticMatrix::symplectic_defect() const {
    const int n = degree();
    const Mat j = standard_skew_form(n);
    return (g_.transpose() * j * g_ - j).cwiseAbs().maxCoeff();
}

SymplecticMatrix SymplecticMatrix::identity(int n) {
    return SymplecticMatrix(Mat::Identity(2 * n, 2 * n));
}

SymplecticMatrix SymplecticMatrix::standard_j(int n) {
    return SymplecticMatrix(standard_skew_form(n));
}

SymplecticMatrix SymplecticMatrix::translation(const Mat& s) {
    if (!is_symmetric(s, 1e-10))
        throw validation_error("SymplecticMatrix::translation: S must be symmetric");
    const int n = static_cast<int>(s.rows());
    Mat g = Mat::Identity(2 * n, 2 * n);
    g.topRightCorner(n, n) = sym_part(s);
    return SymplecticMatrix(std::move(g));
}

SymplecticMatrix SymplecticMatrix::gl_embedding(const Mat& u) {
    const int n = static_cast<int>(u.rows());
    if (u.cols() != n) throw validation_error("gl_embedding: U must be square");
    Mat g = Mat::Zero(2 * n, 2 * n);
    g.topLeftCorner(n, n) = u.transpose();
    g.bottomRightCorner(n, n) = u.inverse();
    return SymplecticMatrix(std::move(g));
}

Mat SymplecticMatrix::A() const { const int n = degree(); return g_.topLeftCorner(n, n); }
Mat SymplecticMatrix::B() const { const int n = degree(); return g_.topRightCorner(n, n); }
Mat SymplecticMatrix::C() const { const int n = degree(); return g_.bottomLeftCorner(n, n); }
Mat SymplecticMatrix::D() const { const int n = degree(); return g_.bottomRightCorner(n, n); }

SymplecticMatrix SymplecticMatrix::inverse() const {
    // g^{-1} = J^t g^t J, exact for symplectic g
    const Mat j = standard_skew_form(degree());
    return SymplecticMatrix(j.transpose() * g_.transpose() * j);
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& other) const {
    return SymplecticMatrix(g_ * other.g_);
}

} // namespace siegel
