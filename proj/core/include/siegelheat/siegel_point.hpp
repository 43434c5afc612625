#pragma once

#include <string>

#include "siegelheat/linalg.hpp"

namespace siegel {

// Point Z = X + iY of the Siegel upper half-space H_n: X, Y real symmetric,
// Y positive definite.
class SiegelPoint {
  public:
    SiegelPoint(Mat x, Mat y);

    static SiegelPoint base_point(int n);  // i * 1_n

    int degree() const { return static_cast<int>(x_.rows()); }
    const Mat& X() const { return x_; }
    const Mat& Y() const { return y_; }
    CMat Z() const { return x_.cast<Complex>() + Complex(0, 1) * y_.cast<Complex>(); }

    std::string to_json() const;
    static SiegelPoint from_json(const std::string& text);

  private:
    Mat x_, y_;
};

// Real 2n x 2n matrix g with g^t J g = J.
class SymplecticMatrix {
  public:
    explicit SymplecticMatrix(Mat g);

    static SymplecticMatrix identity(int n);
    static SymplecticMatrix standard_j(int n);
    // [[1, S], [0, 1]] for symmetric S
    static SymplecticMatrix translation(const Mat& s);
    // [[U^t, 0], [0, U^{-1}]], so that g.Z = U^t Z U
    static SymplecticMatrix gl_embedding(const Mat& u);

    int degree() const { return static_cast<int>(g_.rows()) / 2; }
    const Mat& matrix() const { return g_; }
    Mat A() const;
    Mat B() const;
    Mat C() const;
    Mat D() const;
    SymplecticMatrix inverse() const;
    SymplecticMatrix operator*(const SymplecticMatrix& other) const;

    // max |g^t J g - J| entry; <= 1e-10 enforced at construction
    double symplectic_defect() const;

  private:
    Mat g_;
};

// Ordered radial coordinates; canonical means r_1 >= ... >= r_n >= 0.
struct RadialVector {
    Vec r;
    bool canonical = true;
};

// Eigenvalues of the cross-ratio matrix, sorted descending, each in [0, 1).
struct CrossRatioSpectrum {
    Vec rho;
};

Mat standard_skew_form(int n);

} // namespace siegel
