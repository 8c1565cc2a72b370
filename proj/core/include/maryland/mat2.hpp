#pragma once

// 2x2 complex matrices with an optional factored-out log-magnitude, so that
// cocycle products with entries growing like exp(c N) never overflow.

#include <cmath>
#include <complex>
#include <limits>

#include "maryland/ddouble.hpp"
#include "maryland/errors.hpp"

namespace maryland {

template <typename C>
struct Mat2T {
    C a11{}, a12{}, a21{}, a22{};

    static Mat2T identity() { return {C(1.0), C(0.0), C(0.0), C(1.0)}; }

    C det() const { return a11 * a22 - a12 * a21; }

    Mat2T transpose() const { return {a11, a21, a12, a22}; }
};

using Mat2C = Mat2T<std::complex<double>>;
using Mat2DD = Mat2T<DDComplex>;

template <typename C>
Mat2T<C> operator*(const Mat2T<C>& a, const Mat2T<C>& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

template <typename C>
Mat2T<C> operator-(const Mat2T<C>& a, const Mat2T<C>& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

inline Mat2C operator*(std::complex<double> c, const Mat2C& a) {
    return {c * a.a11, c * a.a12, c * a.a21, c * a.a22};
}

inline double frobenius_norm(const Mat2C& a) {
    return std::sqrt(std::norm(a.a11) + std::norm(a.a12) + std::norm(a.a21) + std::norm(a.a22));
}

inline double max_entry_abs(const Mat2C& a) {
    return std::max(std::max(std::abs(a.a11), std::abs(a.a12)),
                    std::max(std::abs(a.a21), std::abs(a.a22)));
}

inline double max_entry_abs(const Mat2DD& a) {
    return std::max(std::max(dd_norm1(a.a11), dd_norm1(a.a12)),
                    std::max(dd_norm1(a.a21), dd_norm1(a.a22)));
}

inline Mat2C mat_inverse(const Mat2C& a) {
    std::complex<double> d = a.det();
    if (std::abs(d) == 0.0) throw SingularMatrixError("mat_inverse: determinant is zero");
    return (1.0 / d) * Mat2C{a.a22, -a.a12, -a.a21, a.a11};
}

/// sigma2 * A^{-1} * sigma2, which equals A^t whenever det A == 1.
inline Mat2C sigma2_conjugate(const Mat2C& a) {
    Mat2C inv = mat_inverse(a);
    // sigma2 = [[0, -i], [i, 0]]; conjugation permutes entries with signs:
    // sigma2 * [[b11,b12],[b21,b22]] * sigma2 = [[b22, -b21], [-b12, b11]]
    return {inv.a22, -inv.a21, -inv.a12, inv.a11};
}

inline Mat2C sigma2_matrix() {
    const std::complex<double> i(0.0, 1.0);
    return {0.0, -i, i, 0.0};
}

template <typename C>
struct ScaledMat2T {
    Mat2T<C> mat = Mat2T<C>::identity();
    double log_scale = 0.0;

    /// Restores max-entry magnitude to [1/2, 2].
    void renormalize() {
        double m = max_entry_abs(mat);
        if (m == 0.0) {
            log_scale = -std::numeric_limits<double>::infinity();
            return;
        }
        if (m < 0.5 || m > 2.0) {
            double s = std::log(m);
            log_scale += s;
            C f(std::exp(-s));
            mat = {mat.a11 * f, mat.a12 * f, mat.a21 * f, mat.a22 * f};
        }
    }
};

using ScaledMat2C = ScaledMat2T<std::complex<double>>;
using ScaledMat2DD = ScaledMat2T<DDComplex>;

template <typename C>
ScaledMat2T<C> operator*(const ScaledMat2T<C>& a, const ScaledMat2T<C>& b) {
    ScaledMat2T<C> r{a.mat * b.mat, a.log_scale + b.log_scale};
    r.renormalize();
    return r;
}

inline ScaledMat2C scaled_inverse(const ScaledMat2C& a) {
    ScaledMat2C r{mat_inverse(a.mat), -a.log_scale};
    r.renormalize();
    return r;
}

/// Determinant of the represented matrix as a log-scaled scalar pair
/// (mantissa, log-magnitude contribution from the scale).
inline std::complex<double> scaled_det_mantissa(const ScaledMat2C& a) { return a.mat.det(); }
inline double scaled_det_log(const ScaledMat2C& a) {
    return std::log(std::abs(a.mat.det())) + 2.0 * a.log_scale;
}

inline Mat2C to_mat2c(const Mat2DD& a) {
    return {{a.a11.re.to_double(), a.a11.im.to_double()},
            {a.a12.re.to_double(), a.a12.im.to_double()},
            {a.a21.re.to_double(), a.a21.im.to_double()},
            {a.a22.re.to_double(), a.a22.im.to_double()}};
}

inline ScaledMat2C to_scaled_mat2c(const ScaledMat2DD& a) {
    ScaledMat2C r{to_mat2c(a.mat), a.log_scale};
    r.renormalize();
    return r;
}

/// ||A - B||_F / max(||A||_F, ||B||_F) in the scaled representation.
inline double relative_frobenius_error(const ScaledMat2C& a, const ScaledMat2C& b) {
    double s = std::max(a.log_scale, b.log_scale);
    Mat2C am = std::exp(a.log_scale - s) * a.mat;
    Mat2C bm = std::exp(b.log_scale - s) * b.mat;
    double denom = std::max(frobenius_norm(am), frobenius_norm(bm));
    if (denom == 0.0) return 0.0;
    return frobenius_norm(am - bm) / denom;
}

}  // namespace maryland
