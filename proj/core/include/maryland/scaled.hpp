#pragma once

// Log-scaled complex scalar: value == exp(log_scale) * mant, with the mantissa
// kept at unit magnitude.  Avoids overflow/underflow in quantities that grow
// like exp(l_k / omega) along the renormalization cascade.

#include <cmath>
#include <complex>
#include <limits>

namespace maryland {

struct ScaledComplex {
    std::complex<double> mant{0.0, 0.0};
    double log_scale = 0.0;

    ScaledComplex() = default;
    ScaledComplex(std::complex<double> m, double s) : mant(m), log_scale(s) { renormalize(); }

    static ScaledComplex from(std::complex<double> v) { return ScaledComplex(v, 0.0); }

    /// exp(w), represented without overflow.
    static ScaledComplex from_log(std::complex<double> w) {
        return ScaledComplex(std::exp(std::complex<double>(0.0, w.imag())), w.real());
    }

    void renormalize() {
        double a = std::abs(mant);
        if (a == 0.0 || !std::isfinite(a)) {
            if (a == 0.0) log_scale = -std::numeric_limits<double>::infinity();
            return;
        }
        if (a < 0.5 || a > 2.0) {
            double s = std::log(a);
            log_scale += s;
            mant *= std::exp(-s);
        }
    }

    bool is_zero() const { return mant == std::complex<double>(0.0, 0.0) || log_scale == -std::numeric_limits<double>::infinity(); }

    /// May overflow/underflow if |log_scale| is large; intended for moderate values.
    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        return mant * std::exp(log_scale);
    }

    std::complex<double> log() const { return std::log(mant) + log_scale; }
    double log_abs() const { return std::log(std::abs(mant)) + log_scale; }

    ScaledComplex conj() const { return {std::conj(mant), log_scale}; }
};

inline ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() || b.is_zero()) return ScaledComplex{};
    return {a.mant * b.mant, a.log_scale + b.log_scale};
}

inline ScaledComplex operator*(const ScaledComplex& a, std::complex<double> c) {
    return a * ScaledComplex::from(c);
}

inline ScaledComplex operator*(std::complex<double> c, const ScaledComplex& a) { return a * c; }

inline ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b) {
    return {a.mant / b.mant, a.log_scale - b.log_scale};
}

inline ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.log_scale >= b.log_scale) {
        double r = b.log_scale - a.log_scale;
        return {a.mant + b.mant * std::exp(r), a.log_scale};
    }
    double r = a.log_scale - b.log_scale;
    return {a.mant * std::exp(r) + b.mant, b.log_scale};
}

inline ScaledComplex operator-(const ScaledComplex& a) { return {-a.mant, a.log_scale}; }
inline ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }

/// |a - b| / max(|a|, |b|), computed in the scaled representation.
inline double relative_difference(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    ScaledComplex d = a - b;
    if (d.is_zero()) return 0.0;
    double m = std::max(a.is_zero() ? -std::numeric_limits<double>::infinity() : a.log_abs(),
                        b.is_zero() ? -std::numeric_limits<double>::infinity() : b.log_abs());
    return std::exp(d.log_abs() - m);
}

/// sin(w) without overflow for large |Im w|.
inline ScaledComplex scaled_sin(std::complex<double> w) {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> a = i * w, b = -i * w;  // sin w = (e^a - e^b) / (2i)
    double s = std::max(a.real(), b.real());
    std::complex<double> m = (std::exp(a - s) - std::exp(b - s)) / (2.0 * i);
    return {m, s};
}

/// cos(w) without overflow for large |Im w|.
inline ScaledComplex scaled_cos(std::complex<double> w) {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> a = i * w, b = -i * w;
    double s = std::max(a.real(), b.real());
    std::complex<double> m = (std::exp(a - s) + std::exp(b - s)) / 2.0;
    return {m, s};
}

}  // namespace maryland
