#pragma once

// Double-double ("compensated") arithmetic: an unevaluated sum of two doubles
// giving ~31 significant decimal digits.  Used as the optional extended backend
// for long cocycle products where entry cancellation exhausts plain doubles.

#include <cmath>
#include <cstdlib>

namespace maryland {

struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double h) : hi(h), lo(0.0) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
    double to_double() const { return hi + lo; }
};

namespace dd_detail {

// Knuth two-sum: s + err == a + b exactly.
inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// |a| >= |b| assumed.
inline DDouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

// Exact product via FMA.
inline DDouble two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

}  // namespace dd_detail

inline DDouble operator+(DDouble a, DDouble b) {
    using namespace dd_detail;
    DDouble s = two_sum(a.hi, b.hi);
    DDouble t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DDouble operator-(DDouble a) { return {-a.hi, -a.lo}; }
inline DDouble operator-(DDouble a, DDouble b) { return a + (-b); }

inline DDouble operator*(DDouble a, DDouble b) {
    using namespace dd_detail;
    DDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DDouble operator/(DDouble a, DDouble b) {
    using namespace dd_detail;
    double q1 = a.hi / b.hi;
    DDouble r = a - b * DDouble(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DDouble(q2);
    double q3 = r.hi / b.hi;
    DDouble q = quick_two_sum(q1, q2);
    return q + DDouble(q3);
}

inline DDouble& operator+=(DDouble& a, DDouble b) { return a = a + b; }
inline DDouble& operator-=(DDouble& a, DDouble b) { return a = a - b; }
inline DDouble& operator*=(DDouble& a, DDouble b) { return a = a * b; }
inline DDouble& operator/=(DDouble& a, DDouble b) { return a = a / b; }

inline bool operator<(DDouble a, DDouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DDouble a, DDouble b) { return b < a; }

inline DDouble dd_abs(DDouble a) { return a.hi < 0.0 ? -a : a; }

inline constexpr DDouble dd_pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DDouble dd_half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr DDouble dd_ln2{6.931471805599452862e-01, 2.319046813846299558e-17};

inline DDouble dd_ldexp(DDouble a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }

/// exp(x) by argument reduction against ln 2 and a Taylor tail.
inline DDouble dd_exp(DDouble x) {
    if (x.hi > 709.0) return {HUGE_VAL, 0.0};
    if (x.hi < -709.0) return {0.0, 0.0};
    int k = static_cast<int>(std::llround(x.hi / dd_ln2.hi));
    DDouble r = x - dd_ln2 * DDouble(static_cast<double>(k));
    // |r| <= ln2/2; Taylor series for exp(r)
    DDouble sum{1.0}, term{1.0};
    for (int n = 1; n <= 24; ++n) {
        term = term * r / DDouble(static_cast<double>(n));
        sum += term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    return dd_ldexp(sum, k);
}

namespace dd_detail {

inline DDouble sin_taylor(DDouble r) {
    DDouble r2 = r * r, term = r, sum = r;
    for (int n = 1; n <= 14; ++n) {
        term = term * r2 / DDouble(static_cast<double>(2 * n * (2 * n + 1)));
        term = -term;
        sum += term;
        if (std::fabs(term.hi) < 1e-35) break;
    }
    return sum;
}

inline DDouble cos_taylor(DDouble r) {
    DDouble r2 = r * r, term{1.0}, sum{1.0};
    for (int n = 1; n <= 14; ++n) {
        term = term * r2 / DDouble(static_cast<double>((2 * n - 1) * 2 * n));
        term = -term;
        sum += term;
        if (std::fabs(term.hi) < 1e-35) break;
    }
    return sum;
}

}  // namespace dd_detail

/// sin and cos with reduction modulo pi/2.  Accurate for |x| up to ~1e10.
inline void dd_sincos(DDouble x, DDouble& s, DDouble& c) {
    using namespace dd_detail;
    long long k = std::llround(x.hi / dd_half_pi.hi);
    DDouble r = x - dd_half_pi * DDouble(static_cast<double>(k));
    DDouble sr = sin_taylor(r), cr = cos_taylor(r);
    switch (((k % 4) + 4) % 4) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

inline DDouble dd_sin(DDouble x) { DDouble s, c; dd_sincos(x, s, c); return s; }
inline DDouble dd_cos(DDouble x) { DDouble s, c; dd_sincos(x, s, c); return c; }

inline DDouble dd_sinh(DDouble x) {
    DDouble e = dd_exp(x);
    return dd_ldexp(e - DDouble(1.0) / e, -1);
}

inline DDouble dd_cosh(DDouble x) {
    DDouble e = dd_exp(x);
    return dd_ldexp(e + DDouble(1.0) / e, -1);
}

/// cot(pi x) for real x, with the reduction x -> x - round(x) done exactly.
inline DDouble dd_cot_pi(DDouble x) {
    DDouble r = x - DDouble(std::round(x.hi));
    DDouble s, c;
    dd_sincos(dd_pi * r, s, c);
    return c / s;
}

/// Complex number over DDouble scalars.
struct DDComplex {
    DDouble re, im;

    DDComplex() = default;
    DDComplex(DDouble r) : re(r), im(0.0) {}
    DDComplex(DDouble r, DDouble i) : re(r), im(i) {}
    DDComplex(double r, double i = 0.0) : re(r), im(i) {}
};

inline DDComplex operator+(DDComplex a, DDComplex b) { return {a.re + b.re, a.im + b.im}; }
inline DDComplex operator-(DDComplex a, DDComplex b) { return {a.re - b.re, a.im - b.im}; }
inline DDComplex operator-(DDComplex a) { return {-a.re, -a.im}; }
inline DDComplex operator*(DDComplex a, DDComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline DDComplex operator/(DDComplex a, DDComplex b) {
    DDouble d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline double dd_norm1(DDComplex z) { return std::fabs(z.re.hi) + std::fabs(z.im.hi); }

}  // namespace maryland
