#include "maryland/cocycle.hpp"

#include <cmath>
#include <numbers>

#include "maryland/ddouble.hpp"
#include "maryland/errors.hpp"

namespace maryland {

namespace {

constexpr double kPi = std::numbers::pi;

// cot(pi z) with the real part reduced to keep sin/cos well conditioned.
std::complex<double> cot_pi(std::complex<double> z) {
    double r = z.real() - std::round(z.real());
    std::complex<double> w(kPi * r, kPi * z.imag());
    return std::cos(w) / std::sin(w);
}

void check_pole(std::complex<double> z, double pole_tol, long orbit_index) {
    double nearest = std::round(z.real());
    std::complex<double> d(z.real() - nearest, z.imag());
    if (std::abs(d) < pole_tol) {
        throw PotentialPoleError("transfer matrix evaluated within pole_tol of an integer",
                                 std::complex<double>(nearest, 0.0), orbit_index);
    }
}

Mat2C transfer_at(std::complex<double> z, double energy, double coupling) {
    std::complex<double> v = energy - coupling * cot_pi(z);
    return {v, std::complex<double>(-1.0), std::complex<double>(1.0), std::complex<double>(0.0)};
}

}  // namespace

Mat2C transfer_matrix(std::complex<double> z, double eta, double l, double pole_tol) {
    check_pole(z, pole_tol, 0);
    double energy = 2.0 * std::cosh(l) * std::cos(eta);
    double coupling = -2.0 * std::sinh(l) * std::sin(eta);
    return transfer_at(z, energy, coupling);
}

Mat2C transfer_inverse(std::complex<double> z, double eta, double l, double pole_tol) {
    Mat2C f = transfer_matrix(z, eta, l, pole_tol);
    return {std::complex<double>(0.0), std::complex<double>(1.0), std::complex<double>(-1.0),
            f.a11};
}

namespace {

ScaledMat2C cocycle_double(const SpectralParams& p, long n, double pole_tol) {
    double energy = p.energy();
    double coupling = p.coupling();
    ScaledMat2C acc;
    if (n >= 0) {
        for (long k = 0; k < n; ++k) {
            double x = std::fma(static_cast<double>(k), p.omega, p.theta);
            check_pole({x, 0.0}, pole_tol, k);
            ScaledMat2C f{transfer_at({x, 0.0}, energy, coupling), 0.0};
            acc = f * acc;
        }
    } else {
        for (long k = -1; k >= n; --k) {
            double x = std::fma(static_cast<double>(k), p.omega, p.theta);
            check_pole({x, 0.0}, pole_tol, k);
            Mat2C f = transfer_at({x, 0.0}, energy, coupling);
            ScaledMat2C finv{{std::complex<double>(0.0), std::complex<double>(1.0),
                              std::complex<double>(-1.0), f.a11},
                             0.0};
            acc = finv * acc;  // P_k = F(theta + k omega)^{-1} P_{k+1}
        }
    }
    return acc;
}

ScaledMat2C cocycle_extended(const SpectralParams& p, long n, double pole_tol) {
    DDouble energy = DDouble(2.0) * dd_cosh(DDouble(p.l)) * dd_cos(DDouble(p.eta));
    DDouble coupling = DDouble(-2.0) * dd_sinh(DDouble(p.l)) * dd_sin(DDouble(p.eta));
    DDouble omega(p.omega), theta(p.theta);

    auto factor = [&](long k) {
        DDouble x = theta + omega * DDouble(static_cast<double>(k));
        DDouble r = x - DDouble(std::round(x.hi));
        if (std::fabs(r.to_double()) < pole_tol) {
            throw PotentialPoleError("transfer matrix evaluated within pole_tol of an integer",
                                     std::complex<double>(std::round(x.hi), 0.0), k);
        }
        DDouble v = energy - coupling * dd_cot_pi(x);
        return v;
    };

    ScaledMat2DD acc;
    if (n >= 0) {
        for (long k = 0; k < n; ++k) {
            Mat2DD f{DDComplex(factor(k)), DDComplex(-1.0), DDComplex(1.0), DDComplex(0.0)};
            acc = ScaledMat2DD{f, 0.0} * acc;
        }
    } else {
        for (long k = -1; k >= n; --k) {
            Mat2DD finv{DDComplex(0.0), DDComplex(1.0), DDComplex(-1.0), DDComplex(factor(k))};
            acc = ScaledMat2DD{finv, 0.0} * acc;
        }
    }
    return to_scaled_mat2c(acc);
}

}  // namespace

ScaledMat2C cocycle_product(const SpectralParams& p, long n, const CocycleOptions& opts) {
    if (opts.precision == Precision::kExtended) return cocycle_extended(p, n, opts.pole_tol);
    return cocycle_double(p, n, opts.pole_tol);
}

}  // namespace maryland
