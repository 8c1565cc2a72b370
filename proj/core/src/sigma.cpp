#include "maryland/sigma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "maryland/ddouble.hpp"
#include "maryland/errors.hpp"

namespace maryland {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

// sin(pi n x) with the reduction n x mod 1 carried in double-double, so the
// result stays accurate for n in the thousands.
double sin_pi_n(double n, double x) {
    DDouble nx = dd_detail::two_prod(n, x);
    double k = std::round(nx.hi);
    DDouble r = nx - DDouble(k);
    double s = std::sin(kPi * r.to_double());
    // sin(pi(r + k)) = (-1)^k sin(pi r)
    return (std::fmod(std::fabs(k), 2.0) == 1.0) ? -s : s;
}

// log(1 + exp(w)) without overflow for large Re w.
std::complex<double> log1p_exp(std::complex<double> w) {
    if (w.real() > 0.0) return w + std::log(1.0 + std::exp(-w));
    return std::log(1.0 + std::exp(w));
}

// Exponent of the reflection relation sigma(z) * sigma(-z) = exp(g(z)).
std::complex<double> reflection_exponent(std::complex<double> z, double omega) {
    return -kI * z * z / (4.0 * kPi * omega) + kI * kPi / (12.0 * omega) +
           kI * kPi * omega / 12.0;
}

}  // namespace

double sigma_lattice_distance(std::complex<double> z, double omega) {
    // all lattice points are real, so |Im z| is a lower bound
    if (std::fabs(z.imag()) >= 1.0) return std::fabs(z.imag());
    double best = std::numeric_limits<double>::infinity();
    double base = kPi * (1.0 + omega);
    for (int sign = -1; sign <= 1; sign += 2) {
        double target = sign * z.real();
        int kmax = static_cast<int>(std::max(0.0, (target - base) / (2.0 * kPi * omega))) + 1;
        for (int k = 0; k <= kmax; ++k) {
            double rem = target - base - 2.0 * kPi * omega * k;
            double m = std::max(0.0, std::round(rem / (2.0 * kPi)));
            for (double mm : {m, m + 1.0}) {
                double x = sign * (base + 2.0 * kPi * omega * k + 2.0 * kPi * mm);
                double d = std::hypot(z.real() - x, z.imag());
                best = std::min(best, d);
            }
        }
    }
    return best;
}

std::complex<double> residue_inv_sigma(double omega) {
    return -std::sqrt(omega) *
           std::exp(kI * (kPi / (12.0 * omega) + kPi * omega / 12.0 + kPi / 4.0));
}

SigmaContext SigmaContext::create(double omega, const SigmaOptions& opts) {
    if (!(omega > 0.0 && omega < 1.0))
        throw std::invalid_argument("SigmaContext: omega must lie in (0, 1)");
    SigmaContext ctx;
    ctx.omega_ = omega;
    ctx.opts_ = opts;

    const double delta = opts.strip_delta;
    const int n_cap = 20000;
    int quiet = 0;
    std::vector<double>& inv1 = ctx.inv_sin1_;
    std::vector<double>& inv2 = ctx.inv_sin2_;
    inv1.push_back(0.0);  // 1-based
    inv2.push_back(0.0);
    for (int n = 1; n <= n_cap; ++n) {
        double s1 = sin_pi_n(n, omega);
        double s2 = sin_pi_n(n, 1.0 / omega);
        if (std::fabs(s1) < opts.sin_floor)
            throw SmallDenominatorError("SigmaContext: sin(pi n omega) below sin_floor", n, s1);
        if (std::fabs(s2) < opts.sin_floor)
            throw SmallDenominatorError("SigmaContext: sin(pi n / omega) below sin_floor", n, s2);
        inv1.push_back(1.0 / s1);
        inv2.push_back(1.0 / s2);
        double bound = (std::exp(-delta * n) * std::fabs(inv1[n]) +
                        std::exp(-delta * n / omega) * std::fabs(inv2[n])) /
                       (2.0 * n);
        quiet = (bound < 1e-20) ? quiet + 1 : 0;
        if (quiet >= 8 && n >= 64) break;
    }

    size_t m = inv1.size();
    ctx.suffix_max1_.assign(m + 1, 0.0);
    ctx.suffix_max2_.assign(m + 1, 0.0);
    for (size_t n = m; n-- > 1;) {
        ctx.suffix_max1_[n] = std::max(ctx.suffix_max1_[n + 1], std::fabs(inv1[n]));
        ctx.suffix_max2_[n] = std::max(ctx.suffix_max2_[n + 1], std::fabs(inv2[n]));
    }
    return ctx;
}

std::complex<double> SigmaContext::series_lower(std::complex<double> z) const {
    // log sigma(z) = sum_{n>=1} (-1)^n/(2 i n) [e^{-inz}/sin(pi n omega)
    //                                            + e^{-inz/omega}/sin(pi n / omega)]
    std::complex<double> q1 = std::exp(-kI * z);
    std::complex<double> q2 = std::exp(-kI * z / omega_);
    double a1 = std::abs(q1), a2 = std::abs(q2);
    std::complex<double> p1 = 1.0, p2 = 1.0;
    double b1 = 1.0, b2 = 1.0;
    std::complex<double> sum = 0.0;
    const size_t n_max = inv_sin1_.size() - 1;
    for (size_t n = 1; n <= n_max; ++n) {
        p1 *= q1;
        p2 *= q2;
        b1 *= a1;
        b2 *= a2;
        double sgn = (n % 2 == 1) ? -1.0 : 1.0;
        sum += sgn * (-kI) / (2.0 * static_cast<double>(n)) *
               (p1 * inv_sin1_[n] + p2 * inv_sin2_[n]);
        if (n + 1 <= n_max) {
            double tail = (suffix_max1_[n + 1] * b1 * a1 / (1.0 - a1) +
                           suffix_max2_[n + 1] * b2 * a2 / (1.0 - a2)) /
                          (2.0 * (n + 1));
            if (tail < 1e-17 * std::max(1.0, std::abs(sum))) return sum;
        }
    }
    throw Error("sigma series did not converge within the precomputed table");
}

std::complex<double> SigmaContext::band_integral(std::complex<double> z) const {
    // log sigma(z) = - int_C exp(z t) / (4 t sinh(pi t) sinh(pi omega t)) dt,
    // C being the real line indented below t = 0.  Valid for |Re z| < pi(1+omega).
    const double omega = omega_;
    auto kernel = [z, omega](std::complex<double> t) -> std::complex<double> {
        double at = std::abs(t.real());
        if (at > 20.0 && std::fabs(t.imag()) < 1e-12) {
            // asymptotic form, avoids overflow of sinh for large real t
            double tr = t.real();
            double e = z.real() * tr - kPi * (1.0 + omega) * at;
            std::complex<double> phase = std::exp(kI * (z.imag() * tr));
            double damp1 = 1.0 - std::exp(-2.0 * kPi * at);
            double damp2 = 1.0 - std::exp(-2.0 * kPi * omega * at);
            return std::exp(e) * phase / (tr * damp1 * damp2);
        }
        return std::exp(z * t) / (4.0 * t * std::sinh(kPi * t) * std::sinh(kPi * omega * t));
    };

    const double rc = 0.5;
    double rate = kPi * (1.0 + omega) - std::fabs(z.real());
    double scale = std::min(4.0, 3.0 / rate);

    PathSpec tails;
    tails.rays.push_back({{rc, 0.0}, {1.0, 0.0}, scale, 1});
    tails.rays.push_back({{-rc, 0.0}, {-1.0, 0.0}, scale, -1});
    std::complex<double> it = integrate(kernel, tails, opts_.quad);

    std::complex<double> ic = integrate_interval(
        [&](double phi) {
            std::complex<double> t = rc * std::exp(kI * phi);
            return kernel(t) * (kI * t);
        },
        kPi, 2.0 * kPi, opts_.quad);

    return -(it + ic);
}

std::complex<double> SigmaContext::log_sigma(std::complex<double> z) const {
    if (std::fabs(z.imag()) < 1.0) {
        double d = sigma_lattice_distance(z, omega_);
        if (d < opts_.pole_tol)
            throw NearSingularError("log_sigma: argument within pole_tol of the zero/pole lattice",
                                    z, d);
    }

    std::complex<double> acc = 0.0;
    std::complex<double> w = z;
    int guard = 0;
    while (w.real() > kPi) {
        acc += log1p_exp(-kI * (w - kPi) / omega_);
        w -= 2.0 * kPi;
        if (++guard > 1000000) throw std::invalid_argument("log_sigma: |Re z| too large");
    }
    while (w.real() <= -kPi) {
        acc -= log1p_exp(-kI * (w + kPi) / omega_);
        w += 2.0 * kPi;
        if (++guard > 1000000) throw std::invalid_argument("log_sigma: |Re z| too large");
    }

    const double delta = opts_.strip_delta;
    if (w.imag() < -delta) return acc + series_lower(w);
    if (w.imag() > delta) return acc + reflection_exponent(w, omega_) - series_lower(-w);
    return acc + band_integral(w);
}

ScaledComplex SigmaContext::sigma(std::complex<double> z) const {
    return ScaledComplex::from_log(log_sigma(z));
}

double SigmaContext::conjugation_defect(std::complex<double> z) const {
    ScaledComplex a = sigma(std::conj(z)).conj();
    ScaledComplex b = sigma(-z);
    return std::abs((a * b).value() - 1.0);
}

}  // namespace maryland
