#include "maryland/minsol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "maryland/errors.hpp"
#include "maryland/params.hpp"

namespace maryland {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

// log(sinh x) for x > 0 without overflow.
double log_sinh(double x) {
    if (x > 20.0) return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x));
}

std::complex<double> cot_pi(std::complex<double> z) {
    double r = z.real() - std::round(z.real());
    std::complex<double> w(kPi * r, kPi * z.imag());
    return std::cos(w) / std::sin(w);
}

}  // namespace

struct MinSolContext::Cache {
    std::map<std::pair<double, double>, ScaledComplex> values;    ///< memoized psi
    std::map<std::pair<double, double>, ScaledComplex> residues;  ///< Xhat residues
    std::vector<ResiduePole> shift_poles;  ///< poles crossed by the translated contour
    bool shift_ready = false;
    std::mutex mutex;
};

AsymptoticCoeffs asymptotic_coeffs(const SigmaContext& sigma_ctx, double eta, double l) {
    const double omega = sigma_ctx.omega();
    const double base = kPi * (1.0 + omega);
    const double tol = sigma_ctx.options().pole_tol;
    std::complex<double> res = residue_inv_sigma(omega);

    auto coeff = [&](double sign) -> ScaledComplex {
        // a_{+-} = (pi i / 2) sigma(base -+ 2 eta) sigma(base -+ 2 i l)
        //          / sigma(base -+ 2(eta + i l)) * res_{base} 1/sigma
        std::complex<double> arg_eta(base - 2.0 * sign * eta, 0.0);
        if (sigma_lattice_distance(arg_eta, omega) < tol) return ScaledComplex{};  // exact zero
        ScaledComplex num = sigma_ctx.sigma(arg_eta) *
                            sigma_ctx.sigma({base, -2.0 * sign * l});
        ScaledComplex den = sigma_ctx.sigma(std::complex<double>(base, 0.0) -
                                            2.0 * sign * std::complex<double>(eta, l));
        return ScaledComplex::from(kPi * kI / 2.0 * res) * num / den;
    };

    AsymptoticCoeffs c;
    c.a_plus = coeff(+1.0);
    c.a_minus = coeff(-1.0);
    c.b_plus = -c.a_plus.conj();
    c.b_minus = -c.a_minus.conj();
    return c;
}

MinSolContext::MinSolContext(double omega, double eta, double l, SigmaContext sigma,
                             MinSolOptions opts)
    : omega_(omega), eta_(eta), l_(l), sigma_(std::move(sigma)), opts_(std::move(opts)),
      cache_(std::make_shared<Cache>()) {}

MinSolContext MinSolContext::create(double omega, double eta, double l,
                                    const MinSolOptions& opts) {
    if (!(omega > 0.0 && omega < 1.0))
        throw std::invalid_argument("MinSolContext: omega must lie in (0, 1)");
    if (!(l > 0.0)) throw std::invalid_argument("MinSolContext: l must be positive");
    if (!(eta > -kPi && eta <= kPi))
        throw std::invalid_argument("MinSolContext: eta must lie in (-pi, pi]");
    double rd = resonance_distance(eta, omega);
    if (rd < opts.resonance_tol)
        throw NearSingularError(
            "MinSolContext: eta is resonant; the minimal solution degenerates", {eta, 0.0}, rd);

    MinSolContext ctx(omega, eta, l, SigmaContext::create(omega, opts.sigma), opts);

    // amplitude of the axis representation: sh(l) sh(l/w) sin(eta) sin(eta/w)
    ctx.log_amplitude_ = log_sinh(l) + log_sinh(l / omega) +
                         std::log(std::complex<double>(std::sin(eta), 0.0)) +
                         std::log(std::complex<double>(std::sin(eta / omega), 0.0));

    ctx.enumerate_residue_poles();
    return ctx;
}

std::complex<double> MinSolContext::log_xhat(std::complex<double> p) const {
    std::complex<double> e(eta_, 0.0), il(0.0, l_);
    return sigma_.log_sigma(p + e - il) + sigma_.log_sigma(p - e + il) -
           sigma_.log_sigma(p - e - il) - sigma_.log_sigma(p + e + il);
}

std::vector<std::complex<double>> MinSolContext::pole_candidates(double span) const {
    // Poles of Xhat lie on Im p = +-l at
    //   u = s (eta + i l) + Lambda   and   u = s (eta - i l) - Lambda,
    // s = +-1, Lambda = pi(1+omega) + 2 pi(omega k + m), k, m >= 0.
    const double base = kPi * (1.0 + omega_);
    std::vector<std::complex<double>> candidates;
    int kmax = static_cast<int>(span / (2.0 * kPi * omega_)) + 1;
    int mmax = static_cast<int>(span / (2.0 * kPi)) + 1;
    for (int k = 0; k <= kmax; ++k) {
        for (int m = 0; m <= mmax; ++m) {
            double lam = base + 2.0 * kPi * (omega_ * k + m);
            if (lam > span) continue;
            for (double s : {1.0, -1.0}) {
                candidates.push_back(s * std::complex<double>(eta_, l_) + lam);
                candidates.push_back(s * std::complex<double>(eta_, -l_) - lam);
            }
        }
    }
    return candidates;
}

ScaledComplex MinSolContext::xhat_residue(
    std::complex<double> u0, const std::vector<std::complex<double>>& candidates) const {
    auto key = std::make_pair(u0.real(), u0.imag());
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->residues.find(key);
        if (it != cache_->residues.end()) return it->second;
    }

    double sep = 2.0 * l_;  // the two pole lines are 2l apart
    for (auto& c : candidates) {
        if (std::abs(c - u0) < 1e-12) continue;
        if (std::fabs(c.imag() - u0.imag()) < 1e-12)
            sep = std::min(sep, std::fabs(c.real() - u0.real()));
    }
    double r = std::min(0.05, 0.4 * sep);
    if (r < 1e-6)
        throw ResidueError("minimal solution: pole cluster too tight for residues");
    double s0 = log_xhat(u0 + r).real();
    auto f = [&](std::complex<double> p) { return std::exp(log_xhat(p) - s0); };
    std::complex<double> v1 = residue_by_circle(f, u0, r, opts_.quad);
    std::complex<double> v2 = residue_by_circle(f, u0, 0.5 * r, opts_.quad);
    if (std::abs(v1 - v2) > 1e-8 * std::max({std::abs(v1), std::abs(v2), 1e-30}))
        throw ResidueError("minimal solution: residue cross-check at half radius failed");

    ScaledComplex res(v1, s0);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->residues.emplace(key, res);
    return res;
}

void MinSolContext::enumerate_residue_poles() {
    const double base = kPi * (1.0 + omega_);
    const double span = 2.0 * base + kPi + std::fabs(eta_) + 1.0;
    std::vector<std::complex<double>> candidates = pole_candidates(span);

    // Deforming gamma + delta back to gamma sweeps the poles with Re q strictly
    // between 0 and delta; a rightward sweep gains +2 pi i per residue.  With
    // delta = s1 pi omega + s2 pi (so sign(delta) = s2), the contribution to
    // Upsilon = -(1/4) sum s1 s2 int ... collects the weight -(1/4) s1.
    for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
            double delta = s1 * kPi * omega_ + s2 * kPi;
            double lo = std::min(0.0, delta), hi = std::max(0.0, delta);
            for (auto& u0 : candidates) {
                double re_q = delta + u0.real();
                if (re_q <= lo + 1e-12 || re_q >= hi - 1e-12) continue;
                ResiduePole pole;
                pole.q = delta + u0;
                pole.coeff = ScaledComplex::from(-0.25 * s1) * xhat_residue(u0, candidates);
                residue_poles_.push_back(pole);
            }
        }
    }
}

ScaledComplex MinSolContext::residue_term(std::complex<double> z) const {
    ScaledComplex r;
    for (const auto& pole : residue_poles_) {
        r = r + pole.coeff * ScaledComplex::from_log(kI * pole.q * z / omega_);
    }
    return r;
}

ScaledComplex MinSolContext::upsilon(std::complex<double> z) const {
    // The raw bent-contour integral cancels to exp(-pi(1+omega)|Im z|/omega) of
    // its L1 norm, so quadrature noise overwhelms it at high altitude; switch
    // to the residue sum of the translated contour there.  The lower half-plane
    // reduces to the upper one via upsilon(conj z) = -conj(upsilon(z)).
    if (z.imag() >= 1.5) return upsilon_shifted(z);
    if (z.imag() <= -1.5) return -upsilon_shifted(std::conj(z)).conj();
    return upsilon_bent(z);
}

void MinSolContext::ensure_shift_poles() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->shift_ready) return;
    }
    // Translate the contour to Re p = c_max, crossing the poles s(eta+il) +
    // Lambda.  c_max is chosen so the remaining integral, bounded by
    // |Xhat| exp(-c_max Im z / omega) against the leading retained term
    // exp((|eta| - base) Im z / omega), is below roundoff for Im z >= 1.5.
    const double base = kPi * (1.0 + omega_);
    const double c_max = base + std::fabs(eta_) + 45.0 * omega_ +
                         2.0 * std::fabs(eta_) * l_ / kPi;
    std::vector<std::complex<double>> candidates = pole_candidates(c_max + l_ + 1.0);

    std::vector<ResiduePole> poles;
    for (auto& u0 : candidates) {
        if (u0.real() <= 0.0 || u0.real() > c_max) continue;
        ResiduePole pole;
        pole.q = u0;
        pole.coeff = xhat_residue(u0, candidates);
        poles.push_back(pole);
    }

    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->shift_ready) {
        cache_->shift_poles = std::move(poles);
        cache_->shift_ready = true;
    }
}

ScaledComplex MinSolContext::upsilon_shifted(std::complex<double> z) const {
    ensure_shift_poles();
    ScaledComplex sum;
    for (const auto& pole : cache_->shift_poles) {
        sum = sum + pole.coeff * ScaledComplex::from_log(kI * pole.q * z / omega_);
    }
    // int_gamma = int_{gamma+c} - 2 pi i sum of crossed residues (the strip
    // between the upward contours is traversed clockwise)
    return scaled_sin(kPi * z) * scaled_sin(kPi * z / omega_) *
           ScaledComplex::from(-2.0 * kPi * kI) * sum;
}

ScaledComplex MinSolContext::upsilon_bent(std::complex<double> z) const {
    PathSpec gamma = build_gamma(z, omega_, l_, opts_.decay_floor);

    auto log_f = [&](std::complex<double> p) { return kI * p * z / omega_ + log_xhat(p); };

    double s0 = -std::numeric_limits<double>::infinity();
    std::vector<std::complex<double>> probes = {{0.0, 0.0}, {0.0, l_},  {0.0, -l_},
                                                {0.0, 2.0 * l_}, {0.0, -2.0 * l_}};
    for (const Ray& ray : gamma.rays) probes.push_back(ray.start + ray.scale * ray.direction);
    for (auto& p : probes) s0 = std::max(s0, log_f(p).real());

    auto f = [&](std::complex<double> p) { return std::exp(log_f(p) - s0); };
    std::complex<double> integral = integrate(f, gamma, opts_.quad);

    return scaled_sin(kPi * z) * scaled_sin(kPi * z / omega_) * ScaledComplex(integral, s0);
}

ScaledComplex MinSolContext::upsilon_real(std::complex<double> z) const {
    if (!(std::fabs(z.real()) < 1.0 + omega_))
        throw std::invalid_argument("upsilon_real: |Re z| must be below 1 + omega");

    const double shift = kPi * (1.0 + omega_);
    const std::complex<double> c1(eta_, l_);
    const std::complex<double> c1w = c1 / omega_;
    const ScaledComplex cos_c1 = scaled_cos(c1);
    const ScaledComplex cos_c1w = scaled_cos(c1w);

    auto log_g = [&](std::complex<double> p) {
        ScaledComplex d1 = scaled_cos(p) - cos_c1;
        ScaledComplex d2 = scaled_cos(p / omega_) - cos_c1w;
        return log_amplitude_ + log_xhat(p - shift) + kI * p * z / omega_ - d1.log() - d2.log();
    };

    double s0 = -std::numeric_limits<double>::infinity();
    for (double s : {0.0, 0.5, -0.5, 1.5, -1.5, 3.0, -3.0, 6.0, -6.0})
        s0 = std::max(s0, log_g({0.0, s}).real());

    auto f = [&](std::complex<double> p) { return std::exp(log_g(p) - s0); };
    double rate = (1.0 + omega_ - std::fabs(z.real())) / omega_;
    PathSpec axis;
    axis.rays.push_back({{0.0, 0.0}, {0.0, 1.0}, std::min(4.0, 3.0 / rate), 1});
    axis.rays.push_back({{0.0, 0.0}, {0.0, -1.0}, std::min(4.0, 3.0 / rate), -1});
    std::complex<double> integral = integrate(f, axis, opts_.quad);

    return ScaledComplex(integral, s0) +
           ScaledComplex::from(2.0 * kPi * kI) * residue_term(z);
}

double MinSolContext::pole_lattice_distance(std::complex<double> z) const {
    double reach = std::fabs(z.real()) + 2.0;
    double best = std::numeric_limits<double>::infinity();
    int mmax = static_cast<int>(reach) + 1;
    int kmax = static_cast<int>(reach / omega_) + 1;
    for (int k = 1; k <= kmax; ++k) {
        for (int m = 1; m <= mmax; ++m) {
            double x = omega_ * k + m;
            best = std::min(best, std::hypot(std::fabs(z.real()) - x, z.imag()));
        }
    }
    return best;
}

ScaledComplex MinSolContext::psi_uncached(std::complex<double> z, int fold_depth) const {
    if (pole_lattice_distance(z) < opts_.pole_tol)
        throw MinSolPoleError("psi: argument within pole_tol of the pole lattice", z);

    double strip_edge = 1.0 + omega_ - opts_.strip_margin;
    if (std::fabs(z.imag()) >= 1.0) {
        try {
            return upsilon(z);
        } catch (const ContourSelectionError&) {
            // fall through to the axis representation
        }
    }
    if (std::fabs(z.real()) <= strip_edge) return upsilon_real(z);
    if (std::fabs(z.imag()) >= 1.0) return upsilon(z);  // rethrows if inadmissible

    if (fold_depth > 256)
        throw Error("psi: folding into the strip did not terminate");

    // fold toward the strip with the difference equation
    double energy = 2.0 * std::cosh(l_) * std::cos(eta_);
    double coupling = -2.0 * std::sinh(l_) * std::sin(eta_);
    double dir = (z.real() > 0.0) ? -1.0 : 1.0;
    std::complex<double> u = z + dir * omega_;  // psi(u + omega) + psi(u - omega) + ...
    std::complex<double> v = energy - coupling * cot_pi(u);
    ScaledComplex near = psi_uncached(u, fold_depth + 1);
    ScaledComplex far = psi_uncached(z + 2.0 * dir * omega_, fold_depth + 1);
    return ScaledComplex::from(v) * near - far;
}

ScaledComplex MinSolContext::psi(std::complex<double> z) const {
    auto key = std::make_pair(z.real(), z.imag());
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->values.find(key);
        if (it != cache_->values.end()) return it->second;
    }
    ScaledComplex v = psi_uncached(z, 0);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->values.emplace(key, v);
    return v;
}

ScaledComplex MinSolContext::wronskian_closed_form() const {
    AsymptoticCoeffs c = coeffs();
    std::complex<double> mu = std::complex<double>(l_, -eta_);  // l - i eta
    ScaledComplex f1 = ScaledComplex::from_log(mu / omega_) - ScaledComplex::from_log(-mu / omega_);
    ScaledComplex f2 = ScaledComplex::from_log(mu) - ScaledComplex::from_log(-mu);
    return c.a_plus * c.a_minus * f1 * f2;
}

ScaledComplex MinSolContext::wronskian_closed_form_alt() const {
    AsymptoticCoeffs c = coeffs();
    std::complex<double> mu = std::complex<double>(l_, eta_);  // l + i eta
    ScaledComplex f1 = ScaledComplex::from_log(mu / omega_) - ScaledComplex::from_log(-mu / omega_);
    ScaledComplex f2 = ScaledComplex::from_log(mu) - ScaledComplex::from_log(-mu);
    return c.b_plus * c.b_minus * f1 * f2;
}

}  // namespace maryland
