#include "maryland/params.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "maryland/errors.hpp"

namespace maryland {

namespace {
constexpr double kPi = std::numbers::pi;

double frac(double x) { return x - std::floor(x); }
}  // namespace

double SpectralParams::energy() const { return 2.0 * std::cosh(l) * std::cos(eta); }

double SpectralParams::coupling() const { return -2.0 * std::sinh(l) * std::sin(eta); }

std::vector<std::string> SpectralParams::validate(const ParamsOptions& opts) const {
    if (!(omega > 0.0 && omega < 1.0)) throw std::invalid_argument("omega must lie in (0, 1)");
    if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in [0, 1)");
    if (!(eta > -kPi && eta <= kPi)) throw std::invalid_argument("eta must lie in (-pi, pi]");
    if (!(l > 0.0)) throw std::invalid_argument("l must be positive");

    std::vector<std::string> diags;
    if (is_near_rational(omega, opts.rational_q_max, opts.rational_tol)) {
        diags.push_back("omega is within " + std::to_string(opts.rational_tol) +
                        " of a rational with denominator <= " +
                        std::to_string(opts.rational_q_max) +
                        "; the renormalization chain will degenerate quickly");
    }
    double d = resonance_distance(eta, omega);
    if (d < opts.resonance_tol) {
        diags.push_back("eta is resonant (distance " + std::to_string(d) +
                        " from the lattice pi*Z union pi*omega*Z); the fundamental "
                        "solution degenerates there");
    }
    return diags;
}

EtaL params_from_energy(double energy, double lambda) {
    std::complex<double> w = std::acos(std::complex<double>(energy, lambda) / 2.0);
    // cos is even: pick the representative with positive l.  For lambda > 0 the
    // principal acos lands in the lower half-plane, giving eta in (-pi, 0).
    if (w.imag() < 0.0) return {-w.real(), -w.imag()};
    if (w.imag() > 0.0) return {w.real(), w.imag()};
    throw std::invalid_argument("params_from_energy: point lies on the degenerate set l == 0");
}

double resonance_distance(double eta, double omega) {
    double d1 = kPi * std::fabs(eta / kPi - std::round(eta / kPi));
    double step = kPi * omega;
    double d2 = step * std::fabs(eta / step - std::round(eta / step));
    return std::min(d1, d2);
}

double reduce_mod_2pi(double x) {
    double r = std::fmod(x, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    if (r > kPi) r -= 2.0 * kPi;
    return r;
}

RenormStep renorm_params(const SpectralParams& p, long n_steps, const ParamsOptions& opts) {
    if (!(p.omega > 0.0 && p.omega < 1.0))
        throw std::invalid_argument("renorm_params: omega must lie in (0, 1)");
    RenormStep step;
    step.params = p;
    step.n_steps = n_steps;

    SpectralParams q;
    q.omega = frac(1.0 / p.omega);
    if (q.omega == 0.0)
        throw RationalFrequencyError("renorm_params: 1/omega is an exact integer");
    q.theta = frac(p.theta / p.omega);
    q.eta = reduce_mod_2pi(p.eta / p.omega);
    q.l = p.l / p.omega;
    step.n_next = -static_cast<long>(std::floor(p.theta + static_cast<double>(n_steps) * p.omega));

    double d = resonance_distance(q.eta, q.omega);
    if (d < opts.resonance_tol) {
        step.resonance_detected = true;
        if (opts.perturb_on_resonance) {
            step.eta_perturbation = 10.0 * opts.resonance_tol;
            q.eta += step.eta_perturbation;
            step.perturbation_applied = true;
        }
    }
    step.next_params = q;
    return step;
}

GaussChain gauss_chain(double omega, int depth, const ParamsOptions& opts) {
    if (!(omega > 0.0 && omega < 1.0))
        throw std::invalid_argument("gauss_chain: omega must lie in (0, 1)");
    GaussChain chain;
    chain.omegas.push_back(omega);
    double w = omega;
    for (int k = 0; k < depth; ++k) {
        w = frac(1.0 / w);
        if (w == 0.0)
            throw RationalFrequencyError("gauss_chain: frequency became exactly rational at level " +
                                         std::to_string(k + 1));
        if (w < opts.chain_floor) {
            chain.stopped_early = true;
            chain.diagnostic = "chain stopped at level " + std::to_string(k + 1) +
                               ": frequency " + std::to_string(w) + " fell below the floor " +
                               std::to_string(opts.chain_floor);
            break;
        }
        chain.omegas.push_back(w);
    }
    return chain;
}

bool is_near_rational(double omega, int q_max, double tol) {
    for (int q = 1; q <= q_max; ++q) {
        double p = std::round(omega * q);
        if (std::fabs(omega - p / q) < tol) return true;
    }
    return false;
}

}  // namespace maryland
