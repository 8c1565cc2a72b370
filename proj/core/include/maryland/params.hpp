#pragma once

// Parameter algebra: the (E, lambda) <-> (eta, l) correspondence, the Gauss-map
// renormalization of (omega, theta, eta, l, N), and validity diagnostics.

#include <string>
#include <vector>

namespace maryland {

struct ParamsOptions {
    double rational_tol = 1e-9;   ///< distance below which omega counts as rational (diagnostic)
    int rational_q_max = 64;      ///< denominators checked by the rationality diagnostic
    double resonance_tol = 1e-8;  ///< distance of eta from the resonance lattice pi*(omega Z + Z)
    bool perturb_on_resonance = true;
    double chain_floor = 1e-9;    ///< Gauss chain stops early below this frequency
};

struct SpectralParams {
    double omega = 0.0;  ///< frequency, in (0,1)
    double theta = 0.0;  ///< phase, in [0,1)
    double eta = 0.0;    ///< principal representative in (-pi, pi]
    double l = 0.0;      ///< positive "Lyapunov" parameter

    double energy() const;    ///< E = 2 cosh(l) cos(eta)
    double coupling() const;  ///< lambda = -2 sinh(l) sin(eta)

    /// Throws std::invalid_argument on hard violations; returns human-readable
    /// diagnostics (near-rational omega, resonant eta) without throwing.
    std::vector<std::string> validate(const ParamsOptions& opts = {}) const;
};

struct EtaL {
    double eta;
    double l;
};

struct RenormStep {
    SpectralParams params;
    long n_steps = 0;  ///< N at this level
    SpectralParams next_params;
    long n_next = 0;  ///< N1 = -floor(theta + N omega)
    bool resonance_detected = false;
    bool perturbation_applied = false;
    double eta_perturbation = 0.0;  ///< amount added to eta1 when perturbed
};

struct GaussChain {
    std::vector<double> omegas;
    bool stopped_early = false;
    std::string diagnostic;
};

/// Inverts E + i lambda = 2 cos(eta + i l) on the branch eta in (-pi, 0), l > 0.
EtaL params_from_energy(double energy, double lambda);

/// Distance of eta from the resonance lattice pi * (omega k + m), k, m integers.
/// On this lattice either lambda or the renormalized lambda_1 vanishes and the
/// fundamental solution degenerates.
double resonance_distance(double eta, double omega);

/// One renormalization of (omega, theta, eta, l, N).  The new eta is reduced to
/// (-pi, pi] so the next-level minimal solution exists.
RenormStep renorm_params(const SpectralParams& p, long n_steps, const ParamsOptions& opts = {});

/// Iterated Gauss map omega_k = frac(1 / omega_{k-1}).
GaussChain gauss_chain(double omega, int depth, const ParamsOptions& opts = {});

/// True if omega is within tol of a rational p/q with q <= q_max.
bool is_near_rational(double omega, int q_max, double tol);

/// Reduce x to the principal interval (-pi, pi].
double reduce_mod_2pi(double x);

}  // namespace maryland
