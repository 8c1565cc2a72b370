#pragma once

// The minimal meromorphic solution psi of
//   psi(z + omega) + psi(z - omega) + lambda cot(pi z) psi(z) = E psi(z),
// built from contour integrals of the ratio
//   Xhat(p) = sigma(p+eta-il) sigma(p-eta+il) / (sigma(p-eta-il) sigma(p+eta+il)).
// Two representations are used: a bent contour through +-i inf (valid away from
// the real axis) and a regularized integral along the imaginary axis plus a
// finite residue sum (valid in the strip |Re z| < 1 + omega).  psi() dispatches
// between them and continues beyond the strip via the difference equation.

#include <complex>
#include <memory>
#include <vector>

#include "maryland/quadrature.hpp"
#include "maryland/scaled.hpp"
#include "maryland/sigma.hpp"

namespace maryland {

struct MinSolOptions {
    double pole_tol = 1e-10;       ///< proximity to the psi pole lattice +-(omega k + m)
    double decay_floor = 0.05;     ///< minimum contour decay rate, passed to build_gamma
    double resonance_tol = 1e-8;   ///< contexts this close to resonant eta are refused
    double strip_margin = 0.1;     ///< retreat from |Re z| = 1 + omega for the axis form
    SigmaOptions sigma;
    QuadratureOptions quad{1e-12, 1e-14, 2000000};
};

struct AsymptoticCoeffs {
    ScaledComplex a_plus, a_minus;  ///< Im z -> +inf, coefficients of e^{+-(l-i eta) z / omega}
    ScaledComplex b_plus, b_minus;  ///< Im z -> -inf, coefficients of e^{+-(l+i eta) z / omega}
};

/// Leading asymptotic coefficients of the minimal solution (closed form).
/// a_minus vanishes exactly for eta on the lattice pi(omega k + m); lattice hits
/// within sigma's pole tolerance are returned as exact zeros.
AsymptoticCoeffs asymptotic_coeffs(const SigmaContext& sigma_ctx, double eta, double l);

class MinSolContext {
public:
    static MinSolContext create(double omega, double eta, double l,
                                const MinSolOptions& opts = {});

    double omega() const { return omega_; }
    double eta() const { return eta_; }
    double l() const { return l_; }
    const SigmaContext& sigma_context() const { return sigma_; }

    /// log Xhat(p); branch jumps are harmless since callers exponentiate.
    std::complex<double> log_xhat(std::complex<double> p) const;

    /// Off-axis representation.  For moderate |Im z| this is the bent-contour
    /// integral; for |Im z| >= 1.5 the contour is translated past the poles of
    /// Xhat and the integral collapses to a residue sum (the translated
    /// remainder is below roundoff), which avoids the catastrophic cancellation
    /// the raw integral suffers at high altitude.  Throws ContourSelectionError
    /// when z is too close to the real axis relative to |z|.
    ScaledComplex upsilon(std::complex<double> z) const;

    /// Axis representation plus residue sum; valid for |Re z| < 1 + omega
    /// (complex z allowed).
    ScaledComplex upsilon_real(std::complex<double> z) const;

    /// The residue correction R(z) entering the axis representation.
    ScaledComplex residue_term(std::complex<double> z) const;

    /// Minimal solution: dispatches between the two representations and folds
    /// arguments outside the strip back via the difference equation.  Memoized.
    /// Throws MinSolPoleError within pole_tol of the pole lattice.
    ScaledComplex psi(std::complex<double> z) const;

    AsymptoticCoeffs coeffs() const { return asymptotic_coeffs(sigma_, eta_, l_); }

    /// Wronskian w(psi(.+1), psi(.)), the two equivalent closed forms.
    ScaledComplex wronskian_closed_form() const;
    ScaledComplex wronskian_closed_form_alt() const;

    /// Distance from z to the pole lattice +-(omega k + m), k, m >= 1.
    double pole_lattice_distance(std::complex<double> z) const;

private:
    MinSolContext(double omega, double eta, double l, SigmaContext sigma, MinSolOptions opts);

    void enumerate_residue_poles();
    ScaledComplex psi_uncached(std::complex<double> z, int fold_depth) const;
    ScaledComplex upsilon_bent(std::complex<double> z) const;
    ScaledComplex upsilon_shifted(std::complex<double> z) const;
    void ensure_shift_poles() const;
    std::vector<std::complex<double>> pole_candidates(double span) const;
    ScaledComplex xhat_residue(std::complex<double> u0,
                               const std::vector<std::complex<double>>& candidates) const;

    double omega_, eta_, l_;
    SigmaContext sigma_;
    MinSolOptions opts_;

    struct ResiduePole {
        std::complex<double> q;  ///< pole location in the p plane
        ScaledComplex coeff;     ///< weight * residue of Xhat at the pole
    };
    std::vector<ResiduePole> residue_poles_;
    std::complex<double> log_amplitude_;  ///< log of sh(l) sh(l/w) sin(eta) sin(eta/w)

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

}  // namespace maryland
