#pragma once

// The sigma special function attached to a frequency omega in (0, 1).  It is
// the unique solution of the pair of shift equations
//     sigma(z + pi omega) = (1 + exp(-i z))        * sigma(z - pi omega)
//     sigma(z + pi)       = (1 + exp(-i z / omega)) * sigma(z - pi)
// normalized by sigma -> 1 as Im z -> -inf.  All zeros and poles are real:
// zeros at +(pi(1+omega) + 2 pi omega k + 2 pi m), poles at the opposite
// points, k, m >= 0.

#include <complex>
#include <vector>

#include "maryland/quadrature.hpp"
#include "maryland/scaled.hpp"

namespace maryland {

struct SigmaOptions {
    double strip_delta = 0.5;  ///< half-width of the band handled by the contour integral
    double tail_tol = 1e-14;
    double sin_floor = 1e-12;  ///< smallest tolerated |sin(pi n omega)| denominator
    double pole_tol = 1e-10;   ///< evaluations closer to the zero/pole lattice throw
    QuadratureOptions quad{1e-13, 1e-15, 2000000};
};

/// Distance from z to the zero/pole lattice of sigma.
double sigma_lattice_distance(std::complex<double> z, double omega);

/// Residue of 1/sigma at its first zero z = pi(1 + omega) (closed form).
std::complex<double> residue_inv_sigma(double omega);

class SigmaContext {
public:
    static SigmaContext create(double omega, const SigmaOptions& opts = {});

    double omega() const { return omega_; }
    const SigmaOptions& options() const { return opts_; }

    /// A branch of log sigma(z).  Continuous within each evaluation regime; the
    /// exponential is branch-free.  Throws NearSingularError within pole_tol of
    /// the zero/pole lattice.
    std::complex<double> log_sigma(std::complex<double> z) const;

    /// sigma(z) in the overflow-safe scaled representation.
    ScaledComplex sigma(std::complex<double> z) const;

    /// |conj(sigma(conj z)) * sigma(-z) - 1|, which is zero in exact arithmetic.
    double conjugation_defect(std::complex<double> z) const;

private:
    SigmaContext() = default;

    std::complex<double> series_lower(std::complex<double> z) const;  ///< Im z < -delta
    std::complex<double> band_integral(std::complex<double> z) const; ///< |Im z| <= delta

    double omega_ = 0.0;
    SigmaOptions opts_;
    std::vector<double> inv_sin1_;      ///< 1 / sin(pi n omega)
    std::vector<double> inv_sin2_;      ///< 1 / sin(pi n / omega)
    std::vector<double> suffix_max1_;   ///< max_{m >= n} |inv_sin1_[m]|
    std::vector<double> suffix_max2_;
};

}  // namespace maryland
