#pragma once

// Complex-contour quadrature: adaptive Gauss-Kronrod on finite segments,
// geometric panels with a measured-decay stopping rule on rays to infinity,
// and trapezoid circle integrals for residues.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace maryland {

struct Segment {
    std::complex<double> a;
    std::complex<double> b;
};

/// Half-line start + t * direction, t in [0, inf).  orientation == -1 means the
/// path traverses the ray inward (from infinity to start).
struct Ray {
    std::complex<double> start;
    std::complex<double> direction;  ///< unit vector
    double scale = 1.0;              ///< initial panel length
    int orientation = 1;
};

struct PathSpec {
    std::vector<Segment> segments;
    std::vector<Ray> rays;
};

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double tail_tol = 1e-14;        ///< ray panels stop below this relative contribution
    std::size_t max_evals = 2000000;
};

using Integrand = std::function<std::complex<double>(std::complex<double>)>;

/// Integral of f over all parts of the path (segments first, then rays).
/// Throws QuadratureError when max_evals is exhausted before the tolerance is met.
std::complex<double> integrate(const Integrand& f, const PathSpec& path,
                               const QuadratureOptions& opts = {});

/// Integral over the straight segment [a, b] in the complex plane.
std::complex<double> integrate_segment(const Integrand& f, std::complex<double> a,
                                       std::complex<double> b,
                                       const QuadratureOptions& opts = {});

/// Integral of a real-parameter integrand over [a, b].
std::complex<double> integrate_interval(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, const QuadratureOptions& opts = {});

/// (1/2 pi i) * contour integral of f over the circle |p - center| == radius,
/// by the trapezoid rule with node doubling (spectrally accurate for analytic f).
std::complex<double> residue_by_circle(const Integrand& f, std::complex<double> center,
                                       double radius, const QuadratureOptions& opts = {});

/// Contour for the minimal-solution integral: ray in from -i*inf to -2il, the
/// segment [-2il, 2il] on the imaginary axis, ray out to +i*inf.  Ray directions
/// bisect the admissible cone where exp(i p z / omega) decays; the cone collapses
/// as Im z -> 0 and ContourSelectionError is thrown when the decay rate of the
/// slower ray falls below decay_floor.
PathSpec build_gamma(std::complex<double> z, double omega, double l,
                     double decay_floor = 0.05);

}  // namespace maryland
