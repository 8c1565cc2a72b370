#include "maryland/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "maryland/errors.hpp"

namespace maryland {

namespace {

constexpr double kPi = std::numbers::pi;

// 7-15 Gauss-Kronrod pair on [-1, 1].  Kronrod nodes; the odd-index nodes are
// the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkResult {
    std::complex<double> value;
    double error;
    double resabs;  ///< integral of |f|, for the rounding-noise floor
};

GkResult gk15(const Integrand& f, std::complex<double> a, std::complex<double> b,
              std::size_t& evals) {
    std::complex<double> c = 0.5 * (a + b);
    std::complex<double> h = 0.5 * (b - a);
    std::complex<double> fc = f(c);
    std::complex<double> ik = kWgk[7] * fc;
    std::complex<double> ig = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    evals += 1;
    for (int j = 0; j < 7; ++j) {
        std::complex<double> fp = f(c + h * kXgk[j]);
        std::complex<double> fm = f(c - h * kXgk[j]);
        evals += 2;
        ik += kWgk[j] * (fp + fm);
        resabs += kWgk[j] * (std::abs(fp) + std::abs(fm));
        if (j % 2 == 1) ig += kWg[j / 2] * (fp + fm);
    }
    double hl = std::abs(h);
    return {h * ik, hl * std::abs(ik - ig), hl * resabs};
}

// Adaptive bisection with an absolute tolerance split across halves.
std::complex<double> adapt(const Integrand& f, std::complex<double> a, std::complex<double> b,
                           double tol_abs, int depth, std::size_t& evals, std::size_t max_evals,
                           double& worst_error) {
    GkResult r = gk15(f, a, b, evals);
    // second condition: the estimate has hit rounding noise; refinement is futile
    if (r.error <= tol_abs || r.error <= 1e-15 * r.resabs || depth >= 48) {
        if (r.error > tol_abs && r.error > 1e-15 * r.resabs)
            worst_error = std::max(worst_error, r.error);
        return r.value;
    }
    if (evals > max_evals) {
        throw QuadratureError("integrate: evaluation budget exhausted", r.error);
    }
    std::complex<double> c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol_abs, depth + 1, evals, max_evals, worst_error) +
           adapt(f, c, b, 0.5 * tol_abs, depth + 1, evals, max_evals, worst_error);
}

// tol_floor: absolute error already acceptable to the caller (ray tails need
// accuracy relative to the whole integral, not to their own vanishing size).
std::complex<double> segment_value(const Integrand& f, std::complex<double> a,
                                   std::complex<double> b, const QuadratureOptions& opts,
                                   std::size_t& evals, double tol_floor = 0.0) {
    // Scale from the L1 sum over 8 subpanels: immune to the cancellation that
    // makes a single coarse estimate of an oscillatory integrand collapse.
    constexpr int kInit = 8;
    GkResult parts[kInit];
    double scale = 0.0;
    for (int i = 0; i < kInit; ++i) {
        std::complex<double> ai = a + (b - a) * (static_cast<double>(i) / kInit);
        std::complex<double> bi = a + (b - a) * (static_cast<double>(i + 1) / kInit);
        parts[i] = gk15(f, ai, bi, evals);
        scale += std::abs(parts[i].value);
    }
    double tol_abs = std::max({opts.rel_tol * scale, tol_floor, 1e-300});
    double worst = 0.0;
    std::complex<double> v = 0.0;
    for (int i = 0; i < kInit; ++i) {
        std::complex<double> ai = a + (b - a) * (static_cast<double>(i) / kInit);
        std::complex<double> bi = a + (b - a) * (static_cast<double>(i + 1) / kInit);
        v += adapt(f, ai, bi, tol_abs / kInit, 0, evals, opts.max_evals, worst);
    }
    if (worst > 64.0 * tol_abs) {
        throw QuadratureError("integrate: panel refinement stalled", worst);
    }
    return v;
}

std::complex<double> ray_value(const Integrand& f, const Ray& ray, const QuadratureOptions& opts,
                               std::size_t& evals) {
    std::complex<double> acc = 0.0;
    double t = 0.0;
    double h = ray.scale;
    int quiet = 0;
    for (int panel = 0; panel < 400; ++panel) {
        std::complex<double> a = ray.start + t * ray.direction;
        std::complex<double> b = ray.start + (t + h) * ray.direction;
        double floor = (panel == 0) ? 0.0 : opts.tail_tol * std::abs(acc);
        std::complex<double> v = segment_value(f, a, b, opts, evals, floor);
        acc += v;
        double ref = std::max(std::abs(acc), 1e-300);
        if (std::abs(v) < opts.tail_tol * ref) {
            if (++quiet >= 2) {
                return static_cast<double>(ray.orientation) * acc;
            }
        } else {
            quiet = 0;
        }
        t += h;
        h *= 1.5;
        if (evals > opts.max_evals) {
            throw QuadratureError("integrate: ray evaluation budget exhausted", std::abs(v));
        }
    }
    throw QuadratureError("integrate: ray tail failed to decay", std::abs(acc));
}

}  // namespace

std::complex<double> integrate_segment(const Integrand& f, std::complex<double> a,
                                       std::complex<double> b, const QuadratureOptions& opts) {
    std::size_t evals = 0;
    return segment_value(f, a, b, opts, evals);
}

std::complex<double> integrate(const Integrand& f, const PathSpec& path,
                               const QuadratureOptions& opts) {
    std::size_t evals = 0;
    std::complex<double> total = 0.0;
    for (const Segment& s : path.segments) total += segment_value(f, s.a, s.b, opts, evals);
    for (const Ray& r : path.rays) total += ray_value(f, r, opts, evals);
    return total;
}

std::complex<double> integrate_interval(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, const QuadratureOptions& opts) {
    return integrate_segment([&f](std::complex<double> t) { return f(t.real()); },
                             std::complex<double>(a, 0.0), std::complex<double>(b, 0.0), opts);
}

std::complex<double> residue_by_circle(const Integrand& f, std::complex<double> center,
                                       double radius, const QuadratureOptions& opts) {
    const std::complex<double> i(0.0, 1.0);
    double fmax = 0.0;
    auto sum_n = [&](int n) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < n; ++j) {
            double phi = 2.0 * kPi * j / n;
            std::complex<double> e = std::exp(i * phi);
            std::complex<double> v = f(center + radius * e);
            fmax = std::max(fmax, std::abs(v));
            s += v * e;
        }
        return radius * s / static_cast<double>(n);
    };
    std::complex<double> prev = sum_n(32);
    for (int n = 64; n <= 65536; n *= 2) {
        std::complex<double> cur = sum_n(n);
        // absolute floor: a zero residue of an O(fmax) integrand is legitimate
        double tol = 10.0 * opts.rel_tol * std::max(std::abs(cur), std::abs(prev)) +
                     1e-14 * fmax * radius;
        if (std::abs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    throw ResidueError("residue_by_circle: trapezoid sums did not converge");
}

PathSpec build_gamma(std::complex<double> z, double omega, double l, double decay_floor) {
    if (z == std::complex<double>(0.0, 0.0))
        throw ContourSelectionError("build_gamma: z == 0 admits no decaying ray");
    double phi = std::arg(z);
    double r = std::abs(z);

    // Admissible outgoing directions e^{i alpha} need alpha + phi in (0, pi) and
    // alpha in (0, pi); the bisector of the intersection is used.  Decay rate of
    // exp(i p z / omega) along the ray is (|z|/omega) * sin(alpha + phi).
    double alpha_up = 0.5 * (kPi - phi);
    double alpha_low = (phi >= 0.0) ? -0.5 * phi : -kPi - 0.5 * phi;

    double rate_up = (r / omega) * std::sin(alpha_up + phi);
    double rate_low = (r / omega) * std::abs(std::sin(alpha_low + phi));
    double rate = std::min(rate_up, rate_low);
    if (!(rate > decay_floor)) {
        throw ContourSelectionError(
            "build_gamma: admissible cone too narrow (Im z too small relative to |z|)");
    }

    const std::complex<double> i(0.0, 1.0);
    PathSpec path;
    path.segments.push_back({-2.0 * i * l, 2.0 * i * l});
    // Panel length tuned so the first panel spans a few decay lengths.
    double scale_up = std::min(4.0, 3.0 / rate_up);
    double scale_low = std::min(4.0, 3.0 / rate_low);
    path.rays.push_back({2.0 * i * l, std::exp(i * alpha_up), scale_up, 1});
    path.rays.push_back({-2.0 * i * l, std::exp(i * alpha_low), scale_low, -1});
    return path;
}

}  // namespace maryland
