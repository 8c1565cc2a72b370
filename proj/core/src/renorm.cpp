#include "maryland/renorm.hpp"

#include <cmath>
#include <numbers>

#include "maryland/ddouble.hpp"
#include "maryland/errors.hpp"

namespace maryland {

namespace {

constexpr double kPi = std::numbers::pi;

// theta + n omega in double-double, so integer/fractional split stays exact
// for |n| in the hundreds.
DDouble orbit_point(double theta, long n, double omega) {
    return dd_detail::two_prod(static_cast<double>(n), omega) + DDouble(theta);
}

ScaledMat2C from_entries(const ScaledComplex& a11, const ScaledComplex& a12,
                         const ScaledComplex& a21, const ScaledComplex& a22) {
    double s = -std::numeric_limits<double>::infinity();
    for (const ScaledComplex* e : {&a11, &a12, &a21, &a22}) {
        if (!e->is_zero()) s = std::max(s, e->log_scale);
    }
    if (!std::isfinite(s)) return ScaledMat2C{{{0, 0}, {0, 0}, {0, 0}, {0, 0}}, 0.0};
    auto ent = [s](const ScaledComplex& e) {
        return e.is_zero() ? std::complex<double>(0.0, 0.0)
                           : e.mant * std::exp(e.log_scale - s);
    };
    ScaledMat2C r{{ent(a11), ent(a12), ent(a21), ent(a22)}, s};
    r.renormalize();
    return r;
}

ScaledMat2C transpose(const ScaledMat2C& a) { return {a.mat.transpose(), a.log_scale}; }

double log_frobenius(const ScaledMat2C& a) {
    return std::log(frobenius_norm(a.mat)) + a.log_scale;
}

}  // namespace

double orbit_fraction(double theta, long n, double omega) {
    DDouble t = orbit_point(theta, n, omega);
    double fl = std::floor(t.hi);
    double r = (t - DDouble(fl)).to_double();
    if (r < 0.0) r += 1.0;
    if (r >= 1.0) r -= 1.0;
    return r;
}

ScaledMat2C psi_matrix(const MinSolContext& ctx, double z) {
    double w = ctx.omega();
    return from_entries(ctx.psi({z, 0.0}), ctx.psi({z - 1.0, 0.0}),
                        ctx.psi({z - w, 0.0}), ctx.psi({z - 1.0 - w, 0.0}));
}

ScaledComplex psi_extended(const MinSolContext& ctx, double z) {
    const double omega = ctx.omega();
    const double l1 = ctx.l() / omega;
    const double eta1 = reduce_mod_2pi(ctx.eta() / omega);
    const double damp = std::exp(-2.0 * l1);

    // E1 - lambda1 cot(pi z / omega) = e^{l1} [(1+e^{-2 l1}) cos(eta1)
    //                                          + (1-e^{-2 l1}) sin(eta1) cot]
    auto coef = [&](double x) -> ScaledComplex {
        double t = x / omega;
        double r = t - std::round(t);
        double s = std::sin(kPi * r);
        if (std::fabs(s) < 1e-12)
            throw MinSolPoleError("psi_extended: step lands on a cot(pi z/omega) pole",
                                  {x, 0.0});
        double cot = std::cos(kPi * r) / s;
        double mant = (1.0 + damp) * std::cos(eta1) + (1.0 - damp) * std::sin(eta1) * cot;
        return ScaledComplex({mant, 0.0}, l1);
    };

    double m = std::floor(z);
    double r = z - m;
    if (m == 0.0 || m == -1.0) return ctx.psi({z, 0.0});

    ScaledComplex lower = ctx.psi({r - 1.0, 0.0});
    ScaledComplex upper = ctx.psi({r, 0.0});
    if (m > 0.0) {
        for (double k = 0.0; k < m; k += 1.0) {
            ScaledComplex next = coef(r + k) * upper - lower;
            lower = upper;
            upper = next;
        }
        return upper;
    }
    for (double k = 1.0; k < -m; k += 1.0) {
        ScaledComplex below = coef(r - k) * lower - upper;
        upper = lower;
        lower = below;
    }
    return lower;
}

ScaledMat2C psi_matrix_extended(const MinSolContext& ctx, double z) {
    double w = ctx.omega();
    return from_entries(psi_extended(ctx, z), psi_extended(ctx, z - 1.0),
                        psi_extended(ctx, z - w), psi_extended(ctx, z - 1.0 - w));
}

FundamentalSolution fundamental_solution(const MinSolContext& ctx) {
    FundamentalSolution fs;
    fs.evaluator = [ctx](double z) { return psi_matrix(ctx, z); };
    fs.det_constant = ctx.wronskian_closed_form();
    return fs;
}

ScaledMat2C monodromy_matrix(const FundamentalSolution& fs, double omega, double x) {
    if (fs.det_constant.is_zero())
        throw SingularFundamentalError("monodromy_matrix: degenerate fundamental solution");
    ScaledMat2C a = fs.evaluator(omega * x);
    if (std::abs(scaled_det_mantissa(a)) < 1e-12)
        throw SingularFundamentalError(
            "monodromy_matrix: fundamental matrix numerically singular");
    ScaledMat2C b = fs.evaluator(omega * x + 1.0);
    return transpose(scaled_inverse(a) * b);
}

RenormBoundary renormalize_once(const SpectralParams& p, long n, const RenormOptions& opts) {
    RenormBoundary rb;
    rb.step = renorm_params(p, n, opts.params);
    MinSolContext ctx = MinSolContext::create(p.omega, p.eta, p.l, opts.minsol);
    rb.left = psi_matrix(ctx, orbit_fraction(p.theta, n, p.omega));
    rb.right = scaled_inverse(psi_matrix(ctx, p.theta));
    rb.condition = log_frobenius(rb.left) + log_frobenius(rb.right);
    return rb;
}

GenericRenormalization generic_renormalize(const std::function<Mat2C(double)>& m,
                                           const FundamentalSolution& fs, double omega,
                                           double theta, long n) {
    if (fs.det_constant.is_zero())
        throw SingularFundamentalError("generic_renormalize: degenerate fundamental solution");
    // spot-check the governing relation Psi(z+omega) = M(z) Psi(z) at theta
    ScaledMat2C at_theta = fs.evaluator(theta);
    ScaledMat2C advanced = fs.evaluator(theta + omega);
    ScaledMat2C predicted = ScaledMat2C{m(theta), 0.0} * at_theta;
    if (relative_frobenius_error(advanced, predicted) > 1e-6)
        throw SingularFundamentalError(
            "generic_renormalize: evaluator does not solve the governing relation");

    GenericRenormalization g;
    g.left = fs.evaluator(orbit_fraction(theta, n, omega));
    g.right = scaled_inverse(at_theta);
    double inv = 1.0 / omega;
    g.omega1 = inv - std::floor(inv);
    if (g.omega1 == 0.0)
        throw RationalFrequencyError("generic_renormalize: frequency is exactly rational");
    double ratio = theta / omega;
    g.theta1 = ratio - std::floor(ratio);
    g.n1 = -static_cast<long>(std::floor(orbit_point(theta, n, omega).to_double()));
    return g;
}

RenormChain cascade(const SpectralParams& p, long n, const RenormOptions& opts) {
    RenormChain chain;
    const ScaledMat2C s2{sigma2_matrix(), 0.0};
    SpectralParams cur = p;
    long ncur = n;
    double budget = 0.0;
    int depth = 0;
    while (std::labs(ncur) > 1 && depth < opts.max_depth) {
        RenormBoundary rb = renormalize_once(cur, ncur, opts);
        budget += std::fabs(rb.condition);
        if (budget > opts.condition_budget_log)
            throw PrecisionError(
                "cascade: accumulated condition exceeds the double-precision budget; "
                "use the extended backend or loosen the depth");
        chain.levels.push_back(rb.step);
        chain.boundary_left.push_back(rb.left * s2);
        chain.boundary_right.push_back(s2 * rb.right);
        chain.condition.push_back(rb.condition);
        cur = rb.step.next_params;
        ncur = rb.step.n_next;
        ++depth;
    }
    chain.terminal_params = cur;
    chain.terminal_n = ncur;
    chain.terminal_product = cocycle_product(cur, ncur, opts.cocycle);
    return chain;
}

ScaledMat2C cascade_reconstruct(const RenormChain& chain) {
    ScaledMat2C acc = chain.terminal_product;
    for (std::size_t k = chain.levels.size(); k-- > 0;) {
        acc = chain.boundary_left[k] * acc * chain.boundary_right[k];
    }
    return acc;
}

}  // namespace maryland
