#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maryland/errors.hpp"
#include "maryland/renorm.hpp"

using namespace maryland;

namespace {
constexpr double kPi = std::numbers::pi;
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

ScaledMat2C as_scaled(const Mat2C& m) { return ScaledMat2C{m, 0.0}; }
}  // namespace

TEST_CASE("orbit_fraction matches naive arithmetic at small n") {
    CHECK(orbit_fraction(0.3, 0, kGolden) == doctest::Approx(0.3));
    CHECK(orbit_fraction(0.3, 1, kGolden) == doctest::Approx(0.3 + kGolden));
    CHECK(orbit_fraction(0.25, -1, 0.75) == doctest::Approx(0.5));
}

TEST_CASE("Psi solves Psi(z+omega) = F(z) Psi(z)") {
    auto ctx = MinSolContext::create(kGolden, -2.0, 1.0);
    for (double z : {0.23, 0.61, 0.05}) {
        ScaledMat2C lhs = psi_matrix(ctx, z + kGolden);
        ScaledMat2C rhs = as_scaled(transfer_matrix({z, 0.0}, -2.0, 1.0)) * psi_matrix(ctx, z);
        CHECK(relative_frobenius_error(lhs, rhs) < 1e-8);
    }
}

TEST_CASE("det Psi is constant and equals the Wronskian closed form") {
    auto ctx = MinSolContext::create(kGolden, -2.0, 1.0);
    ScaledComplex w = ctx.wronskian_closed_form();
    for (double z : {0.17, 0.44, 0.83}) {
        ScaledMat2C psi = psi_matrix(ctx, z);
        ScaledComplex det(scaled_det_mantissa(psi), 2.0 * psi.log_scale);
        CHECK(relative_difference(det, w) < 1e-7);
    }
}

TEST_CASE("monodromy matrix is unimodular, 1-periodic, and renormalizes F") {
    SpectralParams p{kGolden, 0.3, -2.0, 1.0};
    auto ctx = MinSolContext::create(p.omega, p.eta, p.l);
    FundamentalSolution fs = fundamental_solution(ctx);
    RenormStep step = renorm_params(p, 0);
    double eta1 = step.next_params.eta, l1 = step.next_params.l;
    for (double x : {0.11, 0.38, 0.74}) {
        ScaledMat2C m1 = monodromy_matrix(fs, p.omega, x);
        CHECK(std::abs(scaled_det_log(m1)) < 1e-8);
        CHECK(std::abs(std::arg(scaled_det_mantissa(m1))) < 1e-8);
        ScaledMat2C m1p = monodromy_matrix(fs, p.omega, x + 1.0);
        CHECK(relative_frobenius_error(m1, m1p) < 1e-8);
        ScaledMat2C f = as_scaled(transfer_matrix({x, 0.0}, eta1, l1));
        CHECK(relative_frobenius_error(m1, f) < 1e-7);
    }
}

TEST_CASE("one-step renormalization identity") {
    SpectralParams p{kGolden, 0.3, 1.0, 0.5};
    const ScaledMat2C s2 = as_scaled(sigma2_matrix());
    for (long n : {50L, -7L, 1L}) {
        RenormBoundary rb = renormalize_once(p, n);
        ScaledMat2C inner = cocycle_product(rb.step.next_params, rb.step.n_next);
        ScaledMat2C rhs = rb.left * s2 * inner * s2 * rb.right;
        ScaledMat2C lhs = cocycle_product(p, n);
        CHECK(relative_frobenius_error(lhs, rhs) < 1e-8);
    }
}

TEST_CASE("companion-equation extension agrees with the base evaluation") {
    auto ctx = MinSolContext::create(kGolden, -2.0, 1.0);
    // in the base strip psi_extended must reduce to psi
    CHECK(relative_difference(psi_extended(ctx, 0.37), ctx.psi({0.37, 0.0})) == 0.0);
    // outside the strip, unit steps of the companion equation must match the
    // omega-step folding of the first equation: two independent recursions
    for (double z : {2.3, 3.7, -2.6}) {
        CHECK(relative_difference(psi_extended(ctx, z), ctx.psi({z, 0.0})) < 1e-8);
    }
}

TEST_CASE("cocycle equals Psi(theta + N omega) Psi^{-1}(theta)") {
    SpectralParams p{kGolden, 0.3, -2.0, 1.0};
    auto ctx = MinSolContext::create(p.omega, p.eta, p.l);
    ScaledMat2C base_inv = scaled_inverse(psi_matrix_extended(ctx, p.theta));
    for (long n : {7L, -7L, 20L}) {
        double z = p.theta + static_cast<double>(n) * p.omega;
        ScaledMat2C rhs = psi_matrix_extended(ctx, z) * base_inv;
        CHECK(relative_frobenius_error(cocycle_product(p, n), rhs) < 1e-8);
    }
}

TEST_CASE("generic renormalization specializes to the Maryland one") {
    SpectralParams p{kGolden, 0.3, 1.0, 0.5};
    auto ctx = MinSolContext::create(p.omega, p.eta, p.l);
    FundamentalSolution fs = fundamental_solution(ctx);
    auto m = [&](double z) { return transfer_matrix({z, 0.0}, p.eta, p.l); };
    GenericRenormalization g = generic_renormalize(m, fs, p.omega, p.theta, 50);
    RenormBoundary rb = renormalize_once(p, 50);
    CHECK(relative_frobenius_error(g.left, rb.left) < 1e-12);
    CHECK(relative_frobenius_error(g.right, rb.right) < 1e-12);
    CHECK(g.n1 == rb.step.n_next);
    CHECK(g.omega1 == doctest::Approx(rb.step.next_params.omega));
    CHECK(g.theta1 == doctest::Approx(rb.step.next_params.theta));
}

TEST_CASE("cascade reconstructs the direct product") {
    // l_k grows like l / omega^k along the chain and the boundary sandwich
    // loses ~log10 e^{cond_k} digits per level, so a small starting l keeps
    // every level well-conditioned through the full depth for N = 100.
    SpectralParams p{kGolden, 0.3, 1.0, 0.1};
    RenormChain chain = cascade(p, 100);
    CHECK(static_cast<double>(chain.levels.size()) <=
          2.0 * std::log2(100.0) + 4.0);
    CHECK(std::labs(chain.terminal_n) <= 1);
    ScaledMat2C direct = cocycle_product(p, 100);
    CHECK(relative_frobenius_error(cascade_reconstruct(chain), direct) < 1e-6);
}

TEST_CASE("scaling the fundamental solution cancels in the monodromy sandwich") {
    SpectralParams p{kGolden, 0.3, -2.0, 1.0};
    auto ctx = MinSolContext::create(p.omega, p.eta, p.l);
    FundamentalSolution fs = fundamental_solution(ctx);
    FundamentalSolution scaled = fs;
    scaled.evaluator = [fs](double z) {
        ScaledMat2C m = fs.evaluator(z);
        m.log_scale += std::log(7.0);
        return m;
    };
    ScaledMat2C a = monodromy_matrix(fs, p.omega, 0.3);
    ScaledMat2C b = monodromy_matrix(scaled, p.omega, 0.3);
    CHECK(relative_frobenius_error(a, b) < 1e-13);
}

TEST_CASE("theta on the potential pole set is rejected loudly") {
    SpectralParams p{kGolden, 0.0, -2.0, 1.0};
    CHECK_THROWS_AS(renormalize_once(p, 5), MinSolPoleError);
}
