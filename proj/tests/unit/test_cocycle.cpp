#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maryland/cocycle.hpp"
#include "maryland/errors.hpp"

using namespace maryland;

namespace {
constexpr double kPi = std::numbers::pi;
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;
const SpectralParams kP{kGolden, 0.3, -2.0, 1.0};
}  // namespace

TEST_CASE("transfer matrix entries and determinant") {
    Mat2C f = transfer_matrix({0.3, 0.0}, kP.eta, kP.l);
    double expect = kP.energy() - kP.coupling() / std::tan(kPi * 0.3);
    CHECK(f.a11.real() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(f.a11.imag() == 0.0);
    CHECK(f.a12 == std::complex<double>(-1.0, 0.0));
    CHECK(f.a21 == std::complex<double>(1.0, 0.0));
    CHECK(f.a22 == std::complex<double>(0.0, 0.0));
    CHECK(std::abs(f.det() - 1.0) < 1e-15);
}

TEST_CASE("transfer_inverse really inverts") {
    Mat2C f = transfer_matrix({0.77, 0.2}, -1.0, 0.4);
    Mat2C g = transfer_inverse({0.77, 0.2}, -1.0, 0.4);
    Mat2C id = f * g;
    CHECK(std::abs(id.a11 - 1.0) < 1e-14);
    CHECK(std::abs(id.a12) < 1e-14);
    CHECK(std::abs(id.a21) < 1e-14);
    CHECK(std::abs(id.a22 - 1.0) < 1e-14);
}

TEST_CASE("pole guard") {
    CHECK_THROWS_AS(transfer_matrix({1.0 + 1e-12, 0.0}, -2.0, 1.0), PotentialPoleError);
    SpectralParams p0{kGolden, 0.0, -2.0, 1.0};
    CHECK_THROWS_AS(cocycle_product(p0, 5), PotentialPoleError);
    try {
        cocycle_product(p0, 5);
    } catch (const PotentialPoleError& e) {
        CHECK(e.orbit_index == 0);
    }
}

TEST_CASE("cocycle determinant stays 1 in the scaled representation") {
    // Entry growth e^{lN} makes the determinant of the represented matrix a
    // difference of nearly equal products; it is observable in double only
    // while e^{-2lN} stays well above machine epsilon.
    for (long n : {1L, 3L, 5L, -5L}) {
        ScaledMat2C p = cocycle_product(kP, n);
        CHECK(std::abs(scaled_det_log(p)) < 1e-10);
        CHECK(std::abs(std::arg(scaled_det_mantissa(p))) < 1e-10);
    }
}

TEST_CASE("cocycle property P_{N+M}(theta) = P_N(theta + M omega) P_M(theta)") {
    for (auto [n, m] : {std::pair<long, long>{7, 5}, {20, -8}, {-9, -6}, {3, 40}}) {
        ScaledMat2C lhs = cocycle_product(kP, n + m);
        SpectralParams shifted = kP;
        shifted.theta = kP.theta + static_cast<double>(m) * kP.omega;
        ScaledMat2C rhs = cocycle_product(shifted, n) * cocycle_product(kP, m);
        // orbit points near an integer amplify rounding via cot'; allow slack
        CHECK(relative_frobenius_error(lhs, rhs) < 1e-8);
    }
}

TEST_CASE("P_0 is the identity; P_1 is a single transfer matrix") {
    ScaledMat2C p0 = cocycle_product(kP, 0);
    CHECK(relative_frobenius_error(p0, ScaledMat2C{}) == doctest::Approx(0.0));
    ScaledMat2C p1 = cocycle_product(kP, 1);
    ScaledMat2C f{transfer_matrix({kP.theta, 0.0}, kP.eta, kP.l), 0.0};
    CHECK(relative_frobenius_error(p1, f) < 1e-15);
}

TEST_CASE("P_{-N}(theta) inverts P_N(theta - N omega)") {
    // inversion conditioning degrades like e^{2lN}; keep N modest
    long n = 6;
    SpectralParams shifted = kP;
    shifted.theta = kP.theta - static_cast<double>(n) * kP.omega;
    ScaledMat2C a = cocycle_product(kP, -n);
    ScaledMat2C b = scaled_inverse(cocycle_product(shifted, n));
    CHECK(relative_frobenius_error(a, b) < 1e-9);
}

TEST_CASE("extended backend agrees with double") {
    CocycleOptions ext;
    ext.precision = Precision::kExtended;
    for (long n : {30L, -30L, 100L}) {
        ScaledMat2C pd = cocycle_product(kP, n);
        ScaledMat2C pe = cocycle_product(kP, n, ext);
        CHECK(relative_frobenius_error(pd, pe) < 1e-7);
    }
}

TEST_CASE("entries grow like exp(l N) for N large (hyperbolic regime)") {
    ScaledMat2C p = cocycle_product(kP, 100);
    double growth = p.log_scale / 100.0;
    CHECK(growth > 0.5 * kP.l);
    CHECK(growth < 2.5 * kP.l);
}
