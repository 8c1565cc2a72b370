#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maryland/errors.hpp"
#include "maryland/quadrature.hpp"

using namespace maryland;

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);
}  // namespace

TEST_CASE("polynomial over a real interval") {
    auto v = integrate_interval([](double t) { return std::complex<double>(t * t, 0.0); }, 0.0,
                                1.0);
    CHECK(std::abs(v - 1.0 / 3.0) < 1e-14);
}

TEST_CASE("oscillatory integrand needs adaptivity") {
    auto v = integrate_interval(
        [](double t) { return std::complex<double>(std::sin(50.0 * t), 0.0); }, 0.0, kPi);
    double exact = (1.0 - std::cos(50.0 * kPi)) / 50.0;
    CHECK(std::abs(v - exact) < 1e-12);
}

TEST_CASE("complex segment: primitive of exp") {
    std::complex<double> a(0.0, -1.0), b(2.0, 1.0);
    auto v = integrate_segment([](std::complex<double> z) { return std::exp(z); }, a, b);
    CHECK(std::abs(v - (std::exp(b) - std::exp(a))) < 1e-12);
}

TEST_CASE("decaying ray to infinity") {
    PathSpec path;
    path.rays.push_back({{0.0, 0.0}, {1.0, 0.0}, 1.0, 1});
    auto v = integrate([](std::complex<double> z) { return std::exp(-z); }, path);
    CHECK(std::abs(v - 1.0) < 1e-12);

    // inward orientation flips the sign
    path.rays[0].orientation = -1;
    auto w = integrate([](std::complex<double> z) { return std::exp(-z); }, path);
    CHECK(std::abs(w + 1.0) < 1e-12);
}

TEST_CASE("gaussian over the whole line via two rays") {
    PathSpec path;
    path.rays.push_back({{0.0, 0.0}, {1.0, 0.0}, 1.0, 1});
    path.rays.push_back({{0.0, 0.0}, {-1.0, 0.0}, 1.0, -1});
    auto f = [](std::complex<double> z) { return std::exp(-z * z); };
    // the two ray pieces: int_0^inf f - int_{-inf}^0 ... orientation -1 gives +int_{-inf}^0
    auto v = integrate(f, path);
    CHECK(std::abs(v - std::sqrt(kPi)) < 1e-12);
}

TEST_CASE("residues by circle quadrature") {
    auto f1 = [](std::complex<double> z) { return 1.0 / (z - 2.0); };
    CHECK(std::abs(residue_by_circle(f1, {2.0, 0.0}, 0.5) - 1.0) < 1e-13);

    auto f2 = [](std::complex<double> z) { return std::exp(z) / (z * z); };
    // residue of e^z / z^2 at 0 is 1
    CHECK(std::abs(residue_by_circle(f2, {0.0, 0.0}, 0.3) - 1.0) < 1e-13);

    auto f3 = [](std::complex<double> z) { return std::cos(z); };  // analytic: residue 0
    CHECK(std::abs(residue_by_circle(f3, {0.0, 0.0}, 1.0)) < 1e-13);
}

TEST_CASE("budget exhaustion raises QuadratureError") {
    QuadratureOptions opts;
    opts.max_evals = 50;
    auto nasty = [](std::complex<double> z) {
        return std::complex<double>(std::sin(1000.0 * z.real()), 0.0);
    };
    CHECK_THROWS_AS(
        integrate_segment(nasty, {0.0, 0.0}, {100.0, 0.0}, opts), QuadratureError);
}

TEST_CASE("gamma contour geometry") {
    double omega = 0.618, l = 0.5;
    // purely imaginary z: symmetric cone, vertical-ish rays
    PathSpec g = build_gamma({0.0, 2.0}, omega, l);
    REQUIRE(g.rays.size() == 2);
    REQUIRE(g.segments.size() == 1);
    CHECK(g.segments[0].a == std::complex<double>(0.0, -2.0 * l));
    CHECK(g.segments[0].b == std::complex<double>(0.0, 2.0 * l));
    for (const Ray& r : g.rays) {
        // decay of exp(i p z / omega) along each ray, outward
        std::complex<double> z(0.0, 2.0);
        double rate = -(kI * r.direction * z).real() / omega;
        CHECK(rate > 0.05);
        // rays never descend into the pole band |Im p| < 2l
        if (r.orientation == 1) CHECK(r.direction.imag() > 0.0);
        if (r.orientation == -1) CHECK(r.direction.imag() < 0.0);
    }

    // nearly real z: cone collapses
    CHECK_THROWS_AS(build_gamma({5.0, 1e-4}, omega, l), ContourSelectionError);
    CHECK_THROWS_AS(build_gamma({0.0, 0.0}, omega, l), ContourSelectionError);

    // lower half-plane z works too
    PathSpec h = build_gamma({-1.0, -2.0}, omega, l);
    for (const Ray& r : h.rays) {
        std::complex<double> z(-1.0, -2.0);
        CHECK(-(kI * r.direction * z).real() / omega > 0.05);
    }
}

TEST_CASE("gamma contour value is deformation invariant") {
    // Integrand analytic to the right of Re p = -1: two different admissible
    // contours must give the same integral.
    std::complex<double> z(0.4, 1.1);
    double omega = 0.618, l = 0.5;
    auto f = [z, omega](std::complex<double> p) {
        return std::exp(kI * p * z / omega) / ((p + 1.0) * (p + 1.0) + 9.0);
    };
    PathSpec a = build_gamma(z, omega, l);
    std::complex<double> va = integrate(f, a, {});

    double phi = std::arg(z);
    double alpha_up = 0.5 * (kPi - phi) + 0.15;
    double alpha_low = -0.5 * phi - 0.1;
    PathSpec b;
    b.segments.push_back({{0.0, -3.0}, {0.0, 3.0}});
    b.rays.push_back({{0.0, 3.0}, std::exp(kI * alpha_up), 1.0, 1});
    b.rays.push_back({{0.0, -3.0}, std::exp(kI * alpha_low), 1.0, -1});
    std::complex<double> vb = integrate(f, b, {});

    CHECK(std::abs(va - vb) < 1e-11 * std::max(1.0, std::abs(va)));
}
