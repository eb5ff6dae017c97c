// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "psi/annulus.hpp"
#include "psi/checks.hpp"
#include "psi/special.hpp"

using namespace psi;

namespace {

// Generating-function oracle: the k-th Taylor coefficient of
// (1 - 2 t z + z^2)^{-lambda} at z = 0 via a trapezoid contour integral.
double generating_coefficient(int k, double lambda, double t) {
    const int m = 512;
    const double radius = 0.35;
    std::complex<double> acc = 0.0;
    for (int j = 0; j < m; ++j) {
        const double a = 2.0 * std::numbers::pi * j / m;
        const std::complex<double> z = std::polar(radius, a);
        const std::complex<double> g = std::pow(1.0 - 2.0 * t * z + z * z, -lambda);
        acc += g * std::polar(1.0, -k * a);
    }
    return (acc / static_cast<double>(m)).real() / std::pow(radius, k);
}

}  // namespace

TEST_CASE("gegenbauer recurrence against the generating function") {
    for (const double lambda : {2.0, 3.0}) {
        for (const double t : {-0.9, -0.4, 0.0, 0.25, 0.7, 1.0}) {
            for (int k = 0; k <= 8; ++k) {
                const double want = generating_coefficient(k, lambda, t);
                CHECK(gegenbauer(k, lambda, t) ==
                      doctest::Approx(want).epsilon(1e-9).scale(std::abs(want) + 1.0));
            }
        }
    }
    CHECK(gegenbauer(0, 2.0, 0.3) == 1.0);
    // frozen quadratic for lambda = 2 (from the generating-function expansion)
    for (const double t : {-0.6, 0.0, 0.5, 1.0})
        CHECK(gegenbauer(2, 2.0, t) == doctest::Approx(12.0 * t * t - 2.0).epsilon(1e-14));
}

TEST_CASE("value at one is the rising-factorial ratio") {
    // (2n)_k / k! with n = 2, k = 3: 4*5*6 / 6 = 20
    CHECK(gegenbauer(3, 2.0, 1.0) == doctest::Approx(20.0).epsilon(1e-13));
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 12; ++k)
            CHECK(gegenbauer(k, n, 1.0) ==
                  doctest::Approx(pochhammer(2.0 * n, k) / std::tgamma(k + 1.0))
                      .epsilon(1e-12));
}

TEST_CASE("sphere integrals of gegenbauer polynomials") {
    CHECK(gegenbauer_sphere_integral(2, 0) == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(gegenbauer_sphere_integral(3, 0) == doctest::Approx(4.0 * std::numbers::pi));
    CHECK(gegenbauer_sphere_integral(2, 1) == 0.0);
    CHECK(gegenbauer_sphere_integral(3, 7) == 0.0);
    CHECK(gegenbauer_sphere_integral(2, 2) ==
          doctest::Approx(8.0 * std::numbers::pi).epsilon(1e-14));
    for (int m = 0; m <= 12; ++m) {
        CHECK(gegenbauer_sphere_integral(2, 2 * m) > 0.0);
        CHECK(gegenbauer_sphere_integral(3, 2 * m) > 0.0);
    }
    // quadrature cross-check (n = 2 and 3, m <= 10)
    CHECK(checks::gegenbauer_sphere_integrals(2, 10).pass);
    CHECK(checks::gegenbauer_sphere_integrals(3, 10).pass);
}

TEST_CASE("weighted moments: closed forms, recurrence, quadrature") {
    // I_0 for n = 3 reduces to 2
    CHECK(gegenbauer_weighted_moments(3, 0).i_m == doctest::Approx(2.0).epsilon(1e-14));
    // J_m / I_m ratio identity
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= 10; ++m) {
            const MomentPair ij = gegenbauer_weighted_moments(n, m);
            CHECK(ij.j_m / ij.i_m ==
                  doctest::Approx(2.0 * (m + n) / (2.0 * m + n)).epsilon(1e-12));
            CHECK(gegenbauer_moment_recurrence(n, m) ==
                  doctest::Approx(ij.i_m).epsilon(1e-12));
        }
    for (int n = 2; n <= 4; ++n) CHECK(checks::gegenbauer_moments(n, 10).pass);
}

TEST_CASE("series at a degenerate (solid-ball) ring") {
    // inner radius 0, outer 1: the complement is only the exterior; at the
    // center the potential collapses to the leading coefficient
    SeriesParams params{2, {{0.0, 1.0}}, 10'000'000, 1e-13};
    const SeriesEval e = psi_series(params, 1e-12);
    CHECK(e.psi == doctest::Approx(std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("series derivative blows down at the inner edge") {
    SeriesParams params{2, {{1.0, 2.0}}, 10'000'000, 1e-12};
    const double r = 1.0 + 1e-4 * (2.0 - 1.0);
    CHECK(psi_series(params, r).dpsi < -1e3);
}

TEST_CASE("series second derivative is positive across rings") {
    for (int n = 2; n <= 3; ++n) {
        CHECK(checks::annulus_second_derivative_positive(n, 1.0, 2.0, 100).pass);
        CHECK(checks::annulus_second_derivative_positive(n, 0.5, 3.0, 100).pass);
    }
}

TEST_CASE("series matches the quadrature route") {
    CHECK(checks::annulus_series_vs_quadrature(2, 1.0, 2.0, 10, 5).pass);
    CHECK(checks::annulus_series_vs_quadrature(3, 0.5, 3.0, 10, 5).pass);
}

TEST_CASE("critical radii: one per ring") {
    SeriesParams one{2, {{1.0, 2.0}}, 10'000'000, 1e-12};
    const auto r1 = critical_radii(one);
    REQUIRE(r1.size() == 1);
    CHECK(1.0 < r1[0]);
    CHECK(r1[0] < 2.0);
    // residual: |psi'(root)| far below the curvature scale
    const SeriesEval at_root = psi_series(one, r1[0]);
    CHECK(std::abs(at_root.dpsi) <= 1e-9 * std::abs(at_root.d2psi) * (2.0 - 1.0));

    SeriesParams two{2, {{1.0, 2.0}, {3.0, 4.0}}, 10'000'000, 1e-12};
    const auto r2 = critical_radii(two);
    REQUIRE(r2.size() == 2);
    CHECK(1.0 < r2[0]);
    CHECK(r2[0] < 2.0);
    CHECK(3.0 < r2[1]);
    CHECK(r2[1] < 4.0);
}

TEST_CASE("critical radii scale with the domain") {
    SeriesParams base{2, {{1.0, 2.0}}, 10'000'000, 1e-12};
    const double s = 2.5;
    SeriesParams scaled{2, {{s * 1.0, s * 2.0}}, 10'000'000, 1e-12};
    const double r0 = critical_radii(base)[0];
    const double rs = critical_radii(scaled)[0];
    CHECK(std::abs(rs - s * r0) <= 1e-9 * s);
}

TEST_CASE("series error paths") {
    SeriesParams params{2, {{1.0, 2.0}}, 10'000'000, 1e-12};
    CHECK_THROWS_AS(psi_series(params, 2.5), RadiusOutsideRings);
    CHECK_THROWS_AS(psi_series(params, 0.5), RadiusOutsideRings);
    SeriesParams starved{2, {{1.0, 2.0}}, 4, 1e-12};
    CHECK_THROWS_AS(critical_radii(starved), BracketSignFailure);
    SeriesParams bad{2, {{2.0, 1.0}}, 100, 1e-12};
    CHECK_THROWS_AS(psi_series(bad, 1.5), ConfigError);
}

TEST_CASE("single-root confirmation by sweep") {
    CHECK(checks::annulus_single_root(2, 1.0, 2.0, 1000).pass);
    CHECK(checks::annulus_single_root(3, 0.5, 3.0, 1000).pass);
}

TEST_CASE("series derivatives match finite differences of the series value") {
    for (const int n : {2, 3}) {
        SeriesParams params{n, {{1.0, 2.0}, {3.0, 4.0}}, 10'000'000, 1e-13};
        for (const double r : {1.3, 1.7, 3.2, 3.8}) {
            const SeriesEval e = psi_series(params, r);
            const double h = 1e-6;
            const double up = psi_series(params, r + h).psi;
            const double dn = psi_series(params, r - h).psi;
            const double fd1 = (up - dn) / (2.0 * h);
            const double fd2 = (up - 2.0 * e.psi + dn) / (h * h);
            CHECK(e.dpsi == doctest::Approx(fd1).epsilon(1e-8));
            CHECK(e.d2psi == doctest::Approx(fd2).epsilon(1e-3));
        }
    }
}
