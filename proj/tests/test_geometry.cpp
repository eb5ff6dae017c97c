// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "psi/checks.hpp"
#include "psi/geometry.hpp"
#include "psi/rng.hpp"

using namespace psi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent oracle: scan memberships along the ray at a fixed step and
// recover the complement interval starts/ends to within one step.
std::vector<Interval> scan_complement(const Domain& dom, const Vec& xi, const Vec& w,
                                      double reach, double step) {
    std::vector<Interval> out;
    bool in_complement = false;
    double begin = 0.0;
    for (double t = step; t <= reach; t += step) {
        const bool c = !contains(dom, xi + t * w);
        if (c && !in_complement) {
            begin = t;
            in_complement = true;
        }
        if (!c && in_complement) {
            out.push_back({begin, t});
            in_complement = false;
        }
    }
    if (in_complement) out.push_back({begin, kInf});
    return out;
}

Domain unit_square() {
    return Domain::polytope({{Vec{1.0, 0.0}, 1.0},
                             {Vec{-1.0, 0.0}, 0.0},
                             {Vec{0.0, 1.0}, 1.0},
                             {Vec{0.0, -1.0}, 0.0}});
}

}  // namespace

TEST_CASE("membership basics") {
    const Domain ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
    CHECK(contains(ball, Vec{0.0, 0.0}));
    CHECK_FALSE(contains(ball, Vec{1.0, 0.0}));  // boundary excluded, open set
    const Domain ann = Domain::multi_annulus(Vec{0.0, 0.0}, {{1.0, 2.0}});
    CHECK(contains(ann, Vec{1.5, 0.0}));
    CHECK_FALSE(contains(ann, Vec{0.5, 0.0}));
    CHECK_FALSE(contains(ann, Vec{1.0, 0.0}));
}

TEST_CASE("ball ray exits") {
    const Domain ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
    for (int k = 0; k < 8; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 8.0;
        const UnitDirection w(Vec{std::cos(a), std::sin(a)});
        const RayExit ex = ray_exit(ball, Vec{0.0, 0.0}, w);
        CHECK(ex.distance == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(distance(ex.normal, w.vec()) < 1e-14);
    }
    const RayExit ex = ray_exit(ball, Vec{0.5, 0.0}, UnitDirection(Vec{1.0, 0.0}));
    CHECK(ex.distance == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ex.normal[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(ray_exit(ball, Vec{2.0, 0.0}, UnitDirection(Vec{1.0, 0.0})),
                    PointNotInterior);
}

TEST_CASE("translation identity along the joining direction") {
    const Domain ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
    const Vec x1{0.2, 0.0}, x2{0.5, 0.0};
    const UnitDirection w(x2 - x1);
    const double r1 = exit_distance(ball, x1, w);
    const double r2 = exit_distance(ball, x2, w);
    CHECK(r1 == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(r2 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(r2 - (r1 - 0.3)) < 1e-14);
}

TEST_CASE("polytope ray exit picks the nearest face") {
    const Domain sq = unit_square();
    const RayExit ex = ray_exit(sq, Vec{0.5, 0.5}, UnitDirection(Vec{0.0, 1.0}));
    CHECK(ex.distance == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ex.normal[0] == doctest::Approx(0.0));
    CHECK(ex.normal[1] == doctest::Approx(1.0));
}

TEST_CASE("polytope construction validates") {
    // two half-spaces cannot bound the plane
    CHECK_THROWS_AS(Domain::polytope({{Vec{1.0, 0.0}, 1.0}, {Vec{0.0, 1.0}, 1.0}}),
                    DegenerateDomain);
    // contradictory slabs have empty interior
    CHECK_THROWS_AS(Domain::polytope({{Vec{1.0, 0.0}, -1.0},
                                      {Vec{-1.0, 0.0}, -1.0},
                                      {Vec{0.0, 1.0}, 1.0},
                                      {Vec{0.0, -1.0}, 1.0}}),
                    EmptyInterior);
    CHECK_THROWS_AS(Domain::polytope({{Vec{0.0, 0.0}, 1.0}}), ConfigError);
}

TEST_CASE("complement intervals") {
    const Domain ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
    const auto ci = complement_intervals(ball, Vec{0.0, 0.0}, UnitDirection(Vec{0.3, -0.8}));
    REQUIRE(ci.intervals.size() == 1);
    CHECK(ci.intervals[0].begin == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ci.intervals[0].end == kInf);

    const Domain ann = Domain::multi_annulus(Vec{0.0, 0.0}, {{1.0, 2.0}});
    const Vec xi{1.5, 0.0};
    const auto back = complement_intervals(ann, xi, UnitDirection(Vec{-1.0, 0.0}));
    REQUIRE(back.intervals.size() == 2);
    CHECK(back.intervals[0].begin == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(back.intervals[0].end == doctest::Approx(2.5).epsilon(1e-13));
    CHECK(back.intervals[1].begin == doctest::Approx(3.5).epsilon(1e-13));
    CHECK(back.intervals[1].end == kInf);

    // tangential direction: single interval starting at sqrt(b^2 - r^2),
    // cross-checked against the dense membership scan
    const auto up = complement_intervals(ann, xi, UnitDirection(Vec{0.0, 1.0}));
    REQUIRE(up.intervals.size() == 1);
    const double want = std::sqrt(4.0 - 1.5 * 1.5);
    CHECK(up.intervals[0].begin == doctest::Approx(want).epsilon(1e-12));
    const auto scanned = scan_complement(ann, xi, Vec{0.0, 1.0}, 6.0, 1e-5);
    REQUIRE(scanned.size() == 1);
    CHECK(std::abs(scanned[0].begin - up.intervals[0].begin) < 2e-5);
}

TEST_CASE("complement intervals match dense scans on random rays") {
    const std::uint64_t seed = 1234;
    int idx = 0;
    for (const Domain& dom :
         {checks::random_ball(2, seed, 1), checks::random_ellipsoid(3, seed, 2),
          checks::random_polytope(2, seed, 3), checks::random_stadium(seed, 4),
          checks::random_annulus(2, seed, 5),
          Domain::multi_annulus(Vec{0.0, 0.0, 0.0}, {{0.7, 1.4}, {2.0, 2.6}})}) {
        const auto res = checks::intervals_match_scan(dom, 20, seed + idx++);
        CHECK_MESSAGE(res.pass, res.name, ": ", res.detail);
    }
}

TEST_CASE("metrics") {
    const Domain ball = Domain::ball(Vec{0.0, 0.0}, 2.0);
    CHECK(metrics(ball).diameter() == doctest::Approx(4.0));
    CHECK(metrics(ball).boundary_distance(Vec{0.5, 0.0}) == doctest::Approx(1.5));
    CHECK(metrics(ball).lipschitz_bound(0.5) == doctest::Approx(8.0));

    const Domain ell = Domain::ellipsoid(Vec{0.0, 0.0}, Vec{2.0, 1.0});
    CHECK(metrics(ell).diameter() == doctest::Approx(4.0));  // major axis

    const Domain sq = unit_square();
    CHECK(metrics(sq).diameter() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(metrics(sq).boundary_distance(Vec{0.5, 0.5}) == doctest::Approx(0.5));

    const Domain ann = Domain::multi_annulus(Vec{0.0, 0.0}, {{1.0, 2.0}});
    CHECK(metrics(ann).diameter() == doctest::Approx(4.0));
    CHECK(metrics(ann).boundary_distance(Vec{1.2, 0.0}) == doctest::Approx(0.2));
}

TEST_CASE("ellipsoid boundary distance agrees with dense boundary sampling") {
    // includes a point inside the evolute where the nearest point leaves the
    // gradient branch
    const Vec axes{2.0, 1.0};
    for (const Vec& rel : {Vec{0.1, 0.0}, Vec{0.5, 0.3}, Vec{-1.2, 0.4}, Vec{0.0, 0.0},
                           Vec{1.5, 0.0}, Vec{0.0, 0.7}}) {
        double brute = kInf;
        for (int k = 0; k < 2000000; ++k) {
            const double a = 2.0 * std::numbers::pi * k / 2000000.0;
            const Vec y{axes[0] * std::cos(a), axes[1] * std::sin(a)};
            brute = std::min(brute, distance(y, rel));
        }
        const double got = ellipsoid_boundary_distance(axes, rel);
        CHECK_MESSAGE(got == doctest::Approx(brute).epsilon(1e-9), "rel = (", rel[0], ",",
                      rel[1], ")");
    }
    // 3-D spot check against a fine product sampling
    const Vec axes3{1.5, 1.0, 0.8};
    const Vec rel3{0.3, -0.2, 0.1};
    double brute = kInf;
    for (int i = 0; i <= 1200; ++i)
        for (int j = 0; j <= 1200; ++j) {
            const double th = std::numbers::pi * i / 1200.0;
            const double ph = 2.0 * std::numbers::pi * j / 1200.0;
            const Vec y{axes3[0] * std::sin(th) * std::cos(ph),
                        axes3[1] * std::sin(th) * std::sin(ph), axes3[2] * std::cos(th)};
            brute = std::min(brute, distance(y, rel3));
        }
    CHECK(ellipsoid_boundary_distance(axes3, rel3) == doctest::Approx(brute).epsilon(1e-6));
}

TEST_CASE("stadium exit distance matches membership bisection") {
    const Domain st = Domain::stadium(Vec{-0.7, 0.1}, Vec{0.8, -0.2}, 0.5);
    const DomainMetrics met(st);
    for (int i = 0; i < 200; ++i) {
        const Vec xi = sample_interior(st, 0.02, 77, static_cast<std::uint64_t>(i));
        const double a = 2.0 * std::numbers::pi * counter_uniform(77, 10000 + i);
        const UnitDirection w(Vec{std::cos(a), std::sin(a)});
        const double rho = exit_distance(st, xi, w);
        // bisection on membership is an independent route to the same exit
        double lo = 0.0, hi = 2.0 * met.diameter();
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (contains(st, xi + mid * w.vec()))
                lo = mid;
            else
                hi = mid;
        }
        CHECK(std::abs(rho - 0.5 * (lo + hi)) < 1e-10);
        const RayExit ex = ray_exit(st, xi, w);
        CHECK(dot(ex.normal, w.vec()) > 0.0);
        CHECK(norm(ex.normal) == doctest::Approx(1.0).epsilon(1e-12));
        // exit point sits on the boundary: distance to the core segment is R
        const Vec y = xi + ex.distance * w.vec();
        CHECK(met.boundary_distance(y) == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("implicit convex domain: bisection exits, no normals") {
    // a ball supplied only as a membership predicate
    const Vec center{0.2, -0.1};
    const Domain impl = Domain::implicit_convex(
        [center](const Vec& x) { return distance(x, center) < 0.8; }, center, 1.6);
    const Domain exact = Domain::ball(center, 0.8);
    for (int i = 0; i < 25; ++i) {
        const double a = 2.0 * std::numbers::pi * i / 25.0;
        const UnitDirection w(Vec{std::cos(a), std::sin(a)});
        const Vec xi{0.4, 0.1};
        CHECK(std::abs(exit_distance(impl, xi, w) - exit_distance(exact, xi, w)) < 1e-10);
    }
    CHECK_THROWS_AS(ray_exit(impl, Vec{0.2, -0.1}, UnitDirection(Vec{1.0, 0.0})),
                    NormalsUnavailable);
}

TEST_CASE("multi annulus rejects ray_exit and bad radii") {
    const Domain ann = Domain::multi_annulus(Vec{0.0, 0.0}, {{1.0, 2.0}});
    CHECK_THROWS_AS(ray_exit(ann, Vec{1.5, 0.0}, UnitDirection(Vec{1.0, 0.0})), ConfigError);
    CHECK_THROWS_AS(Domain::multi_annulus(Vec{0.0, 0.0}, {{2.0, 1.0}}), ConfigError);
    CHECK_THROWS_AS(Domain::multi_annulus(Vec{0.0, 0.0}, {{1.0, 2.0}, {1.5, 3.0}}), ConfigError);
}

TEST_CASE("exit-distance invariant suites") {
    const std::uint64_t seed = 555;
    for (const Domain& dom :
         {checks::random_ball(2, seed, 1), checks::random_ellipsoid(2, seed, 2),
          checks::random_ellipsoid(3, seed, 3), checks::random_polytope(3, seed, 4),
          checks::random_stadium(seed, 5)}) {
        CHECK_MESSAGE(checks::rho_concavity(dom, 300, seed).pass, dom.shape_name());
        CHECK_MESSAGE(checks::rho_translation(dom, 300, seed).pass, dom.shape_name());
        CHECK_MESSAGE(checks::rho_lipschitz(dom, 300, seed).pass, dom.shape_name());
        CHECK_MESSAGE(checks::rho_transversality(dom, 300, seed).pass, dom.shape_name());
    }
}

TEST_CASE("tangency breakpoints") {
    const MultiAnnulus ann{Vec{0.0, 0.0}, {{1.0, 2.0}}};
    const auto thetas = sphere_tangency_polar_breakpoints(ann, 1.5);
    REQUIRE(thetas.size() == 1);  // only the inner sphere lies below r
    CHECK(thetas[0] == doctest::Approx(std::numbers::pi - std::asin(1.0 / 1.5)).epsilon(1e-14));
}

TEST_CASE("interior sampling is deterministic and honours the margin") {
    const Domain dom = checks::random_polytope(2, 99, 1);
    const DomainMetrics met(dom);
    for (int i = 0; i < 50; ++i) {
        const Vec a = sample_interior(dom, 0.05, 7, static_cast<std::uint64_t>(i));
        const Vec b = sample_interior(dom, 0.05, 7, static_cast<std::uint64_t>(i));
        CHECK(distance(a, b) == 0.0);
        CHECK(met.boundary_distance(a) >= 0.05 * met.diameter());
    }
}

TEST_CASE("ridge ties resolve to the lowest face index") {
    // diagonal ray from the square center hits the corner where two faces
    // tie exactly; the first face in declaration order wins
    const Domain sq = unit_square();
    const RayExit ex =
        ray_exit(sq, Vec{0.5, 0.5}, UnitDirection(Vec{1.0, 1.0}));
    CHECK(ex.normal[0] == 1.0);
    CHECK(ex.normal[1] == 0.0);
}

TEST_CASE("unit directions normalize on construction") {
    const UnitDirection w(Vec{3.0, 4.0});
    CHECK(w[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs(norm(w.vec()) - 1.0) <= 1e-14);
}
