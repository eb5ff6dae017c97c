// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: every shipped claim is exercised end to end at its stated
// tolerance and reported as one PASS/FAIL line. Exits nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "psi/annulus.hpp"
#include "psi/checks.hpp"
#include "psi/functional.hpp"
#include "psi/oracle.hpp"
#include "psi/solver.hpp"
#include "psi/special.hpp"

using namespace psi;

namespace {

int g_failures = 0;

void report(int number, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, title.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// --------------------------------------------------------------------------

void criterion_1_ball_uniqueness() {
    const double t0 = now_seconds();
    double worst_center = 0.0, worst_disagreement = 0.0;
    bool pass = true;
    for (const double radius : {0.5, 1.0, 3.0}) {
        for (const int n : {2, 3}) {
            const Domain ball = Domain::ball(Vec(n), radius);
            SolverConfig cfg;
            const CriticalPointReport rep = uniqueness_audit(
                ball, FunctionalSpec::psi_default(n), build_rule(n, 32), cfg, 20, 2026);
            worst_center = std::max(worst_center, norm(rep.minimizer) / radius);
            worst_disagreement =
                std::max(worst_disagreement, rep.max_pairwise_start_disagreement / radius);
            pass = pass && norm(rep.minimizer) <= 1e-7 * radius &&
                   rep.max_pairwise_start_disagreement <= 1e-7 * radius;
        }
    }
    const double elapsed = now_seconds() - t0;
    pass = pass && elapsed < 10.0;
    report(1, "ball critical point at the origin, 20-start audit",
           pass,
           "max |x*|/R " + fmt(worst_center) + ", max disagreement/R " +
               fmt(worst_disagreement) + ", " + fmt(elapsed) + " s");
}

void criterion_2_ball_center_value() {
    double worst = 0.0;
    for (const double radius : {0.5, 1.0, 3.0}) {
        for (const int n : {2, 3}) {
            const Domain ball = Domain::ball(Vec(n), radius);
            const double got =
                eval_phi(ball, Vec(n), FunctionalSpec::psi_default(n), build_rule(n, 16));
            const double want = sphere_area(n) * std::pow(radius, -n) / n;
            worst = std::max(worst, std::abs(got - want) / want);
        }
    }
    report(2, "ball center value |S^{n-1}| R^{-n} / n", worst <= 1e-10,
           "worst rel err " + fmt(worst));
}

void criterion_3_ball_monotonicity() {
    bool positive = true;
    double worst_rel = 0.0;
    for (const int n : {2, 3}) {
        const Domain ball = Domain::ball(Vec(n), 1.0);
        // the outermost grid radius leaves only 2% clearance; both routes
        // need enough nodes to resolve the resulting boundary peak
        const SphericalRule rule = build_rule(n, 256);
        const FunctionalSpec spec = FunctionalSpec::psi_default(n);
        for (int i = 1; i <= 50; ++i) {
            const double r = i / 51.0;
            const double direct = ball_radial_derivative(1.0, r, n, 2000);
            positive = positive && direct > 0.0;
            const double h = 1e-5;
            Vec hi(n), lo(n);
            hi[0] = r + h;
            lo[0] = r - h;
            const double fd =
                (eval_phi(ball, hi, spec, rule) - eval_phi(ball, lo, spec, rule)) / (2.0 * h);
            worst_rel = std::max(worst_rel, std::abs(direct - fd) / std::abs(fd));
        }
    }
    report(3, "ball radial derivative positive and matches finite differences",
           positive && worst_rel <= 1e-4,
           std::string(positive ? "all positive" : "sign violation") + ", worst rel diff " +
               fmt(worst_rel));
}

void criterion_4_ellipsoid_symmetry() {
    double worst_sym = 0.0, worst_center = 0.0;
    for (const int n : {2, 3}) {
        Vec axes(n);
        axes[0] = 2.0;
        axes[1] = 1.0;
        if (n == 3) axes[2] = 0.8;
        const Domain ell = Domain::ellipsoid(Vec(n), axes);
        const SphericalRule rule = build_rule(n, 48);
        const FunctionalSpec spec = FunctionalSpec::psi_default(n);
        for (int i = 0; i < 20; ++i) {
            const Vec xi = sample_interior(ell, 0.02, 4000 + n, i);
            const double a = eval_phi(ell, xi, spec, rule);
            const double b = eval_phi(ell, -1.0 * xi, spec, rule);
            worst_sym = std::max(worst_sym, std::abs(a - b) / a);
        }
        SolverConfig cfg;
        const CriticalPointReport rep = uniqueness_audit(ell, spec, rule, cfg, 8, 11);
        worst_center =
            std::max(worst_center, norm(rep.minimizer) / metrics(ell).diameter());
    }
    report(4, "ellipsoid mirror symmetry and central minimizer",
           worst_sym <= 1e-9 && worst_center <= 1e-7,
           "worst |psi(x)-psi(-x)|/psi " + fmt(worst_sym) + ", worst |x*|/diam " +
               fmt(worst_center));
}

void criterion_5_strict_convexity() {
    bool pass = true;
    std::string detail;
    const std::uint64_t seed = 808;
    const std::vector<std::pair<std::string, Domain>> shapes = {
        {"ball", checks::random_ball(2, seed, 1)},
        {"ellipsoid", checks::random_ellipsoid(2, seed, 2)},
        {"polytope", checks::random_polytope(2, seed, 3)},
        {"stadium", checks::random_stadium(seed, 4)}};
    for (const auto& [name, dom] : shapes) {
        const checks::CheckResult r = checks::convexity_midpoint(
            dom, FunctionalSpec::psi_default(dom.dim()), checks::default_rule(dom), 200, seed,
            true);
        pass = pass && r.pass;
        detail += name + " margin " + fmt(r.worst_margin) + "; ";
    }
    report(5, "strict midpoint convexity, 200 separated pairs per family", pass, detail);
}

void criterion_6_gradient_formula() {
    double worst_smooth = 0.0, worst_poly = 0.0;
    const std::uint64_t seed = 909;
    for (const Domain& dom :
         {checks::random_ball(2, seed, 1), checks::random_ball(3, seed, 2),
          checks::random_ellipsoid(2, seed, 3), checks::random_ellipsoid(3, seed, 4)}) {
        const checks::CheckResult r =
            checks::gradient_agreement(dom, checks::default_rule(dom), 25, 1e-5, seed);
        worst_smooth = std::max(worst_smooth, 1e-5 - r.worst_margin);
    }
    for (const Domain& dom :
         {checks::random_polytope(2, seed, 5), checks::random_polytope(3, seed, 6)}) {
        const checks::CheckResult r =
            checks::gradient_agreement(dom, checks::default_rule(dom), 50, 1e-3, seed);
        worst_poly = std::max(worst_poly, 1e-3 - r.worst_margin);
    }
    report(6, "boundary-normal gradient vs finite differences",
           worst_smooth <= 1e-5 && worst_poly <= 1e-3,
           "smooth worst rel " + fmt(worst_smooth) + " (tol 1e-5), polytope worst rel " +
               fmt(worst_poly) + " (tol 1e-3)");
}

void criterion_7_hessian_psd() {
    double worst = std::numeric_limits<double>::infinity();
    const std::uint64_t seed = 70;
    for (const Domain& dom :
         {checks::random_ball(2, seed, 1), checks::random_ellipsoid(3, seed, 2),
          checks::random_polytope(2, seed, 3)}) {
        const checks::CheckResult r =
            checks::hessian_psd(dom, checks::default_rule(dom), 50, seed);
        worst = std::min(worst, r.worst_margin);
    }
    report(7, "hessian positive definite at 50 interior points per shape", worst > 0.0,
           "smallest eigenvalue " + fmt(worst));
}

void criterion_8_gegenbauer() {
    bool odd_exact = true;
    for (int n = 2; n <= 3; ++n)
        for (int m = 0; m <= 10; ++m)
            odd_exact = odd_exact && gegenbauer_sphere_integral(n, 2 * m + 1) == 0.0;
    double worst = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 3; ++n)
        worst = std::min(worst, checks::gegenbauer_sphere_integrals(n, 10).worst_margin);
    for (int n = 2; n <= 4; ++n)
        worst = std::min(worst, checks::gegenbauer_moments(n, 10).worst_margin);
    report(8, "gegenbauer coefficients: odd zero, closed forms vs quadrature",
           odd_exact && worst >= 0.0,
           std::string(odd_exact ? "odd exact" : "odd nonzero") + ", worst slack " + fmt(worst));
}

void criterion_9_annulus() {
    bool pass = true;
    std::string detail;
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1.0, 2.0}, {0.5, 3.0}}) {
        for (const int n : {2, 3}) {
            const checks::CheckResult convex =
                checks::annulus_second_derivative_positive(n, a, b, 100);
            const checks::CheckResult match =
                checks::annulus_series_vs_quadrature(n, a, b, 20, 313);
            const checks::CheckResult root = checks::annulus_single_root(n, a, b, 1000);
            pass = pass && convex.pass && match.pass && root.pass;
            detail += "n=" + std::to_string(n) + " (" + fmt(a) + "," + fmt(b) + ") rel slack " +
                      fmt(match.worst_margin) + "; ";
        }
    }
    report(9, "annulus series: convex profile, quadrature match, single root", pass, detail);
}

void criterion_10_multi_annulus() {
    SeriesParams params{2, {{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}}, 10'000'000, 1e-12};
    const std::vector<double> roots = critical_radii(params);
    bool pass = roots.size() == 3;
    for (std::size_t i = 0; i < roots.size() && pass; ++i) {
        pass = params.rings[i].inner < roots[i] && roots[i] < params.rings[i].outer;
    }
    // psi' sign pattern across a 3000-point composite grid: one change per
    // ring segment (the derivative diverges at ring edges, so the count
    // restarts at each component of the domain)
    int sign_changes = 0;
    for (const Ring& ring : params.rings) {
        double prev = 0.0;
        bool have_prev = false;
        for (int i = 1; i <= 1000; ++i) {
            const double r = ring.inner + (ring.outer - ring.inner) * i / 1001.0;
            const double d = psi_series(params, r).dpsi;
            if (have_prev && std::signbit(prev) != std::signbit(d)) ++sign_changes;
            prev = d;
            have_prev = true;
        }
    }
    pass = pass && sign_changes == 3;
    std::string rs;
    for (const double r : roots) rs += fmt(r) + " ";
    report(10, "three rings give exactly three critical spheres", pass,
           "radii " + rs + ", sign changes " + std::to_string(sign_changes));
}

void criterion_11_oracle_agreement() {
    const double t0 = now_seconds();
    bool pass = true;
    double worst = std::numeric_limits<double>::infinity();
    const std::uint64_t seed = 112;
    int family = 0;
    for (const auto& make : std::vector<std::function<Domain(std::uint64_t)>>{
             [&](std::uint64_t i) { return checks::random_ball(2 + i % 2, seed, i); },
             [&](std::uint64_t i) { return checks::random_ellipsoid(2 + i % 2, seed, i); },
             [&](std::uint64_t i) { return checks::random_polytope(2 + i % 2, seed, i); },
             [&](std::uint64_t i) { return checks::random_stadium(seed, i); },
             [&](std::uint64_t i) { return checks::random_annulus(2 + i % 2, seed, i); }}) {
        // ten configurations per family: two shape draws, five points each
        for (std::uint64_t inst = 1; inst <= 2; ++inst) {
            const Domain dom = make(10 * family + inst);
            const checks::CheckResult r =
                checks::oracle_route_agreement(dom, 400000, seed + inst, 5);
            pass = pass && r.pass;
            worst = std::min(worst, r.worst_margin);
        }
        ++family;
    }
    const double elapsed = now_seconds() - t0;
    pass = pass && elapsed < 60.0;
    report(11, "cartesian oracle agrees with the spherical reduction", pass,
           "worst slack " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

void criterion_12_rho_properties() {
    bool pass = true;
    double worst = std::numeric_limits<double>::infinity();
    const std::uint64_t seed = 121;
    for (const Domain& dom :
         {checks::random_ball(2, seed, 1), checks::random_ball(3, seed, 2),
          checks::random_ellipsoid(2, seed, 3), checks::random_ellipsoid(3, seed, 4),
          checks::random_polytope(2, seed, 5), checks::random_polytope(3, seed, 6),
          checks::random_stadium(seed, 7)}) {
        for (const checks::CheckResult& r :
             {checks::rho_concavity(dom, 1000, seed), checks::rho_translation(dom, 1000, seed),
              checks::rho_lipschitz(dom, 1000, seed),
              checks::rho_transversality(dom, 1000, seed)}) {
            pass = pass && r.pass;
            worst = std::min(worst, r.worst_margin);
        }
    }
    report(12, "exit-distance properties on 1000 samples per convex shape", pass,
           "worst slack " + fmt(worst));
}

}  // namespace

int main() {
    const double t0 = now_seconds();
    criterion_1_ball_uniqueness();
    criterion_2_ball_center_value();
    criterion_3_ball_monotonicity();
    criterion_4_ellipsoid_symmetry();
    criterion_5_strict_convexity();
    criterion_6_gradient_formula();
    criterion_7_hessian_psd();
    criterion_8_gegenbauer();
    criterion_9_annulus();
    criterion_10_multi_annulus();
    criterion_11_oracle_agreement();
    criterion_12_rho_properties();
    std::printf("%d of 12 criteria passed in %.1f s\n", 12 - g_failures,
                now_seconds() - t0);
    return g_failures == 0 ? 0 : 1;
}
