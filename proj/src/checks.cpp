// SPDX-License-Identifier: Apache-2.0

#include "psi/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "psi/annulus.hpp"
#include "psi/oracle.hpp"
#include "psi/rng.hpp"
#include "psi/solver.hpp"
#include "psi/special.hpp"

namespace psi::checks {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double u01(std::uint64_t seed, std::uint64_t c) { return counter_uniform(seed, c); }

Vec gaussian_vec(int n, std::uint64_t seed, std::uint64_t c) {
    Vec g(n);
    for (int d = 0; d < n; ++d)
        g[d] = counter_gaussian(seed, c * (kMaxDim + 1) + static_cast<std::uint64_t>(d));
    return g;
}

UnitDirection random_dir(int n, std::uint64_t seed, std::uint64_t c) {
    return UnitDirection(gaussian_vec(n, seed, c));
}

// margin update: track the minimum slack across samples
void fold(CheckResult& r, double slack) { r.worst_margin = std::min(r.worst_margin, slack); }

}  // namespace

// ---------------------------------------------------------------------------
// Random shapes
// ---------------------------------------------------------------------------

Domain random_ball(int n, std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t base = index * 977;
    Vec c(n);
    for (int d = 0; d < n; ++d)
        c[d] = 2.0 * u01(seed, base + static_cast<std::uint64_t>(d)) - 1.0;
    const double r = 0.5 + 1.5 * u01(seed, base + 11);
    return Domain::ball(c, r);
}

Domain random_ellipsoid(int n, std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t base = index * 1409 + 31;
    Vec c(n), axes(n);
    for (int d = 0; d < n; ++d) {
        c[d] = 2.0 * u01(seed, base + static_cast<std::uint64_t>(d)) - 1.0;
        axes[d] = 0.6 + 1.9 * u01(seed, base + 8 + static_cast<std::uint64_t>(d));
    }
    return Domain::ellipsoid(c, axes);
}

Domain random_polytope(int n, std::uint64_t seed, std::uint64_t index) {
    // box faces keep the intersection bounded; random cuts leave the origin
    // interior with margin >= 0.35
    const std::uint64_t base = index * 2801 + 97;
    std::vector<Halfspace> faces;
    for (int d = 0; d < n; ++d) {
        const double b1 = 1.0 + 0.5 * u01(seed, base + static_cast<std::uint64_t>(2 * d));
        const double b2 = 1.0 + 0.5 * u01(seed, base + static_cast<std::uint64_t>(2 * d + 1));
        faces.push_back({Vec::unit(n, d), b1});
        faces.push_back({-1.0 * Vec::unit(n, d), b2});
    }
    const int extra = 10 - static_cast<int>(faces.size());
    for (int k = 0; k < extra; ++k) {
        const Vec a = normalized(gaussian_vec(n, seed, base + 100 + static_cast<std::uint64_t>(k)));
        const double off = 0.35 + 0.75 * u01(seed, base + 200 + static_cast<std::uint64_t>(k));
        faces.push_back({a, off});
    }
    return Domain::polytope(std::move(faces));
}

Domain random_stadium(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t base = index * 3571 + 7;
    Vec p{2.0 * u01(seed, base) - 1.0, 2.0 * u01(seed, base + 1) - 1.0};
    Vec q{2.0 * u01(seed, base + 2) - 1.0, 2.0 * u01(seed, base + 3) - 1.0};
    if (distance(p, q) < 0.3) q[0] += 0.5;
    const double r = 0.3 + 0.5 * u01(seed, base + 4);
    return Domain::stadium(p, q, r);
}

Domain random_annulus(int n, std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t base = index * 4931 + 13;
    const double a = 0.5 + 0.5 * u01(seed, base);
    const double b = a + 0.5 + 1.5 * u01(seed, base + 1);
    return Domain::multi_annulus(Vec(n), {{a, b}});
}

SphericalRule default_rule(const Domain& dom) {
    const bool smooth = dom.get_if<Ball>() != nullptr || dom.get_if<Ellipsoid>() != nullptr;
    if (dom.dim() == 2) return build_rule(2, smooth ? 64 : 2048);
    if (dom.dim() == 3) return build_rule(3, smooth ? 48 : 160);
    return build_monte_carlo_rule(dom.dim(), 200000, 1234);
}

SphericalRule annulus_axis_rule(const Domain& dom, double r, int points_per_panel) {
    const MultiAnnulus& m = *dom.get_if<MultiAnnulus>();
    const std::vector<double> thetas = sphere_tangency_polar_breakpoints(m, r);
    if (dom.dim() == 2) {
        // mirror the polar breakpoints into full-circle angles about +x
        std::vector<double> breaks{0.0, std::numbers::pi};
        for (double t : thetas) {
            breaks.push_back(t);
            breaks.push_back(2.0 * std::numbers::pi - t);
        }
        return build_composite_circle_rule(breaks, points_per_panel);
    }
    std::vector<double> tbreaks;
    for (double t : thetas) tbreaks.push_back(std::cos(t));
    return build_composite_polar_rule(tbreaks, points_per_panel, 2);
}

// ---------------------------------------------------------------------------
// Exit-distance invariants
// ---------------------------------------------------------------------------

CheckResult rho_concavity(const Domain& dom, int samples, std::uint64_t seed) {
    CheckResult r{std::string("rho_concavity[") + dom.shape_name() + "]", true, kInf, ""};
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t c = static_cast<std::uint64_t>(i) * 7 + 1;
        const Vec x1 = sample_interior(dom, 0.02, seed, c);
        const Vec x2 = sample_interior(dom, 0.02, seed, c + 1);
        const double lam = u01(seed, c * 13);
        const UnitDirection w = random_dir(dom.dim(), seed, c * 17);
        const double lhs = exit_distance(dom, lam * x1 + (1.0 - lam) * x2, w);
        const double rhs =
            lam * exit_distance(dom, x1, w) + (1.0 - lam) * exit_distance(dom, x2, w);
        fold(r, lhs - rhs + 1e-10);
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

CheckResult rho_translation(const Domain& dom, int samples, std::uint64_t seed) {
    CheckResult r{std::string("rho_translation[") + dom.shape_name() + "]", true, kInf, ""};
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t c = static_cast<std::uint64_t>(i) * 11 + 3;
        const Vec x1 = sample_interior(dom, 0.02, seed, c);
        const Vec x2 = sample_interior(dom, 0.02, seed, c + 1);
        const double sep = distance(x1, x2);
        if (sep < 1e-8) continue;
        const UnitDirection w(x2 - x1);
        const double lhs = exit_distance(dom, x2, w);
        const double rhs = exit_distance(dom, x1, w) - sep;
        fold(r, 1e-12 - std::abs(lhs - rhs));
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

CheckResult rho_lipschitz(const Domain& dom, int samples, std::uint64_t seed) {
    CheckResult r{std::string("rho_lipschitz[") + dom.shape_name() + "]", true, kInf, ""};
    const DomainMetrics met(dom);
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t c = static_cast<std::uint64_t>(i) * 19 + 5;
        const Vec x = sample_interior(dom, 0.05, seed, c);
        const Vec y = sample_interior(dom, 0.05, seed, c + 1);
        const UnitDirection w = random_dir(dom.dim(), seed, c * 23);
        const double delta = std::min(met.boundary_distance(x), met.boundary_distance(y));
        const double bound = met.lipschitz_bound(delta) * distance(x, y) + 1e-10;
        const double diff = std::abs(exit_distance(dom, x, w) - exit_distance(dom, y, w));
        fold(r, bound - diff);
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

CheckResult rho_transversality(const Domain& dom, int samples, std::uint64_t seed) {
    CheckResult r{std::string("rho_transversality[") + dom.shape_name() + "]", true, kInf, ""};
    const DomainMetrics met(dom);
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t c = static_cast<std::uint64_t>(i) * 29 + 9;
        const Vec x = sample_interior(dom, 0.05, seed, c);
        const UnitDirection w = random_dir(dom.dim(), seed, c * 31);
        const RayExit ex = ray_exit(dom, x, w);
        const double delta = met.boundary_distance(x);
        fold(r, dot(ex.normal, w.vec()) - (delta / met.diameter() - 1e-10));
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

CheckResult intervals_match_scan(const Domain& dom, int rays, std::uint64_t seed) {
    CheckResult r{std::string("intervals_vs_scan[") + dom.shape_name() + "]", true, kInf, ""};
    const DomainMetrics met(dom);
    const double step = 1e-4 * met.diameter();
    const double reach = distance(Vec(dom.dim()), dom.reference_center()) +
                         dom.bounding_radius() + met.diameter();
    int mismatches = 0;
    for (int i = 0; i < rays; ++i) {
        const std::uint64_t c = static_cast<std::uint64_t>(i) * 37 + 2;
        const Vec x = sample_interior(dom, 0.01, seed, c);
        const UnitDirection w = random_dir(dom.dim(), seed, c * 41);
        const ComplementIntervals ci = complement_intervals(dom, x, w);

        if (dom.convex()) {
            const double rho = exit_distance(dom, x, w);
            if (ci.intervals.size() != 1 || ci.intervals[0].begin != rho ||
                ci.intervals[0].end != kInf)
                ++mismatches;
        }
        for (double t = 0.5 * step; t < reach; t += step) {
            const bool in_complement = !contains(dom, x + t * w.vec());
            bool listed = false;
            double edge_dist = kInf;
            for (const Interval& iv : ci.intervals) {
                if (t >= iv.begin && t <= iv.end) listed = true;
                edge_dist = std::min(edge_dist, std::abs(t - iv.begin));
                if (std::isfinite(iv.end)) edge_dist = std::min(edge_dist, std::abs(t - iv.end));
            }
            if (listed != in_complement && edge_dist > step) ++mismatches;
        }
    }
    r.worst_margin = -static_cast<double>(mismatches);
    r.pass = mismatches == 0;
    r.detail = std::to_string(mismatches) + " mismatched scan points";
    return r;
}

// ---------------------------------------------------------------------------
// Functional invariants
// ---------------------------------------------------------------------------

CheckResult convexity_midpoint(const Domain& dom, const FunctionalSpec& spec,
                               const SphericalRule& rule, int pairs, std::uint64_t seed,
                               bool strict) {
    CheckResult r{std::string(strict ? "strict_convexity[" : "convexity[") + dom.shape_name() +
                      "]",
                  true, kInf, ""};
    const DomainMetrics met(dom);
    int found = 0;
    std::uint64_t c = 1;
    while (found < pairs) {
        c += 2;
        const Vec x1 = sample_interior(dom, 0.02, seed, c);
        const Vec x2 = sample_interior(dom, 0.02, seed, c + 1);
        if (strict && distance(x1, x2) < 0.1 * met.diameter()) continue;
        ++found;
        const double lam = strict ? 0.5 : u01(seed, c * 43);
        const double lhs = eval_phi(dom, lam * x1 + (1.0 - lam) * x2, spec, rule);
        const double f1 = eval_phi(dom, x1, spec, rule);
        const double f2 = eval_phi(dom, x2, spec, rule);
        const double rhs = lam * f1 + (1.0 - lam) * f2;
        if (strict) {
            // strict floating-point comparison, no tolerance
            if (!(lhs < rhs)) {
                r.pass = false;
                r.worst_margin = std::min(r.worst_margin, rhs - lhs);
            } else {
                fold(r, rhs - lhs);
            }
        } else {
            fold(r, rhs - lhs + 1e-9 * std::abs(rhs));
        }
    }
    if (r.worst_margin >= 0.0 && r.pass) r.pass = true;
    if (r.worst_margin < 0.0) r.pass = false;
    return r;
}

CheckResult gradient_agreement(const Domain& dom, const SphericalRule& rule, int points,
                               double rel_tol, std::uint64_t seed) {
    CheckResult r{std::string("gradient_vs_fd[") + dom.shape_name() + "]", true, kInf, ""};
    const FunctionalSpec spec = FunctionalSpec::psi_default(dom.dim());
    for (int i = 0; i < points; ++i) {
        const Vec x = sample_interior(dom, 0.05, seed, static_cast<std::uint64_t>(i) * 53 + 4);
        const Vec g = grad_phi(dom, x, spec, rule);
        const Vec gf = grad_fd(dom, x, spec, rule);
        const double rel = norm(g - gf) / std::max(norm(g), 1e-300);
        fold(r, rel_tol - rel);
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

CheckResult hessian_psd(const Domain& dom, const SphericalRule& rule, int points,
                        std::uint64_t seed) {
    CheckResult r{std::string("hessian_psd[") + dom.shape_name() + "]", true, kInf, ""};
    const FunctionalSpec spec = FunctionalSpec::psi_default(dom.dim());
    for (int i = 0; i < points; ++i) {
        const Vec x = sample_interior(dom, 0.03, seed, static_cast<std::uint64_t>(i) * 59 + 6);
        const Mat h = hessian_phi(dom, x, spec, rule);
        const Vec ev = symmetric_eigenvalues(h);
        fold(r, ev[0]);
        for (int a = 0; a < h.dim(); ++a)
            for (int b = 0; b < h.dim(); ++b)
                if (std::abs(h(a, b) - h(b, a)) > 1e-12) r.pass = false;
    }
    if (r.worst_margin <= 0.0) r.pass = false;
    return r;
}

CheckResult coercivity(const Domain& dom, const SphericalRule& rule) {
    CheckResult r{std::string("coercivity[") + dom.shape_name() + "]", true, kInf, ""};
    const FunctionalSpec spec = FunctionalSpec::psi_default(dom.dim());
    const DomainMetrics met(dom);
    const Vec deep = initial_point(dom);
    const UnitDirection w = UnitDirection(Vec::unit(dom.dim(), 0));
    // walk along the ray until the boundary distance drops to 1e-3 diam
    const double target = 1e-3 * met.diameter();
    double lo = 0.0, hi = exit_distance(dom, deep, w);
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (met.boundary_distance(deep + mid * w.vec()) > target)
            lo = mid;
        else
            hi = mid;
    }
    const Vec near_pt = deep + lo * w.vec();
    const double psi_deep = eval_phi(dom, deep, spec, rule);
    const double psi_near = eval_phi(dom, near_pt, spec, rule);
    r.worst_margin = psi_near / psi_deep - 10.0;
    r.pass = r.worst_margin >= 0.0;
    return r;
}

CheckResult translation_equivariance(const Domain& dom, const SphericalRule& rule,
                                     std::uint64_t seed) {
    CheckResult r{std::string("translation_equivariance[") + dom.shape_name() + "]", true, kInf,
                  ""};
    const int n = dom.dim();
    const FunctionalSpec spec = FunctionalSpec::psi_default(n);
    const Vec shift = gaussian_vec(n, seed, 71);
    Domain shifted = dom;
    if (const Ball* b = dom.get_if<Ball>())
        shifted = Domain::ball(b->center + shift, b->radius);
    else if (const Ellipsoid* e = dom.get_if<Ellipsoid>())
        shifted = Domain::ellipsoid(e->center + shift, e->semi_axes);
    else if (const Stadium* s = dom.get_if<Stadium>())
        shifted = Domain::stadium(s->p + shift, s->q + shift, s->radius);
    else if (const Polytope* p = dom.get_if<Polytope>()) {
        std::vector<Halfspace> faces = p->faces;
        for (auto& f : faces) f.offset += dot(f.normal, shift);
        shifted = Domain::polytope(std::move(faces));
    }
    for (int i = 0; i < 10; ++i) {
        const Vec x = sample_interior(dom, 0.05, seed, static_cast<std::uint64_t>(i) * 61 + 8);
        const double a = eval_phi(dom, x, spec, rule);
        const double b = eval_phi(shifted, x + shift, spec, rule);
        fold(r, 1e-12 * std::max(1.0, std::abs(a)) - std::abs(a - b));
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// Gegenbauer suite
// ---------------------------------------------------------------------------

CheckResult gegenbauer_sphere_integrals(int n, int max_m) {
    CheckResult r{"gegenbauer_sphere_integrals[n=" + std::to_string(n) + "]", true, kInf, ""};
    const SphericalRule rule = build_rule(n, 2 * max_m + 4);
    for (int k = 0; k <= 2 * max_m; ++k) {
        const double closed = gegenbauer_sphere_integral(n, k);
        const double quad = integrate(
            rule, [&](const UnitDirection& w) { return gegenbauer(k, n, w[0]); });
        if (k % 2 == 1) {
            // odd integrals vanish identically
            fold(r, 1e-10 - std::abs(quad));
            if (closed != 0.0) r.pass = false;
        } else {
            fold(r, 1e-8 - std::abs(closed - quad) / std::abs(closed));
        }
    }
    if (r.worst_margin < 0.0) r.pass = false;
    return r;
}

CheckResult gegenbauer_moments(int n, int max_m) {
    CheckResult r{"gegenbauer_moments[n=" + std::to_string(n) + "]", true, kInf, ""};
    // Quadrature oracle after t = cos(u): the weight becomes sin^{n-2}(u),
    // a trigonometric polynomial, so Gauss-Legendre in u converges fast.
    std::vector<double> un, uw;
    gauss_legendre(400, un, uw);
    auto quad_moment = [&](int k, bool with_t) {
        double s = 0.0;
        const double half = 0.5 * std::numbers::pi;
        for (std::size_t i = 0; i < un.size(); ++i) {
            const double u = half * (un[i] + 1.0);
            const double t = std::cos(u);
            double f = gegenbauer(k, n, t) * std::pow(std::sin(u), n - 2);
            if (with_t) f *= t;
            s += uw[i] * half * f;
        }
        return s;
    };
    for (int m = 0; m <= max_m; ++m) {
        const MomentPair ij = gegenbauer_weighted_moments(n, m);
        const double iq = quad_moment(2 * m, false);
        const double jq = quad_moment(2 * m + 1, true);
        fold(r, 1e-8 - std::abs(ij.i_m - iq) / std::abs(ij.i_m));
        fold(r, 1e-8 - std::abs(ij.j_m - jq) / std::abs(ij.j_m));
        // the ratio identity and the recurrence path
        const double ratio = ij.j_m / ij.i_m - 2.0 * (m + n) / (2.0 * m + n);
        fold(r, 1e-12 - std::abs(ratio));
        const double irec = gegenbauer_moment_recurrence(n, m);
        fold(r, 1e-12 - std::abs(irec - ij.i_m) / std::abs(ij.i_m));
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// Annulus suite
// ---------------------------------------------------------------------------

CheckResult annulus_series_vs_quadrature(int n, double a, double b, int radii,
                                         std::uint64_t seed) {
    CheckResult r{"annulus_series_vs_quadrature[n=" + std::to_string(n) + "]", true, kInf, ""};
    const Domain dom = Domain::multi_annulus(Vec(n), {{a, b}});
    SeriesParams params{n, {{a, b}}, 10'000'000, 1e-12};
    for (int i = 0; i < radii; ++i) {
        const double rr = a + (b - a) * (0.05 + 0.9 * u01(seed, static_cast<std::uint64_t>(i)));
        Vec xi(n);
        // symmetry axis of the composite rule: +x for the circle, +z polar
        xi[n == 2 ? 0 : 2] = rr;
        const SphericalRule rule = annulus_axis_rule(dom, rr, 400);
        const double via_quad = eval_psi_general(dom, xi, rule);
        const double via_series = psi_series(params, rr).psi;
        fold(r, 1e-6 - std::abs(via_quad - via_series) / std::abs(via_series));
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

CheckResult annulus_second_derivative_positive(int n, double a, double b, int radii) {
    CheckResult r{"annulus_psi_convex[n=" + std::to_string(n) + "]", true, kInf, ""};
    SeriesParams params{n, {{a, b}}, 10'000'000, 1e-12};
    for (int i = 1; i <= radii; ++i) {
        const double rr = a + (b - a) * i / (radii + 1.0);
        fold(r, psi_series(params, rr).d2psi);
    }
    r.pass = r.worst_margin > 0.0;
    return r;
}

CheckResult annulus_single_root(int n, double a, double b, int sweep_points) {
    CheckResult r{"annulus_single_root[n=" + std::to_string(n) + "]", true, kInf, ""};
    SeriesParams params{n, {{a, b}}, 10'000'000, 1e-12};
    const std::vector<double> roots = critical_radii(params);
    if (roots.size() != 1 || !(a < roots[0] && roots[0] < b)) {
        r.pass = false;
        r.detail = "expected one interior root";
        return r;
    }
    // exactly one sign change of psi' across a fine grid
    int sign_changes = 0;
    double prev = psi_series(params, a + (b - a) / (sweep_points + 1.0)).dpsi;
    double best_r = a, best_v = kInf;
    for (int i = 1; i <= sweep_points; ++i) {
        const double rr = a + (b - a) * i / (sweep_points + 1.0);
        const SeriesEval e = psi_series(params, rr);
        if (e.psi < best_v) {
            best_v = e.psi;
            best_r = rr;
        }
        if (i > 1 && std::signbit(prev) != std::signbit(e.dpsi)) ++sign_changes;
        prev = e.dpsi;
    }
    if (sign_changes != 1) {
        r.pass = false;
        r.detail = "sign changes: " + std::to_string(sign_changes);
        return r;
    }
    fold(r, 1e-3 * (b - a) - std::abs(best_r - roots[0]));
    r.pass = r.worst_margin >= 0.0;
    r.detail = "root " + std::to_string(roots[0]);
    return r;
}

// ---------------------------------------------------------------------------
// Oracle route agreement
// ---------------------------------------------------------------------------

CheckResult oracle_route_agreement(const Domain& dom, std::size_t samples, std::uint64_t seed,
                                   int configs) {
    CheckResult r{std::string("oracle_route[") + dom.shape_name() + "]", true, kInf, ""};
    for (int i = 0; i < configs; ++i) {
        const Vec xi = sample_interior(dom, 0.05, seed, static_cast<std::uint64_t>(i) * 67 + 12);
        const double cutoff =
            2.5 * (dom.bounding_radius() + distance(xi, dom.reference_center())) + 1.0;
        const CartesianResult mc = psi_cartesian(dom, xi, cutoff, samples, seed + 77 * i);
        double reference;
        if (dom.convex()) {
            reference = eval_phi(dom, xi, FunctionalSpec::psi_default(dom.dim()),
                                 default_rule(dom));
        } else {
            reference = eval_psi_general(dom, xi, default_rule(dom));
        }
        const double tol = std::max(0.01 * std::abs(reference), 3.0 * mc.statistical_error);
        fold(r, tol - std::abs(mc.value - reference));
    }
    r.pass = r.worst_margin >= 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// Suite assembly
// ---------------------------------------------------------------------------

std::vector<std::string> available_suites() {
    return {"concavity",  "translation", "lipschitz", "transversality", "intervals",
            "convexity",  "gradient",    "hessian",   "functional",     "gegenbauer",
            "annulus",    "oracle",      "all"};
}

namespace {

std::vector<Domain> convex_shapes(std::uint64_t seed) {
    return {random_ball(2, seed, 1),     random_ball(3, seed, 2),
            random_ellipsoid(2, seed, 3), random_ellipsoid(3, seed, 4),
            random_polytope(2, seed, 5),  random_polytope(3, seed, 6),
            random_stadium(seed, 7)};
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
    std::vector<CheckResult> results;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };

    if (want("concavity"))
        for (const Domain& d : convex_shapes(seed)) results.push_back(rho_concavity(d, 200, seed));
    if (want("translation"))
        for (const Domain& d : convex_shapes(seed))
            results.push_back(rho_translation(d, 200, seed));
    if (want("lipschitz"))
        for (const Domain& d : convex_shapes(seed)) results.push_back(rho_lipschitz(d, 200, seed));
    if (want("transversality"))
        for (const Domain& d : convex_shapes(seed))
            results.push_back(rho_transversality(d, 200, seed));
    if (want("intervals")) {
        for (const Domain& d : convex_shapes(seed))
            results.push_back(intervals_match_scan(d, 10, seed));
        results.push_back(intervals_match_scan(random_annulus(2, seed, 8), 30, seed));
        results.push_back(intervals_match_scan(random_annulus(3, seed, 9), 30, seed));
    }
    if (want("convexity"))
        for (const Domain& d : convex_shapes(seed)) {
            const SphericalRule rule = default_rule(d);
            results.push_back(
                convexity_midpoint(d, FunctionalSpec::psi_default(d.dim()), rule, 50, seed, false));
            results.push_back(
                convexity_midpoint(d, FunctionalSpec::psi_default(d.dim()), rule, 50, seed, true));
        }
    if (want("gradient"))
        for (const Domain& d : convex_shapes(seed)) {
            const bool smooth = d.get_if<Ball>() != nullptr || d.get_if<Ellipsoid>() != nullptr;
            results.push_back(
                gradient_agreement(d, default_rule(d), 20, smooth ? 1e-5 : 1e-3, seed));
        }
    if (want("hessian"))
        for (const Domain& d : convex_shapes(seed)) {
            if (d.get_if<Stadium>() != nullptr) continue;
            results.push_back(hessian_psd(d, default_rule(d), 20, seed));
        }
    if (want("functional"))
        for (const Domain& d : convex_shapes(seed)) {
            results.push_back(coercivity(d, default_rule(d)));
            results.push_back(translation_equivariance(d, default_rule(d), seed));
        }
    if (want("gegenbauer")) {
        results.push_back(gegenbauer_sphere_integrals(2, 10));
        results.push_back(gegenbauer_sphere_integrals(3, 10));
        results.push_back(gegenbauer_moments(2, 10));
        results.push_back(gegenbauer_moments(3, 10));
        results.push_back(gegenbauer_moments(4, 10));
    }
    if (want("annulus")) {
        results.push_back(annulus_series_vs_quadrature(2, 1.0, 2.0, 8, seed));
        results.push_back(annulus_series_vs_quadrature(3, 0.5, 3.0, 8, seed));
        results.push_back(annulus_second_derivative_positive(2, 1.0, 2.0, 100));
        results.push_back(annulus_second_derivative_positive(3, 0.5, 3.0, 100));
        results.push_back(annulus_single_root(2, 1.0, 2.0, 1000));
        results.push_back(annulus_single_root(3, 1.0, 2.0, 1000));
    }
    if (want("oracle")) {
        results.push_back(oracle_route_agreement(random_ball(2, seed, 21), 200000, seed, 3));
        results.push_back(oracle_route_agreement(random_ellipsoid(3, seed, 22), 200000, seed, 3));
        results.push_back(oracle_route_agreement(random_polytope(2, seed, 23), 200000, seed, 3));
        results.push_back(oracle_route_agreement(random_stadium(seed, 24), 200000, seed, 3));
        results.push_back(oracle_route_agreement(random_annulus(2, seed, 25), 200000, seed, 3));
    }
    if (results.empty()) throw ConfigError("unknown check suite: " + suite);
    return results;
}

}  // namespace psi::checks
