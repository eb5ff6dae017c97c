// SPDX-License-Identifier: Apache-2.0

#include "psi/solver.hpp"

#include <algorithm>
#include <cmath>

namespace psi {

Vec initial_point(const Domain& dom) {
    if (const MultiAnnulus* m = dom.get_if<MultiAnnulus>()) {
        Vec x = m->center;
        x[0] += 0.5 * (m->rings.front().inner + m->rings.front().outer);
        return x;
    }
    if (const Polytope* p = dom.get_if<Polytope>()) {
        // average of the deepest grid points (boundary distance within 10% of
        // the grid maximum)
        const int n = dom.dim();
        const int g = n == 2 ? 33 : 21;
        Vec lo(n), hi(n);
        for (int d = 0; d < n; ++d) {
            lo[d] = p->vertices.front()[d];
            hi[d] = p->vertices.front()[d];
        }
        for (const Vec& v : p->vertices)
            for (int d = 0; d < n; ++d) {
                lo[d] = std::min(lo[d], v[d]);
                hi[d] = std::max(hi[d], v[d]);
            }
        const DomainMetrics met(dom);
        std::vector<Vec> pts;
        std::vector<double> depth;
        double best = 0.0;
        Vec x(n);
        const auto scan = [&](auto&& self, int d) -> void {
            if (d == n) {
                const double bd = met.boundary_distance(x);
                if (bd > 0.0) {
                    pts.push_back(x);
                    depth.push_back(bd);
                    best = std::max(best, bd);
                }
                return;
            }
            for (int i = 0; i < g; ++i) {
                x[d] = lo[d] + (hi[d] - lo[d]) * (i + 0.5) / g;
                self(self, d + 1);
            }
        };
        scan(scan, 0);
        if (pts.empty()) throw EmptyInterior("initial_point: no interior grid point");
        Vec avg(n);
        int count = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (depth[i] >= 0.9 * best) {
                avg += pts[i];
                ++count;
            }
        }
        avg *= 1.0 / count;
        return avg;
    }
    if (const ImplicitConvex* ic = dom.get_if<ImplicitConvex>()) return ic->interior_point;
    return dom.reference_center();
}

namespace {

struct Objective {
    const Domain& dom;
    const FunctionalSpec& spec;
    const SphericalRule* rule;
    bool have_hessian = true;

    double value(const Vec& x) const { return eval_phi(dom, x, spec, *rule); }
    Vec gradient(const Vec& x) const {
        try {
            return grad_phi(dom, x, spec, *rule);
        } catch (const NormalsUnavailable&) {
            return grad_fd(dom, x, spec, *rule);
        }
    }
};

}  // namespace

CriticalPointReport minimize_from(const Domain& dom, const FunctionalSpec& spec,
                                  const SphericalRule& rule, const SolverConfig& cfg,
                                  const Vec& start) {
    if (!dom.convex()) throw ConfigError("minimize: domain must be convex");
    const DomainMetrics met(dom);
    const double guard = cfg.boundary_guard_frac * met.diameter();

    SphericalRule current = rule;
    Objective obj{dom, spec, &current};

    Vec x = start;
    double val = obj.value(x);
    Vec g = obj.gradient(x);
    const double g0 = norm(g);
    // absolute floor keeps symmetric starts (discrete gradient already at
    // rounding level) from chasing an unreachable relative target
    const double tol = std::max(cfg.gradient_tolerance * g0,
                                1e-12 * (std::abs(val) + 1.0) / met.diameter());

    int refinements_left = cfg.refine_attempts;
    CriticalPointReport rep;
    bool at_resolution = false;
    int iter = 0;
    for (; iter < cfg.max_iterations; ++iter) {
        if (norm(g) <= tol) break;

        // Newton direction when usable, steepest descent as fallback
        std::vector<Vec> directions;
        if (obj.have_hessian) {
            try {
                const Mat h = hessian_phi(dom, x, spec, current);
                Vec s;
                if (solve_linear(h, -1.0 * g, s) && dot(s, g) < 0.0) directions.push_back(s);
            } catch (const HessianUnavailable&) {
                obj.have_hessian = false;
            }
        }
        directions.push_back((-met.diameter() / std::max(norm(g), 1e-300)) * g);

        bool accepted = false;
        double directional = 0.0;
        for (Vec step : directions) {
            // clip to 90% of the exit distance along the step
            const double slen = norm(step);
            const UnitDirection dir(step);
            const double exit = exit_distance(dom, x, dir);
            if (slen > 0.9 * exit) step *= 0.9 * exit / slen;

            directional = dot(g, step);
            double alpha = 1.0;
            while (alpha > 1e-14) {
                const Vec cand = x + alpha * step;
                if (contains(dom, cand) && met.boundary_distance(cand) >= guard) {
                    const double cand_val = obj.value(cand);
                    // strict decrease required: an equal value means the probe
                    // is below floating-point resolution, not progress
                    if (cand_val <= val + cfg.sufficient_decrease * alpha * directional &&
                        cand_val < val) {
                        x = cand;
                        val = cand_val;
                        g = obj.gradient(x);
                        accepted = true;
                        break;
                    }
                }
                alpha *= cfg.backtrack_factor;
            }
            if (accepted) break;
        }
        if (accepted) {
            if (cfg.observer) cfg.observer(iter + 1, x, val, norm(g));
            continue;
        }

        // stalled: the discretized functional may be too coarse; refine
        if (refinements_left > 0) {
            --refinements_left;
            current = current.refined();
            val = obj.value(x);
            g = obj.gradient(x);
            continue;
        }
        if (directional < 0.0) {
            // A valid descent direction admits no numerical decrease: the
            // iterate is the minimizer of the discretized functional at
            // floating-point resolution. Happens on polytopes, whose
            // discretized functional has gradient jumps; the reported
            // gradient norm stays honest.
            at_resolution = true;
            break;
        }
        throw LineSearchStall("minimize: line search stalled after rule refinement");
    }
    if (iter >= cfg.max_iterations && norm(g) > tol && !at_resolution)
        throw MaxIterations("minimize: iteration budget exhausted");

    rep.minimizer = x;
    rep.value = val;
    rep.gradient_norm = norm(g);
    rep.iterations = iter;
    return rep;
}

CriticalPointReport minimize(const Domain& dom, const FunctionalSpec& spec,
                             const SphericalRule& rule, const SolverConfig& cfg) {
    return minimize_from(dom, spec, rule, cfg, initial_point(dom));
}

CriticalPointReport uniqueness_audit(const Domain& dom, const FunctionalSpec& spec,
                                     const SphericalRule& rule, const SolverConfig& cfg,
                                     int starts, std::uint64_t seed) {
    if (starts < 1) throw ConfigError("uniqueness_audit: starts must be >= 1");

    // Individual runs may refine their rule after a stall and then minimize
    // slightly different discretizations; a polish pass on one common finest
    // rule removes that inter-level bias from the agreement measurement.
    SphericalRule fine = rule;
    for (int i = 0; i < cfg.refine_attempts; ++i) fine = fine.refined();
    SolverConfig polish_cfg = cfg;
    polish_cfg.refine_attempts = 0;

    std::vector<CriticalPointReport> runs;
    runs.reserve(static_cast<std::size_t>(starts));
    for (int s = 0; s < starts; ++s) {
        const Vec x0 = sample_interior(dom, 0.05, seed, static_cast<std::uint64_t>(s));
        const CriticalPointReport first = minimize_from(dom, spec, rule, cfg, x0);
        CriticalPointReport polished =
            minimize_from(dom, spec, fine, polish_cfg, first.minimizer);
        polished.iterations += first.iterations;
        runs.push_back(std::move(polished));
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < runs.size(); ++i)
        for (std::size_t j = i + 1; j < runs.size(); ++j)
            worst = std::max(worst, distance(runs[i].minimizer, runs[j].minimizer));

    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (runs[i].value < runs[best].value) best = i;

    CriticalPointReport rep = runs[best];
    rep.starts_used = starts;
    rep.max_pairwise_start_disagreement = worst;

    const DomainMetrics met(dom);
    if (worst > cfg.audit_tolerance_frac * met.diameter())
        throw DisagreementExceedsTolerance(
            "uniqueness_audit: multi-start minimizers disagree by " + std::to_string(worst) +
            " (tolerance " + std::to_string(cfg.audit_tolerance_frac * met.diameter()) + ")");
    return rep;
}

}  // namespace psi
