// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "psi/functional.hpp"
#include "psi/geometry.hpp"
#include "psi/quadrature.hpp"

namespace psi {

struct SolverConfig {
    double gradient_tolerance = 1e-9;  // relative to |grad| at the start point
    int max_iterations = 200;
    double backtrack_factor = 0.5;
    double sufficient_decrease = 1e-4;
    double boundary_guard_frac = 1e-9;   // iterates keep this fraction of diam
    double audit_tolerance_frac = 1e-6;  // multi-start agreement, fraction of diam
    int refine_attempts = 3;             // rule doublings after a line-search stall
    // optional per-accepted-iterate hook (iteration, point, value, |grad|)
    std::function<void(int, const Vec&, double, double)> observer;
};

struct CriticalPointReport {
    Vec minimizer;
    double value = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    int starts_used = 1;
    double max_pairwise_start_disagreement = 0.0;
};

/// Deterministic interior starting point: centers for centrally symmetric
/// shapes, first-ring midpoint for shell unions, a deep grid average for
/// polytopes.
Vec initial_point(const Domain& dom);

/// Damped Newton descent (gradient fallback) with backtracking, step clipping
/// at 0.9x the exit distance, and a boundary guard. Terminates at the
/// gradient tolerance; doubles the rule degree on a stalled line search
/// before giving up. Throws MaxIterations or LineSearchStall.
CriticalPointReport minimize(const Domain& dom, const FunctionalSpec& spec,
                             const SphericalRule& rule, const SolverConfig& cfg);
CriticalPointReport minimize_from(const Domain& dom, const FunctionalSpec& spec,
                                  const SphericalRule& rule, const SolverConfig& cfg,
                                  const Vec& start);

/// Runs minimize from `starts` reproducible random interior points and
/// reports the best minimizer plus the maximum pairwise disagreement.
/// Throws DisagreementExceedsTolerance when the agreement bound fails.
CriticalPointReport uniqueness_audit(const Domain& dom, const FunctionalSpec& spec,
                                     const SphericalRule& rule, const SolverConfig& cfg,
                                     int starts, std::uint64_t seed);

}  // namespace psi
