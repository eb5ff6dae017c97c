// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psi/functional.hpp"
#include "psi/geometry.hpp"
#include "psi/quadrature.hpp"

namespace psi::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst_margin = 0.0;  // slack left before the bound fails (>= 0 passes)
    std::string detail;
};

// Deterministic random shape generators shared by the invariant suites.
Domain random_ball(int n, std::uint64_t seed, std::uint64_t index);
Domain random_ellipsoid(int n, std::uint64_t seed, std::uint64_t index);
Domain random_polytope(int n, std::uint64_t seed, std::uint64_t index);
Domain random_stadium(std::uint64_t seed, std::uint64_t index);
Domain random_annulus(int n, std::uint64_t seed, std::uint64_t index);

/// Quadrature rule adequate for invariant checking on the given shape.
SphericalRule default_rule(const Domain& dom);

/// High-accuracy rule for shell unions evaluated on the polar axis at radius
/// r: Gauss panels split at the exact sphere-tangency angles.
SphericalRule annulus_axis_rule(const Domain& dom, double r, int points_per_panel);

// Exit-distance invariants (convex domains).
CheckResult rho_concavity(const Domain& dom, int samples, std::uint64_t seed);
CheckResult rho_translation(const Domain& dom, int samples, std::uint64_t seed);
CheckResult rho_lipschitz(const Domain& dom, int samples, std::uint64_t seed);
CheckResult rho_transversality(const Domain& dom, int samples, std::uint64_t seed);

/// complement_intervals versus a dense membership scan along random rays.
CheckResult intervals_match_scan(const Domain& dom, int rays, std::uint64_t seed);

// Functional invariants.
CheckResult convexity_midpoint(const Domain& dom, const FunctionalSpec& spec,
                               const SphericalRule& rule, int pairs, std::uint64_t seed,
                               bool strict);
CheckResult gradient_agreement(const Domain& dom, const SphericalRule& rule, int points,
                               double rel_tol, std::uint64_t seed);
CheckResult hessian_psd(const Domain& dom, const SphericalRule& rule, int points,
                        std::uint64_t seed);
CheckResult coercivity(const Domain& dom, const SphericalRule& rule);
CheckResult translation_equivariance(const Domain& dom, const SphericalRule& rule,
                                     std::uint64_t seed);

// Gegenbauer suite.
CheckResult gegenbauer_sphere_integrals(int n, int max_m);
CheckResult gegenbauer_moments(int n, int max_m);

// Annular series suite.
CheckResult annulus_series_vs_quadrature(int n, double a, double b, int radii,
                                         std::uint64_t seed);
CheckResult annulus_second_derivative_positive(int n, double a, double b, int radii);
CheckResult annulus_single_root(int n, double a, double b, int sweep_points);

// Route agreement: Cartesian oracle versus the spherical reduction.
CheckResult oracle_route_agreement(const Domain& dom, std::size_t samples, std::uint64_t seed,
                                   int configs);

std::vector<std::string> available_suites();
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace psi::checks
