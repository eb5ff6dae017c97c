// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "psi/geometry.hpp"

namespace psi {

/// Gegenbauer polynomial C_k^{(lambda)}(t) by the forward three-term
/// recurrence from C_0 = 1, C_1 = 2 lambda t.
double gegenbauer(int k, double lambda, double t);

/// A_k: integral of C_k^{(n)}(cos theta) over S^{n-1}. Zero for odd k; for
/// k = 2m equals |S^{n-1}| (n)_m / m! (1 + 2m/n).
double gegenbauer_sphere_integral(int n, int k);

struct MomentPair {
    double i_m;  // weighted even moment of C_{2m}^{(n)}
    double j_m;  // weighted odd moment of t C_{2m+1}^{(n)}
};

/// Closed forms of the two weighted Gegenbauer moments behind A_k.
MomentPair gegenbauer_weighted_moments(int n, int m);

/// The same even moment built by the step recurrence from m = 0
/// (cross-validation path for the closed form).
double gegenbauer_moment_recurrence(int n, int m);

// ---------------------------------------------------------------------------
// Radial series for concentric-shell complements
// ---------------------------------------------------------------------------

struct SeriesParams {
    int n = 2;
    std::vector<Ring> rings;          // strictly interleaved radii
    long long max_terms = 10'000'000; // truncation cap per component
    double tail_bound = 1e-12;        // relative tail target
};

struct SeriesEval {
    double psi = 0.0;
    double dpsi = 0.0;
    double d2psi = 0.0;
    // Bounds on |truncated tail| per series; dpsi tails carry a sign split so
    // callers can build guaranteed enclosures of the derivative.
    double tail_psi = 0.0;
    double tail_dpsi_neg = 0.0;  // tail pushing dpsi down
    double tail_dpsi_pos = 0.0;  // tail pushing dpsi up
    double tail_d2psi = 0.0;
    long long terms_used = 0;
    bool converged = true;
};

/// Potential of a solid shell complement piece {c <= |x| <= d} below the
/// evaluation radius r (c = 0 gives a solid ball). All psi terms positive,
/// all dpsi terms negative, all d2psi terms positive.
SeriesEval inner_component_series(int n, double c, double d, double r, double rel_tol,
                                  long long max_terms);

/// Potential of a complement piece {c <= |x| <= d} above r (d = +inf gives
/// the exterior). All psi/dpsi/d2psi terms nonnegative.
SeriesEval outer_component_series(int n, double c, double d, double r, double rel_tol,
                                  long long max_terms);

/// Radial profile (psi, psi', psi'') of the shell-union domain at radius r,
/// assembled from the complement pieces on either side of r.
/// Throws RadiusOutsideRings when r lies in no ring.
SeriesEval psi_series(const SeriesParams& params, double r);

/// Guaranteed enclosure of psi'(r); tails are one-sided per component, so the
/// enclosure stays valid even when an edge-adjacent series is truncated.
void psi_prime_interval(const SeriesParams& params, double r, double& lo, double& hi);

/// One critical radius per ring via sign bisection of psi'; bracket endpoints
/// sit 1e-9 ring-widths inside the edges. Throws BracketSignFailure when a
/// bracket sign cannot be certified within the term budget.
std::vector<double> critical_radii(const SeriesParams& params);

}  // namespace psi
