// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "psi/geometry.hpp"

namespace psi {

struct CartesianResult {
    double value = 0.0;
    double statistical_error = 0.0;  // one-sigma estimate of the MC part
    std::size_t samples = 0;
};

/// Complement potential by direct Cartesian integration: stratified Monte
/// Carlo over radial shells centered at the evaluation point inside the
/// cutoff ball, plus the exact series tail outside the cutoff. Requires the
/// domain to fit inside half the cutoff radius (CutoffTooSmall otherwise).
CartesianResult psi_cartesian(const Domain& dom, const Vec& xi, double cutoff_radius,
                              std::size_t samples, std::uint64_t seed);

/// Radial derivative of the ball potential by quadrature of the mirrored
/// boundary-difference integrand (n = 2 or 3); positive for 0 < r < R.
double ball_radial_derivative(double ball_radius, double r, int n, int quadrature_points);

}  // namespace psi
