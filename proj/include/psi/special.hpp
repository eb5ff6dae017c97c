// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace psi {

inline constexpr double kSqrtPi = 1.7724538509055160273;

/// Gamma(twice_x / 2), built up from Gamma(1/2) = sqrt(pi) and Gamma(1) = 1
/// via Gamma(x+1) = x Gamma(x). Accurate to rounding for the small arguments
/// used here (twice_x >= 1).
inline double gamma_half_integer(int twice_x) {
    double g = (twice_x % 2 == 0) ? 1.0 : kSqrtPi;
    double x = (twice_x % 2 == 0) ? 1.0 : 0.5;
    while (2.0 * x + 0.5 < twice_x) {
        g *= x;
        x += 1.0;
    }
    return g;
}

/// Surface area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
inline double sphere_area(int n) {
    double pow_pi = 1.0;
    for (int i = 0; i < n / 2; ++i) pow_pi *= std::numbers::pi;
    if (n % 2 == 1) pow_pi *= kSqrtPi;
    return 2.0 * pow_pi / gamma_half_integer(n);
}

/// Volume of the unit ball in R^n: |S^{n-1}| / n.
inline double unit_ball_volume(int n) { return sphere_area(n) / n; }

/// Rising factorial (x)_m = x (x+1) ... (x+m-1); (x)_0 = 1.
inline double pochhammer(double x, int m) {
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= x + i;
    return p;
}

}  // namespace psi
