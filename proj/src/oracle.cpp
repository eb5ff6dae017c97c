// SPDX-License-Identifier: Apache-2.0

#include "psi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "psi/annulus.hpp"
#include "psi/errors.hpp"
#include "psi/kernels.hpp"
#include "psi/quadrature.hpp"
#include "psi/rng.hpp"
#include "psi/special.hpp"
#include "psi/threads.hpp"

namespace psi {

CartesianResult psi_cartesian(const Domain& dom, const Vec& xi, double cutoff_radius,
                              std::size_t samples, std::uint64_t seed) {
    const int n = dom.dim();
    if (!contains(dom, xi)) throw PointNotInterior("psi_cartesian: point not interior");
    if (dom.bounding_radius() > 0.5 * cutoff_radius)
        throw CutoffTooSmall("psi_cartesian: domain must fit inside half the cutoff radius");

    const Vec& ref = dom.reference_center();
    const DomainMetrics met(dom);
    const double r_min = met.boundary_distance(xi);  // integrand vanishes below
    const double r_max = distance(xi, ref) + cutoff_radius;
    const double vn = unit_ball_volume(n);

    // geometric shells centered at xi tame the r^{-2n} weight
    constexpr int kShells = 32;
    double edges[kShells + 1];
    const double ratio = std::pow(r_max / r_min, 1.0 / kShells);
    edges[0] = r_min;
    for (int j = 1; j <= kShells; ++j) edges[j] = edges[j - 1] * ratio;
    edges[kShells] = r_max;

    // allocate samples by predicted shell contribution ~ r^{-n} drop
    double wsum = 0.0;
    double wshell[kShells];
    for (int j = 0; j < kShells; ++j) {
        wshell[j] = std::pow(edges[j], -n) - std::pow(edges[j + 1], -n);
        wsum += wshell[j];
    }

    CartesianResult out;
    double var_total = 0.0;
    std::uint64_t counter_base = 0;

    std::vector<double> coords[kMaxDim];
    std::vector<const double*> ptrs(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> mask;

    for (int j = 0; j < kShells; ++j) {
        const std::size_t nj = std::max<std::size_t>(
            64, static_cast<std::size_t>(static_cast<double>(samples) * wshell[j] / wsum));
        const double lo_pow = std::pow(edges[j], n);
        const double hi_pow = std::pow(edges[j + 1], n);
        const double volume = vn * (hi_pow - lo_pow);

        for (int d = 0; d < n; ++d) coords[d].resize(nj);
        mask.resize(nj);

        threads::for_chunks(nj, 8192, [&](std::size_t, std::size_t begin, std::size_t end) {
            Vec g(n), x(n);
            for (std::size_t i = begin; i < end; ++i) {
                const std::uint64_t c = (counter_base + i) * (kMaxDim + 1);
                for (int d = 0; d < n; ++d) g[d] = counter_gaussian(seed, c + d);
                const double u = counter_uniform(seed, c + kMaxDim);
                const double r = std::pow(lo_pow + u * (hi_pow - lo_pow), 1.0 / n);
                const Vec dir = normalized(g);
                for (int d = 0; d < n; ++d) {
                    x[d] = xi[d] + r * dir[d];
                    coords[d][i] = x[d];
                }
                mask[i] = (!contains(dom, x) && distance(x, ref) <= cutoff_radius) ? 1 : 0;
            }
        });
        counter_base += nj;

        for (int d = 0; d < n; ++d) ptrs[static_cast<std::size_t>(d)] = coords[d].data();
        const auto& k = kernels::ops();
        const double s1 = k.masked_inv_pow_radius_sum(n, nj, ptrs.data(), xi.data(), n,
                                                      mask.data());
        const double s2 = k.masked_inv_pow_radius_sum(n, nj, ptrs.data(), xi.data(), 2 * n,
                                                      mask.data());
        const double mean = s1 / static_cast<double>(nj);
        const double mean_sq = s2 / static_cast<double>(nj);
        const double var = std::max(0.0, mean_sq - mean * mean) / std::max<double>(nj - 1, 1);
        out.value += volume * mean;
        var_total += volume * volume * var;
        out.samples += nj;
    }

    // exact contribution outside the cutoff ball
    const SeriesEval tail = outer_component_series(
        n, cutoff_radius, std::numeric_limits<double>::infinity(), distance(xi, ref), 1e-13,
        10'000'000);
    out.value += tail.psi;
    out.statistical_error = std::sqrt(var_total);
    return out;
}

double ball_radial_derivative(double ball_radius, double r, int n, int quadrature_points) {
    if (n != 2 && n != 3)
        throw UnsupportedDimension("ball_radial_derivative: n must be 2 or 3");
    if (!(r >= 0.0 && r < ball_radius))
        throw ConfigError("ball_radial_derivative: requires 0 <= r < R");
    const double R = ball_radius;

    // difference of the inverse powers at the near and far boundary sheets;
    // s is the transverse offset, a(s) the axial half-chord
    auto integrand = [&](double s) {
        const double a = std::sqrt(std::max(0.0, R * R - s * s));
        const double near2 = (a - r) * (a - r) + s * s;
        const double far2 = (a + r) * (a + r) + s * s;
        return std::pow(near2, -n) - std::pow(far2, -n);
    };

    std::vector<double> t, w;
    gauss_legendre(quadrature_points, t, w);

    // substitute s = R sin(u): the half-chord becomes R cos(u) and the
    // integrand is smooth in u up to the rim
    if (n == 2) {
        // u over [-pi/2, pi/2]
        double total = 0.0;
        const double half = 0.5 * std::numbers::pi;
        for (int i = 0; i < quadrature_points; ++i) {
            const double u = half * t[static_cast<std::size_t>(i)];
            const double s = R * std::sin(u);
            total += w[static_cast<std::size_t>(i)] * half * R * std::cos(u) * integrand(s);
        }
        return total;
    }
    // n == 3: polar reduction of the 2-D transverse integral, u over [0, pi/2]
    double total = 0.0;
    const double half = 0.25 * std::numbers::pi;
    for (int i = 0; i < quadrature_points; ++i) {
        const double u = half * (t[static_cast<std::size_t>(i)] + 1.0);
        const double s = R * std::sin(u);
        total += w[static_cast<std::size_t>(i)] * half * (2.0 * std::numbers::pi) * s * R *
                 std::cos(u) * integrand(s);
    }
    return total;
}

}  // namespace psi
