// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "psi/kernels.hpp"
#include "psi/rng.hpp"

using namespace psi;

namespace {

struct Batch {
    std::vector<double> dir_x, dir_y, dir_z, weights;
    const double* dirs[3];
    explicit Batch(std::size_t m, std::uint64_t seed) {
        dir_x.resize(m);
        dir_y.resize(m);
        dir_z.resize(m);
        weights.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            double g0, g1, g2;
            counter_gaussian_pair(seed, 2 * i, g0, g1);
            g2 = counter_gaussian(seed, 7000000 + i);
            const double n = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
            dir_x[i] = g0 / n;
            dir_y[i] = g1 / n;
            dir_z[i] = g2 / n;
            weights[i] = 0.5 + counter_uniform(seed, 9000000 + i);
        }
        dirs[0] = dir_x.data();
        dirs[1] = dir_y.data();
        dirs[2] = dir_z.data();
    }
};

}  // namespace

TEST_CASE("scalar and avx2 kernels are bit-identical") {
    if (!kernels::avx2_available()) return;  // nothing to compare on this host
    const auto& s = kernels::scalar_ops();
    const auto& v = kernels::avx2_ops();

    for (const std::size_t m : {std::size_t{1}, std::size_t{7}, std::size_t{64},
                                std::size_t{1001}}) {
        Batch b(m, 42);
        const double rel[3] = {0.21, -0.13, 0.05};
        const double inv_axes[3] = {1.0 / 1.7, 1.0 / 0.9, 1.0 / 1.2};

        std::vector<double> out_s(m), out_v(m);
        for (const int dim : {2, 3}) {
            s.ball_exit(dim, m, b.dirs, rel, 1.5, out_s.data());
            v.ball_exit(dim, m, b.dirs, rel, 1.5, out_v.data());
            for (std::size_t i = 0; i < m; ++i) CHECK(out_s[i] == out_v[i]);

            s.ellipsoid_exit(dim, m, b.dirs, rel, inv_axes, out_s.data());
            v.ellipsoid_exit(dim, m, b.dirs, rel, inv_axes, out_v.data());
            for (std::size_t i = 0; i < m; ++i) CHECK(out_s[i] == out_v[i]);
        }

        s.ball_exit(3, m, b.dirs, rel, 1.5, out_s.data());
        CHECK(s.weighted_sum(m, out_s.data(), b.weights.data()) ==
              v.weighted_sum(m, out_s.data(), b.weights.data()));
        for (const int p : {2, 3, 5, 8}) {
            CHECK(s.weighted_inv_pow_sum(m, out_s.data(), b.weights.data(), p) ==
                  v.weighted_inv_pow_sum(m, out_s.data(), b.weights.data(), p));
        }

        std::vector<std::uint8_t> mask(m);
        for (std::size_t i = 0; i < m; ++i) mask[i] = (i % 3) != 0;
        const double at[3] = {0.4, 0.1, -0.2};
        CHECK(s.masked_inv_pow_radius_sum(3, m, b.dirs, at, 4, mask.data()) ==
              v.masked_inv_pow_radius_sum(3, m, b.dirs, at, 4, mask.data()));
        CHECK(s.masked_inv_pow_radius_sum(2, m, b.dirs, at, 6, nullptr) ==
              v.masked_inv_pow_radius_sum(2, m, b.dirs, at, 6, nullptr));
    }
}

TEST_CASE("masked lanes contribute zero even when the unmasked value overflows") {
    // sample exactly at the query point: r^2 = 0, 1/r^2 = inf, but masked out
    std::vector<double> xs = {0.4, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys = {0.1, 1.0, 2.0, 3.0, 4.0};
    const double* coords[2] = {xs.data(), ys.data()};
    const double at[2] = {0.4, 0.1};
    std::vector<std::uint8_t> mask = {0, 1, 1, 1, 1};
    const double got = kernels::ops().masked_inv_pow_radius_sum(2, xs.size(), coords, at, 2,
                                                                mask.data());
    CHECK(std::isfinite(got));
    double want = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double r2 = (xs[i] - at[0]) * (xs[i] - at[0]) + (ys[i] - at[1]) * (ys[i] - at[1]);
        want += 1.0 / (r2 * r2);
    }
    CHECK(got == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("kernel powers match library powers") {
    const auto& s = kernels::scalar_ops();
    std::vector<double> x = {0.3, 1.7, 2.2};
    std::vector<double> w = {1.0, 1.0, 1.0};
    for (const int p : {1, 2, 3, 7}) {
        double want = 0.0;
        for (const double xi : x) want += std::pow(xi, -p);
        CHECK(s.weighted_inv_pow_sum(x.size(), x.data(), w.data(), p) ==
              doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("ball exit kernel solves the boundary crossing") {
    Batch b(257, 9);
    const double rel[3] = {0.3, -0.2, 0.1};  // point minus center
    std::vector<double> rho(257);
    kernels::ops().ball_exit(3, rho.size(), b.dirs, rel, 2.0, rho.data());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        // |rel + rho w| should land on the sphere
        const double y0 = rel[0] + rho[i] * b.dirs[0][i];
        const double y1 = rel[1] + rho[i] * b.dirs[1][i];
        const double y2 = rel[2] + rho[i] * b.dirs[2][i];
        CHECK(std::sqrt(y0 * y0 + y1 * y1 + y2 * y2) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(rho[i] > 0.0);
    }
}
