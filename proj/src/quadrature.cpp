// SPDX-License-Identifier: Apache-2.0

#include "psi/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>

#include "psi/errors.hpp"
#include "psi/kernels.hpp"
#include "psi/rng.hpp"
#include "psi/special.hpp"
#include "psi/threads.hpp"

namespace psi {

namespace {
constexpr std::size_t kChunk = 4096;
}

void SphericalRule::push_node(const Vec& v, double w) {
    for (int d = 0; d < dim_; ++d) coords_[static_cast<std::size_t>(d)].push_back(v[d]);
    weights_.push_back(w);
}

void SphericalRule::finalize() {
    for (int d = 0; d < dim_; ++d) ptrs_[static_cast<std::size_t>(d)] = coords_[static_cast<std::size_t>(d)].data();
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(n - 1 - k)] = x;
        nodes[static_cast<std::size_t>(k)] = -x;
        weights[static_cast<std::size_t>(n - 1 - k)] = w;
        weights[static_cast<std::size_t>(k)] = w;
    }
    if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

SphericalRule build_rule(int n, int accuracy_degree) {
    if (n < 2) throw UnsupportedDimension("build_rule: n must be >= 2");
    if (accuracy_degree < 1) throw ConfigError("build_rule: accuracy_degree must be >= 1");
    if (n == 2) {
        SphericalRule r;
        r.dim_ = 2;
        r.kind_ = RuleKind::circle_uniform;
        r.degree_ = accuracy_degree;
        const int m = 2 * accuracy_degree;  // even, antipodally closed
        const double w = 2.0 * std::numbers::pi / m;
        for (int i = 0; i < m; ++i) {
            const double a = 2.0 * std::numbers::pi * i / m;
            r.push_node(Vec{std::cos(a), std::sin(a)}, w);
        }
        r.finalize();
        return r;
    }
    if (n == 3) {
        const int q = (accuracy_degree + 2) / 2;         // exact to degree 2q-1 >= degree
        int m = accuracy_degree + 1;
        if (m % 2 == 1) ++m;                             // antipodal closure
        SphericalRule r = build_product_rule(q, m);
        r.degree_ = accuracy_degree;
        return r;
    }
    throw UnsupportedDimension(
        "build_rule: deterministic rules exist for n = 2, 3 only; use build_monte_carlo_rule");
}

SphericalRule build_product_rule(int polar_points, int azimuth_points) {
    if (polar_points < 1 || azimuth_points < 1)
        throw ConfigError("build_product_rule: node counts must be positive");
    SphericalRule r;
    r.dim_ = 3;
    r.kind_ = RuleKind::sphere_product;
    r.polar_points_ = polar_points;
    r.azimuth_points_ = azimuth_points;
    std::vector<double> t, wt;
    gauss_legendre(polar_points, t, wt);
    const double wa = 2.0 * std::numbers::pi / azimuth_points;
    for (int i = 0; i < polar_points; ++i) {
        const double st = std::sqrt(std::max(0.0, 1.0 - t[static_cast<std::size_t>(i)] *
                                                          t[static_cast<std::size_t>(i)]));
        for (int j = 0; j < azimuth_points; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / azimuth_points;
            r.push_node(Vec{st * std::cos(phi), st * std::sin(phi), t[static_cast<std::size_t>(i)]},
                        wt[static_cast<std::size_t>(i)] * wa);
        }
    }
    r.finalize();
    return r;
}

SphericalRule build_monte_carlo_rule(int n, std::size_t samples, std::uint64_t seed) {
    if (n < 2 || n > kMaxDim) throw UnsupportedDimension("build_monte_carlo_rule: n in [2, 8]");
    if (samples == 0) throw ConfigError("build_monte_carlo_rule: samples must be positive");
    SphericalRule r;
    r.dim_ = n;
    r.kind_ = RuleKind::monte_carlo;
    r.samples_ = samples;
    r.seed_ = seed;
    const double w = sphere_area(n) / static_cast<double>(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        Vec g(n);
        for (int d = 0; d < n; ++d)
            g[d] = counter_gaussian(seed, i * static_cast<std::uint64_t>(kMaxDim) +
                                              static_cast<std::uint64_t>(d));
        r.push_node(normalized(g), w);
    }
    r.finalize();
    return r;
}

SphericalRule build_composite_circle_rule(const std::vector<double>& angle_breaks,
                                          int points_per_panel) {
    SphericalRule r;
    r.dim_ = 2;
    r.kind_ = RuleKind::circle_uniform;
    r.composite_ = true;
    r.breaks_ = angle_breaks;
    r.polar_points_ = points_per_panel;
    std::vector<double> breaks = angle_breaks;
    const double two_pi = 2.0 * std::numbers::pi;
    for (double& b : breaks) b = b - two_pi * std::floor(b / two_pi);
    std::sort(breaks.begin(), breaks.end());
    if (breaks.empty()) breaks.push_back(0.0);
    std::vector<double> t, wt;
    gauss_legendre(points_per_panel, t, wt);
    for (std::size_t k = 0; k < breaks.size(); ++k) {
        const double a = breaks[k];
        const double b = k + 1 < breaks.size() ? breaks[k + 1] : breaks[0] + two_pi;
        const double half = 0.5 * (b - a);
        if (half <= 0.0) continue;
        for (int i = 0; i < points_per_panel; ++i) {
            const double ang = a + half * (t[static_cast<std::size_t>(i)] + 1.0);
            r.push_node(Vec{std::cos(ang), std::sin(ang)},
                        wt[static_cast<std::size_t>(i)] * half);
        }
    }
    r.finalize();
    return r;
}

SphericalRule build_composite_polar_rule(const std::vector<double>& t_breaks,
                                         int points_per_panel, int azimuth_points) {
    SphericalRule r;
    r.dim_ = 3;
    r.kind_ = RuleKind::sphere_product;
    r.composite_ = true;
    r.breaks_ = t_breaks;
    r.polar_points_ = points_per_panel;
    r.azimuth_points_ = azimuth_points;
    std::vector<double> edges = {-1.0};
    for (double b : t_breaks)
        if (b > -1.0 && b < 1.0) edges.push_back(b);
    edges.push_back(1.0);
    std::sort(edges.begin(), edges.end());
    std::vector<double> t, wt;
    gauss_legendre(points_per_panel, t, wt);
    const double wa = 2.0 * std::numbers::pi / azimuth_points;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double half = 0.5 * (edges[k + 1] - edges[k]);
        const double mid = 0.5 * (edges[k + 1] + edges[k]);
        if (half <= 0.0) continue;
        for (int i = 0; i < points_per_panel; ++i) {
            const double tc = mid + half * t[static_cast<std::size_t>(i)];
            const double st = std::sqrt(std::max(0.0, 1.0 - tc * tc));
            for (int j = 0; j < azimuth_points; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / azimuth_points;
                r.push_node(Vec{st * std::cos(phi), st * std::sin(phi), tc},
                            wt[static_cast<std::size_t>(i)] * half * wa);
            }
        }
    }
    r.finalize();
    return r;
}

SphericalRule SphericalRule::refined() const {
    if (kind_ == RuleKind::monte_carlo) return build_monte_carlo_rule(dim_, samples_ * 2, seed_);
    if (composite_) {
        if (dim_ == 2) return build_composite_circle_rule(breaks_, polar_points_ * 2);
        return build_composite_polar_rule(breaks_, polar_points_ * 2, azimuth_points_);
    }
    if (degree_ > 0) return build_rule(dim_, degree_ * 2);
    return build_product_rule(polar_points_ * 2, azimuth_points_ * 2);
}

double weighted_total(const SphericalRule& rule, const double* values) {
    const std::size_t m = rule.size();
    const auto& k = kernels::ops();
    double total = 0.0;
    for (std::size_t begin = 0; begin < m; begin += kChunk) {
        const std::size_t len = std::min(kChunk, m - begin);
        total += k.weighted_sum(len, values + begin, rule.weights().data() + begin);
    }
    return total;
}

double integrate(const SphericalRule& rule,
                 const std::function<double(const UnitDirection&)>& g) {
    const std::size_t m = rule.size();
    std::vector<double> values(m);
    std::atomic<bool> bad{false};
    threads::for_chunks(m, kChunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double v = g(rule.node(i));
            if (!std::isfinite(v)) bad.store(true, std::memory_order_relaxed);
            values[i] = v;
        }
    });
    if (bad.load()) throw NonFiniteSample("integrate: non-finite integrand sample");
    return weighted_total(rule, values.data());
}

}  // namespace psi
