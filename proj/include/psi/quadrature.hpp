// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "psi/vec.hpp"

namespace psi {

enum class RuleKind { circle_uniform, sphere_product, monte_carlo };

/// Quadrature rule on S^{n-1}: unit-direction nodes and positive weights with
/// sum |S^{n-1}|. Nodes are stored column-wise for batched evaluation.
/// Immutable after construction.
class SphericalRule {
  public:
    int dim() const { return dim_; }
    RuleKind kind() const { return kind_; }
    std::size_t size() const { return weights_.size(); }

    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    UnitDirection node(std::size_t i) const {
        Vec v(dim_);
        for (int d = 0; d < dim_; ++d) v[d] = coords_[static_cast<std::size_t>(d)][i];
        return UnitDirection::assume_normalized(v);
    }
    /// dim() pointers, one per coordinate, each over size() doubles.
    const double* const* coord_ptrs() const { return ptrs_.data(); }

    /// Rule of the same kind with roughly doubled resolution (used for the
    /// reported quadrature error estimate).
    SphericalRule refined() const;

  private:
    friend SphericalRule build_rule(int, int);
    friend SphericalRule build_monte_carlo_rule(int, std::size_t, std::uint64_t);
    friend SphericalRule build_product_rule(int, int);
    friend SphericalRule build_composite_circle_rule(const std::vector<double>&, int);
    friend SphericalRule build_composite_polar_rule(const std::vector<double>&, int, int);

    SphericalRule() = default;
    void push_node(const Vec& v, double w);
    void finalize();

    int dim_ = 0;
    RuleKind kind_ = RuleKind::circle_uniform;
    std::array<std::vector<double>, kMaxDim> coords_;
    std::vector<double> weights_;
    std::array<const double*, kMaxDim> ptrs_{};

    // rebuild parameters for refined()
    int degree_ = 0;
    std::size_t samples_ = 0;
    std::uint64_t seed_ = 0;
    int polar_points_ = 0;
    int azimuth_points_ = 0;
    std::vector<double> breaks_;
    bool composite_ = false;
};

/// Deterministic rule exact (to rounding) for spherical polynomials of total
/// degree <= accuracy_degree. n = 2 or 3; throws UnsupportedDimension above.
SphericalRule build_rule(int n, int accuracy_degree);

/// Reproducible Monte Carlo rule for any dimension: directions are normalized
/// Gaussian vectors from the counter generator, equal weights |S^{n-1}|/N.
SphericalRule build_monte_carlo_rule(int n, std::size_t samples, std::uint64_t seed);

/// Explicit Gauss(cos theta) x uniform(azimuth) product rule on S^2.
SphericalRule build_product_rule(int polar_points, int azimuth_points);

/// Circle rule from Gauss-Legendre panels between the given angles
/// (radians, sorted into [0, 2pi); the last panel wraps around).
SphericalRule build_composite_circle_rule(const std::vector<double>& angle_breaks,
                                          int points_per_panel);

/// S^2 rule with Gauss-Legendre panels in t = cos(theta) split at the given
/// interior breakpoints, times a uniform azimuth grid.
SphericalRule build_composite_polar_rule(const std::vector<double>& t_breaks,
                                         int points_per_panel, int azimuth_points);

/// Sum of w_i g(node_i) in a fixed chunked lane order; bit-reproducible
/// across runs and thread counts. Throws NonFiniteSample.
double integrate(const SphericalRule& rule,
                 const std::function<double(const UnitDirection&)>& g);

/// Deterministic weighted total of precomputed node values.
double weighted_total(const SphericalRule& rule, const double* values);

/// Gauss-Legendre nodes/weights on [-1, 1] (ascending nodes, exact symmetry).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace psi
