// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "psi/geometry.hpp"
#include "psi/quadrature.hpp"

namespace psi {

/// Radial profile f plugged into the surface functional
/// Phi(xi) = integral of f(exit_distance(xi, w)) over unit directions w.
/// The profile must be decreasing and convex; construction verifies both on
/// a log-spaced grid and throws ConfigError otherwise.
class FunctionalSpec {
  public:
    FunctionalSpec(std::function<double(double)> f, std::function<double(double)> df,
                   std::function<double(double)> d2f,  // may be empty
                   std::string label);

    /// f(t) = t^{-n}/n: Phi equals the complement potential psi.
    static FunctionalSpec psi_default(int n);
    /// f(t) = t^{-p}/p for real p > 0.
    static FunctionalSpec power_law(double p);
    /// f(t) = exp(-t).
    static FunctionalSpec exp_decay();

    double f(double t) const { return f_(t); }
    double df(double t) const { return df_(t); }
    bool has_d2f() const { return static_cast<bool>(d2f_); }
    double d2f(double t) const { return d2f_(t); }
    const std::string& label() const { return label_; }

    bool is_psi_default() const { return psi_n_ > 0; }
    int psi_dimension() const { return psi_n_; }

  private:
    std::function<double(double)> f_, df_, d2f_;
    std::string label_;
    int psi_n_ = 0;
};

struct EvalResult {
    double value = 0.0;
    Vec gradient;
    std::optional<Mat> hessian;
    double quadrature_error_estimate = 0.0;
};

/// Phi(xi) by spherical quadrature of f(exit distance). Convex domains only.
double eval_phi(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
                const SphericalRule& rule);

/// The complement potential by the interval decomposition
///   (1/n) sum over complement intervals of (begin^{-n} - end^{-n})
/// per direction; valid for any supported domain including MultiAnnulus.
double eval_psi_general(const Domain& dom, const Vec& xi, const SphericalRule& rule);

/// Gradient via the boundary-normal formula: integrand f'(rho) (-nu / nu.w).
/// Throws NormalsUnavailable for predicate-only domains.
Vec grad_phi(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
             const SphericalRule& rule);

/// Central-difference gradient; step defaults to 1e-6 * diameter when <= 0.
Vec grad_fd(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
            const SphericalRule& rule, double step = 0.0);

/// Hessian for Ball/Ellipsoid (analytic normal derivative) and Polytope
/// (rank-one integrand; the exit distance is affine per face).
Mat hessian_phi(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
                const SphericalRule& rule);

/// Value + gradient (+ optional Hessian) at the refined rule, with the
/// coarse-vs-refined difference reported as the quadrature error estimate.
EvalResult eval_full(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
                     const SphericalRule& rule, bool want_hessian);

}  // namespace psi
