// SPDX-License-Identifier: Apache-2.0

#include "psi/functional.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <vector>

#include "psi/kernels.hpp"
#include "psi/threads.hpp"

namespace psi {

namespace {

constexpr std::size_t kChunk = 4096;
constexpr double kGuardFrac = 1e-9;  // refuse points closer to the boundary

double ipow_neg(double x, int p) {
    double base = 1.0 / x;
    double r = 1.0;
    unsigned e = static_cast<unsigned>(p);
    while (e != 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

void require_evaluable(const Domain& dom, const Vec& xi) {
    if (!contains(dom, xi)) throw PointNotInterior("evaluation point is not interior");
    const DomainMetrics met(dom);
    if (met.boundary_distance(xi) < kGuardFrac * met.diameter())
        throw NumericUnderflow("evaluation point is inside the boundary guard layer");
}

// Batched exit distances over the rule nodes (fixed chunks, thread-safe).
void fill_exit_distances(const Domain& dom, const Vec& xi, const SphericalRule& rule,
                         std::vector<double>& rho) {
    const std::size_t m = rule.size();
    rho.resize(m);
    const double* const* base = rule.coord_ptrs();
    const int n = dom.dim();
    threads::for_chunks(m, kChunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        const double* ptrs[kMaxDim];
        for (int d = 0; d < n; ++d) ptrs[d] = base[d] + begin;
        exit_distances(dom, xi, ptrs, end - begin, rho.data() + begin);
    });
}

}  // namespace

// ---------------------------------------------------------------------------
// FunctionalSpec
// ---------------------------------------------------------------------------

FunctionalSpec::FunctionalSpec(std::function<double(double)> f, std::function<double(double)> df,
                               std::function<double(double)> d2f, std::string label)
    : f_(std::move(f)), df_(std::move(df)), d2f_(std::move(d2f)), label_(std::move(label)) {
    // decreasing and convex, sampled on a log grid spanning [1e-6, 1e6]
    for (int i = 0; i < 25; ++i) {
        const double t = 1e-6 * std::pow(10.0, 12.0 * i / 24.0);
        const double ft = f_(t);
        const double dft = df_(t);
        if (!std::isfinite(ft) || !std::isfinite(dft))
            throw ConfigError("functional: non-finite sample at t = " + std::to_string(t));
        // a derivative that underflowed to zero together with the value is
        // accepted (exp(-t) at large t)
        if (!(dft < 0.0 || (dft == 0.0 && ft == 0.0)))
            throw ConfigError("functional: profile is not decreasing");
        double curv;
        if (d2f_) {
            curv = d2f_(t);
        } else {
            const double h = 1e-4 * t;
            curv = (df_(t + h) - df_(t - h)) / (2.0 * h);
        }
        if (!(curv >= -1e-8 * (std::abs(dft) / t + std::abs(ft) / (t * t))))
            throw ConfigError("functional: profile is not convex");
    }
}

FunctionalSpec FunctionalSpec::psi_default(int n) {
    if (n < 2) throw ConfigError("psi_default: n must be >= 2");
    FunctionalSpec spec(
        [n](double t) { return ipow_neg(t, n) / n; },
        [n](double t) { return -ipow_neg(t, n + 1); },
        [n](double t) { return (n + 1.0) * ipow_neg(t, n + 2); }, "psi");
    spec.psi_n_ = n;
    return spec;
}

FunctionalSpec FunctionalSpec::power_law(double p) {
    if (!(p > 0.0)) throw ConfigError("power_law: exponent must be positive");
    return FunctionalSpec([p](double t) { return std::pow(t, -p) / p; },
                          [p](double t) { return -std::pow(t, -p - 1.0); },
                          [p](double t) { return (p + 1.0) * std::pow(t, -p - 2.0); },
                          "power_law");
}

FunctionalSpec FunctionalSpec::exp_decay() {
    return FunctionalSpec([](double t) { return std::exp(-t); },
                          [](double t) { return -std::exp(-t); },
                          [](double t) { return std::exp(-t); }, "exp_decay");
}

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

double eval_phi(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
                const SphericalRule& rule) {
    require_evaluable(dom, xi);
    if (!dom.convex())
        throw ConfigError("eval_phi: domain is not convex; use eval_psi_general");

    std::vector<double> rho;
    fill_exit_distances(dom, xi, rule, rho);
    const std::size_t m = rule.size();
    const double* w = rule.weights().data();

    if (spec.is_psi_default()) {
        const int n = spec.psi_dimension();
        const auto& k = kernels::ops();
        double total = 0.0;
        for (std::size_t begin = 0; begin < m; begin += kChunk) {
            const std::size_t len = std::min(kChunk, m - begin);
            total += k.weighted_inv_pow_sum(len, rho.data() + begin, w + begin, n);
        }
        return total / n;
    }

    std::atomic<bool> bad{false};
    threads::for_chunks(m, kChunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double v = spec.f(rho[i]);
            if (!std::isfinite(v)) bad.store(true, std::memory_order_relaxed);
            rho[i] = v;
        }
    });
    if (bad.load()) throw NonFiniteSample("eval_phi: non-finite integrand sample");
    return weighted_total(rule, rho.data());
}

double eval_psi_general(const Domain& dom, const Vec& xi, const SphericalRule& rule) {
    require_evaluable(dom, xi);
    const int n = dom.dim();
    const std::size_t m = rule.size();
    std::vector<double> vals(m);
    std::atomic<bool> bad{false};
    threads::for_chunks(m, kChunk, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const ComplementIntervals ci = complement_intervals(dom, xi, rule.node(i));
            double s = 0.0;
            for (const Interval& iv : ci.intervals) {
                s += ipow_neg(iv.begin, n);
                if (std::isfinite(iv.end)) s -= ipow_neg(iv.end, n);
            }
            if (!std::isfinite(s)) bad.store(true, std::memory_order_relaxed);
            vals[i] = s;
        }
    });
    if (bad.load()) throw NonFiniteSample("eval_psi_general: non-finite sample");
    return weighted_total(rule, vals.data()) / n;
}

// ---------------------------------------------------------------------------
// Gradient
// ---------------------------------------------------------------------------

Vec grad_phi(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
             const SphericalRule& rule) {
    require_evaluable(dom, xi);
    if (!dom.convex()) throw ConfigError("grad_phi: domain is not convex");

    const int n = dom.dim();
    const std::size_t m = rule.size();
    const std::size_t n_chunks = (m + kChunk - 1) / kChunk;
    std::vector<Vec> partial(n_chunks, Vec(n));
    std::atomic<bool> bad{false};

    threads::for_chunks(m, kChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        Vec acc(n);
        for (std::size_t i = begin; i < end; ++i) {
            const UnitDirection w = rule.node(i);
            const RayExit ex = ray_exit(dom, xi, w);
            const double nw = dot(ex.normal, w.vec());
            const double coef = -rule.weight(i) * spec.df(ex.distance) / nw;
            if (!std::isfinite(coef)) bad.store(true, std::memory_order_relaxed);
            acc += coef * ex.normal;
        }
        partial[c] = acc;
    });
    if (bad.load()) throw NonFiniteSample("grad_phi: non-finite integrand sample");

    Vec g(n);
    for (const Vec& p : partial) g += p;
    return g;
}

Vec grad_fd(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
            const SphericalRule& rule, double step) {
    require_evaluable(dom, xi);
    const DomainMetrics met(dom);
    const double h = step > 0.0 ? step : 1e-6 * met.diameter();
    if (met.boundary_distance(xi) <= h + kGuardFrac * met.diameter())
        throw StepExitsDomain("grad_fd: step ball is not inside the domain");

    const bool general = !dom.convex();
    if (general && !spec.is_psi_default())
        throw ConfigError("grad_fd: non-convex domains support only the default profile");

    auto value = [&](const Vec& x) {
        return general ? eval_psi_general(dom, x, rule) : eval_phi(dom, x, spec, rule);
    };
    const int n = dom.dim();
    Vec g(n);
    for (int d = 0; d < n; ++d) {
        Vec hi = xi, lo = xi;
        hi[d] += h;
        lo[d] -= h;
        g[d] = (value(hi) - value(lo)) / (2.0 * h);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Hessian
// ---------------------------------------------------------------------------

namespace {

// d(normal)/dy for the level-set normal of the quadric boundary, evaluated at
// a boundary point: (I - nu nu^T) D / |D (y - center)| with D the quadric
// coefficient matrix (identity/R^2 for a ball).
Mat normal_derivative(const Domain& dom, const Vec& y, const Vec& nu) {
    const int n = dom.dim();
    if (const Ball* b = dom.get_if<Ball>()) {
        Mat m = Mat::identity(n) + (-1.0 * outer(nu, nu));
        m *= 1.0 / b->radius;
        return m;
    }
    const Ellipsoid& e = *dom.get_if<Ellipsoid>();
    Vec g(n);
    for (int i = 0; i < n; ++i)
        g[i] = (y[i] - e.center[i]) / (e.semi_axes[i] * e.semi_axes[i]);
    const double gn = norm(g);
    Mat proj = Mat::identity(n) + (-1.0 * outer(nu, nu));
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = proj(i, j) / (e.semi_axes[j] * e.semi_axes[j]) / gn;
    return m;
}

}  // namespace

Mat hessian_phi(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
                const SphericalRule& rule) {
    require_evaluable(dom, xi);
    const bool quadric = dom.get_if<Ball>() != nullptr || dom.get_if<Ellipsoid>() != nullptr;
    const bool polytope = dom.get_if<Polytope>() != nullptr;
    if (!quadric && !polytope)
        throw HessianUnavailable("hessian_phi: supported for ball, ellipsoid, polytope");
    if (!spec.has_d2f()) throw HessianUnavailable("hessian_phi: profile lacks f''");

    const int n = dom.dim();
    const std::size_t m = rule.size();
    const std::size_t n_chunks = (m + kChunk - 1) / kChunk;
    std::vector<Mat> partial(n_chunks, Mat(n));

    threads::for_chunks(m, kChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        Mat acc(n);
        for (std::size_t i = begin; i < end; ++i) {
            const UnitDirection w = rule.node(i);
            const RayExit ex = ray_exit(dom, xi, w);
            const double nw = dot(ex.normal, w.vec());
            const Vec grad_rho = (-1.0 / nw) * ex.normal;

            // rank-one curvature-of-profile part
            Mat term = spec.d2f(ex.distance) * outer(grad_rho, grad_rho);

            if (quadric) {
                // second derivative of the exit distance via the normal map
                const Vec y = xi + ex.distance * w.vec();
                const Mat dnu_dy = normal_derivative(dom, y, ex.normal);
                const Mat dy = Mat::identity(n) + outer(w.vec(), grad_rho);
                const Mat dnu = matmul(dnu_dy, dy);
                const Vec dnw = transpose(dnu) * w.vec();
                Mat hess_rho = (-1.0 / nw) * dnu + (1.0 / (nw * nw)) * outer(ex.normal, dnw);
                term += spec.df(ex.distance) * hess_rho;
            }
            // polytope: exit distance is affine per face, no curvature term

            acc += rule.weight(i) * term;
        }
        partial[c] = acc;
    });

    Mat h(n);
    for (const Mat& p : partial) h += p;
    // enforce exact symmetry against rounding drift
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double s = 0.5 * (h(i, j) + h(j, i));
            h(i, j) = s;
            h(j, i) = s;
        }
    return h;
}

EvalResult eval_full(const Domain& dom, const Vec& xi, const FunctionalSpec& spec,
                     const SphericalRule& rule, bool want_hessian) {
    const SphericalRule fine = rule.refined();
    EvalResult r;
    const double coarse = dom.convex() ? eval_phi(dom, xi, spec, rule)
                                       : eval_psi_general(dom, xi, rule);
    r.value = dom.convex() ? eval_phi(dom, xi, spec, fine) : eval_psi_general(dom, xi, fine);
    r.quadrature_error_estimate = std::abs(r.value - coarse);
    if (dom.convex()) {
        try {
            r.gradient = grad_phi(dom, xi, spec, fine);
        } catch (const NormalsUnavailable&) {
            r.gradient = grad_fd(dom, xi, spec, fine);
        }
    } else {
        r.gradient = grad_fd(dom, xi, spec, fine);
    }
    if (want_hessian) {
        try {
            r.hessian = hessian_phi(dom, xi, spec, fine);
        } catch (const HessianUnavailable&) {
            r.hessian.reset();
        }
    }
    return r;
}

}  // namespace psi
