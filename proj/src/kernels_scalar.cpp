// SPDX-License-Identifier: Apache-2.0
//
// Scalar reference kernels. The AVX2 variants in kernels_avx2.cpp mirror the
// exact operation order used here; keep the two files in sync.

#include "psi/kernels.hpp"

#include <cmath>

namespace psi::kernels {

namespace {

inline double inv_pow(double x, int p) {
    // x^{-p} via binary powering of 1/x; one division, fixed multiply order.
    double base = 1.0 / x;
    double r = 1.0;
    unsigned e = static_cast<unsigned>(p);
    while (e != 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

void ball_exit_scalar(int dim, std::size_t m, const double* const* dirs, const double* rel,
                      double radius, double* out) {
    double rr = 0.0;
    for (int d = 0; d < dim; ++d) rr += rel[d] * rel[d];
    const double c = radius * radius - rr;
    for (std::size_t i = 0; i < m; ++i) {
        double b = 0.0;
        for (int d = 0; d < dim; ++d) b += rel[d] * dirs[d][i];
        out[i] = -b + std::sqrt(b * b + c);
    }
}

void ellipsoid_exit_scalar(int dim, std::size_t m, const double* const* dirs, const double* rel,
                           const double* inv_axes, double* out) {
    double c = -1.0;
    for (int d = 0; d < dim; ++d) {
        const double s = rel[d] * inv_axes[d];
        c += s * s;
    }
    for (std::size_t i = 0; i < m; ++i) {
        double a = 0.0;
        double b = 0.0;
        for (int d = 0; d < dim; ++d) {
            const double w = dirs[d][i] * inv_axes[d];
            const double s = rel[d] * inv_axes[d];
            a += w * w;
            b += s * w;
        }
        out[i] = (-b + std::sqrt(b * b - a * c)) / a;
    }
}

double weighted_sum_scalar(std::size_t m, const double* x, const double* w) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t m4 = m - m % 4;
    for (std::size_t i = 0; i < m4; i += 4) {
        a0 = a0 + w[i + 0] * x[i + 0];
        a1 = a1 + w[i + 1] * x[i + 1];
        a2 = a2 + w[i + 2] * x[i + 2];
        a3 = a3 + w[i + 3] * x[i + 3];
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t i = m4; i < m; ++i) s += w[i] * x[i];
    return s;
}

double weighted_inv_pow_sum_scalar(std::size_t m, const double* x, const double* w, int p) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t m4 = m - m % 4;
    for (std::size_t i = 0; i < m4; i += 4) {
        a0 = a0 + w[i + 0] * inv_pow(x[i + 0], p);
        a1 = a1 + w[i + 1] * inv_pow(x[i + 1], p);
        a2 = a2 + w[i + 2] * inv_pow(x[i + 2], p);
        a3 = a3 + w[i + 3] * inv_pow(x[i + 3], p);
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t i = m4; i < m; ++i) s += w[i] * inv_pow(x[i], p);
    return s;
}

double masked_inv_pow_radius_sum_scalar(int dim, std::size_t m, const double* const* coords,
                                        const double* at, int p, const std::uint8_t* mask) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t m4 = m - m % 4;
    auto term = [&](std::size_t i) {
        if (mask != nullptr && mask[i] == 0) return 0.0;
        double r2 = 0.0;
        for (int d = 0; d < dim; ++d) {
            const double t = coords[d][i] - at[d];
            r2 += t * t;
        }
        return inv_pow(r2, p);
    };
    for (std::size_t i = 0; i < m4; i += 4) {
        a0 = a0 + term(i + 0);
        a1 = a1 + term(i + 1);
        a2 = a2 + term(i + 2);
        a3 = a3 + term(i + 3);
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t i = m4; i < m; ++i) s += term(i);
    return s;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {ball_exit_scalar,   ellipsoid_exit_scalar,
                            weighted_sum_scalar, weighted_inv_pow_sum_scalar,
                            masked_inv_pow_radius_sum_scalar, "scalar"};
    return ops;
}

}  // namespace psi::kernels
