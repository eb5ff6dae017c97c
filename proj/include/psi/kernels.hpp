// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace psi::kernels {

// Batched inner-loop kernels behind the quadrature and oracle hot paths.
// Every kernel exists as a scalar reference implementation and (on x86-64
// with AVX2) a vectorized variant selected at runtime. Both variants use the
// same floating-point operation order: four interleaved accumulators
// combined as (a0+a2)+(a1+a3) with the tail appended in index order, plain
// mul/add (no FMA contraction), and integer powers by repeated squaring.
// Results are therefore bit-identical across variants, runs, and thread
// counts.

struct Ops {
    // out[i] = exit distance along dirs[i] of the ray from a point at offset
    // `rel` from the ball center, ball radius `radius`:
    //   t = -(rel.w) + sqrt((rel.w)^2 - |rel|^2 + radius^2)
    void (*ball_exit)(int dim, std::size_t m, const double* const* dirs, const double* rel,
                      double radius, double* out);

    // Ellipsoid exit distance; inv_axes[d] = 1 / semi_axis_d, rel = point - center.
    void (*ellipsoid_exit)(int dim, std::size_t m, const double* const* dirs, const double* rel,
                           const double* inv_axes, double* out);

    // sum_i w[i] * x[i] in the fixed lane order.
    double (*weighted_sum)(std::size_t m, const double* x, const double* w);

    // sum_i w[i] * x[i]^{-p} for integer p >= 1 in the fixed lane order.
    double (*weighted_inv_pow_sum)(std::size_t m, const double* x, const double* w, int p);

    // sum over samples of mask[i] * (sum_d (coords[d][i] - at[d])^2)^{-p}.
    // mask may be null (all samples included).
    double (*masked_inv_pow_radius_sum)(int dim, std::size_t m, const double* const* coords,
                                        const double* at, int p, const std::uint8_t* mask);

    const char* name;
};

/// Scalar reference kernels (always available).
const Ops& scalar_ops();

/// Best kernels for this machine; honours PSI_KERNELS=scalar|avx2 when set.
const Ops& ops();

/// True when the AVX2 variant is compiled in and the CPU supports it.
bool avx2_available();

/// AVX2 kernels; only valid when avx2_available().
const Ops& avx2_ops();

}  // namespace psi::kernels
