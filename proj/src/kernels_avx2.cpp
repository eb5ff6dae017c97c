// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernel variants. Operation order mirrors kernels_scalar.cpp exactly:
// no FMA, division and sqrt are IEEE-rounded, reductions use the same
// (a0+a2)+(a1+a3) lane combine. Compiled only on x86-64; dispatch checks CPU
// support at runtime.

#include "psi/kernels.hpp"

#ifdef PSI_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

namespace psi::kernels {

namespace {

inline __m256d inv_pow_v(__m256d x, int p) {
    __m256d base = _mm256_div_pd(_mm256_set1_pd(1.0), x);
    __m256d r = _mm256_set1_pd(1.0);
    unsigned e = static_cast<unsigned>(p);
    while (e != 0) {
        if (e & 1u) r = _mm256_mul_pd(r, base);
        base = _mm256_mul_pd(base, base);
        e >>= 1;
    }
    return r;
}

inline double scalar_inv_pow(double x, int p) {
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

inline double lane_combine(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);   // [a0, a1]
    const __m128d hi = _mm256_extractf128_pd(acc, 1); // [a2, a3]
    const __m128d s = _mm_add_pd(lo, hi);             // [a0+a2, a1+a3]
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

void ball_exit_avx2(int dim, std::size_t m, const double* const* dirs, const double* rel,
                    double radius, double* out) {
    double rr = 0.0;
    for (int d = 0; d < dim; ++d) rr += rel[d] * rel[d];
    const double c = radius * radius - rr;
    const __m256d cv = _mm256_set1_pd(c);

    const std::size_t m4 = m - m % 4;
    for (std::size_t i = 0; i < m4; i += 4) {
        __m256d b = _mm256_setzero_pd();
        for (int d = 0; d < dim; ++d) {
            const __m256d dv = _mm256_loadu_pd(dirs[d] + i);
            b = _mm256_add_pd(b, _mm256_mul_pd(_mm256_set1_pd(rel[d]), dv));
        }
        const __m256d disc = _mm256_add_pd(_mm256_mul_pd(b, b), cv);
        const __m256d t = _mm256_sub_pd(_mm256_sqrt_pd(disc), b);
        _mm256_storeu_pd(out + i, t);
    }
    for (std::size_t i = m4; i < m; ++i) {
        double b = 0.0;
        for (int d = 0; d < dim; ++d) b += rel[d] * dirs[d][i];
        out[i] = -b + std::sqrt(b * b + c);
    }
}

void ellipsoid_exit_avx2(int dim, std::size_t m, const double* const* dirs, const double* rel,
                         const double* inv_axes, double* out) {
    double c = -1.0;
    double scaled_rel[8];
    for (int d = 0; d < dim; ++d) {
        scaled_rel[d] = rel[d] * inv_axes[d];
        c += scaled_rel[d] * scaled_rel[d];
    }
    const __m256d cv = _mm256_set1_pd(c);

    const std::size_t m4 = m - m % 4;
    for (std::size_t i = 0; i < m4; i += 4) {
        __m256d a = _mm256_setzero_pd();
        __m256d b = _mm256_setzero_pd();
        for (int d = 0; d < dim; ++d) {
            const __m256d w =
                _mm256_mul_pd(_mm256_loadu_pd(dirs[d] + i), _mm256_set1_pd(inv_axes[d]));
            a = _mm256_add_pd(a, _mm256_mul_pd(w, w));
            b = _mm256_add_pd(b, _mm256_mul_pd(_mm256_set1_pd(scaled_rel[d]), w));
        }
        const __m256d disc = _mm256_sub_pd(_mm256_mul_pd(b, b), _mm256_mul_pd(a, cv));
        const __m256d t = _mm256_div_pd(_mm256_sub_pd(_mm256_sqrt_pd(disc), b), a);
        _mm256_storeu_pd(out + i, t);
    }
    for (std::size_t i = m4; i < m; ++i) {
        double a = 0.0;
        double b = 0.0;
        for (int d = 0; d < dim; ++d) {
            const double w = dirs[d][i] * inv_axes[d];
            a += w * w;
            b += scaled_rel[d] * w;
        }
        out[i] = (-b + std::sqrt(b * b - a * c)) / a;
    }
}

double weighted_sum_avx2(std::size_t m, const double* x, const double* w) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t m4 = m - m % 4;
    for (std::size_t i = 0; i < m4; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i)));
    }
    double s = lane_combine(acc);
    for (std::size_t i = m4; i < m; ++i) s += w[i] * x[i];
    return s;
}

double weighted_inv_pow_sum_avx2(std::size_t m, const double* x, const double* w, int p) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t m4 = m - m % 4;
    for (std::size_t i = 0; i < m4; i += 4) {
        const __m256d v = inv_pow_v(_mm256_loadu_pd(x + i), p);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), v));
    }
    double s = lane_combine(acc);
    for (std::size_t i = m4; i < m; ++i) s += w[i] * scalar_inv_pow(x[i], p);
    return s;
}

double masked_inv_pow_radius_sum_avx2(int dim, std::size_t m, const double* const* coords,
                                      const double* at, int p, const std::uint8_t* mask) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t m4 = m - m % 4;
    for (std::size_t i = 0; i < m4; i += 4) {
        __m256d r2 = _mm256_setzero_pd();
        for (int d = 0; d < dim; ++d) {
            const __m256d t =
                _mm256_sub_pd(_mm256_loadu_pd(coords[d] + i), _mm256_set1_pd(at[d]));
            r2 = _mm256_add_pd(r2, _mm256_mul_pd(t, t));
        }
        __m256d v = inv_pow_v(r2, p);
        if (mask != nullptr) {
            // Bitwise AND (not multiply): a masked lane must contribute +0.0
            // even when v overflowed to inf, matching the scalar skip.
            const __m256d keep = _mm256_set_pd(mask[i + 3] ? 1.0 : 0.0, mask[i + 2] ? 1.0 : 0.0,
                                               mask[i + 1] ? 1.0 : 0.0, mask[i + 0] ? 1.0 : 0.0);
            const __m256d bits = _mm256_cmp_pd(keep, _mm256_setzero_pd(), _CMP_GT_OQ);
            v = _mm256_and_pd(v, bits);
        }
        acc = _mm256_add_pd(acc, v);
    }
    double s = lane_combine(acc);
    for (std::size_t i = m4; i < m; ++i) {
        if (mask != nullptr && mask[i] == 0) continue;
        double r2 = 0.0;
        for (int d = 0; d < dim; ++d) {
            const double t = coords[d][i] - at[d];
            r2 += t * t;
        }
        s += scalar_inv_pow(r2, p);
    }
    return s;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops = {ball_exit_avx2,   ellipsoid_exit_avx2,
                            weighted_sum_avx2, weighted_inv_pow_sum_avx2,
                            masked_inv_pow_radius_sum_avx2, "avx2"};
    return ops;
}

}  // namespace psi::kernels

#endif  // PSI_HAVE_AVX2
