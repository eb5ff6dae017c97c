// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace psi {

// Counter-based generator: every draw is a pure function of (seed, counter),
// so streams are reproducible regardless of threading or evaluation order.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64(splitmix64(seed) ^ splitmix64(counter * 0xda942042e4dd58b5ULL + 1));
}

/// Uniform draw in (0,1); never returns exactly 0 or 1.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t bits = counter_bits(seed, counter);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal pair via Box-Muller on two counter draws. Uses derived
/// stream seeds so gaussian and uniform draws at related counters never
/// consume the same underlying bits.
inline void counter_gaussian_pair(std::uint64_t seed, std::uint64_t counter, double& g0,
                                  double& g1) {
    const double u1 = counter_uniform(seed ^ 0x517cc1b727220a95ULL, counter);
    const double u2 = counter_uniform(seed ^ 0x2545f4914f6cdd1dULL, counter);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    g0 = r * std::cos(a);
    g1 = r * std::sin(a);
}

inline double counter_gaussian(std::uint64_t seed, std::uint64_t counter) {
    double g0, g1;
    counter_gaussian_pair(seed, counter, g0, g1);
    return g0;
}

}  // namespace psi
