// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "psi/geometry.hpp"
#include "psi/quadrature.hpp"
#include "psi/solver.hpp"

namespace psi {

/// Parsed domain configuration document: shape plus optional quadrature and
/// solver overrides. Unknown fields are rejected.
struct LoadedConfig {
    Domain domain;
    SphericalRule rule;
    SolverConfig solver;
    int starts = 20;
    std::uint64_t seed = 1;
};

/// Load and validate a JSON configuration file. Throws ConfigError with a
/// descriptive message on any malformed or unknown content.
LoadedConfig load_config(const std::string& path);

/// Parse a comma-separated coordinate list ("0.5,0.25").
Vec parse_point(const std::string& text);

/// Parse a ring list "a1,b1;a2,b2;...". Throws ConfigError when malformed or
/// not strictly interleaved.
std::vector<Ring> parse_rings(const std::string& text);

}  // namespace psi
