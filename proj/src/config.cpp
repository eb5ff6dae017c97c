// SPDX-License-Identifier: Apache-2.0

#include "psi/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "psi/checks.hpp"

namespace psi {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw ConfigError("unknown field '" + it.key() + "' in " + where);
    }
}

Vec vec_field(const json& j, const char* key, int expect_dim) {
    if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
    const json& a = j.at(key);
    if (!a.is_array() || a.empty()) throw ConfigError(std::string(key) + " must be an array");
    if (expect_dim > 0 && static_cast<int>(a.size()) != expect_dim)
        throw ConfigError(std::string(key) + " has wrong dimension");
    Vec v(static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number()) throw ConfigError(std::string(key) + " must be numeric");
        v[static_cast<int>(i)] = a[i].get<double>();
    }
    return v;
}

double num_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError(std::string("missing numeric field '") + key + "'");
    return j.at(key).get<double>();
}

Domain domain_from_json(const json& j) {
    if (!j.contains("shape") || !j.at("shape").is_string())
        throw ConfigError("config needs a 'shape' string field");
    const std::string shape = j.at("shape").get<std::string>();
    int dim = 0;
    if (j.contains("dimension")) dim = j.at("dimension").get<int>();

    if (shape == "ball") {
        reject_unknown(j, {"shape", "dimension", "center", "radius", "quadrature", "solver"},
                       "ball config");
        const Vec c = vec_field(j, "center", dim);
        return Domain::ball(c, num_field(j, "radius"));
    }
    if (shape == "ellipsoid") {
        reject_unknown(j, {"shape", "dimension", "center", "semi_axes", "quadrature", "solver"},
                       "ellipsoid config");
        const Vec c = vec_field(j, "center", dim);
        return Domain::ellipsoid(c, vec_field(j, "semi_axes", c.dim()));
    }
    if (shape == "polytope") {
        reject_unknown(j, {"shape", "dimension", "halfspaces", "quadrature", "solver"},
                       "polytope config");
        if (!j.contains("halfspaces") || !j.at("halfspaces").is_array())
            throw ConfigError("polytope config needs a 'halfspaces' array");
        std::vector<Halfspace> faces;
        for (const json& f : j.at("halfspaces")) {
            reject_unknown(f, {"normal", "offset"}, "halfspace");
            faces.push_back({vec_field(f, "normal", dim), num_field(f, "offset")});
        }
        return Domain::polytope(std::move(faces));
    }
    if (shape == "stadium") {
        reject_unknown(j, {"shape", "dimension", "p", "q", "radius", "quadrature", "solver"},
                       "stadium config");
        return Domain::stadium(vec_field(j, "p", 2), vec_field(j, "q", 2),
                               num_field(j, "radius"));
    }
    if (shape == "multi_annulus") {
        reject_unknown(j, {"shape", "dimension", "center", "rings", "quadrature", "solver"},
                       "multi_annulus config");
        const Vec c = vec_field(j, "center", dim);
        if (!j.contains("rings") || !j.at("rings").is_array())
            throw ConfigError("multi_annulus config needs a 'rings' array");
        std::vector<Ring> rings;
        for (const json& r : j.at("rings")) {
            if (!r.is_array() || r.size() != 2)
                throw ConfigError("each ring must be a [inner, outer] pair");
            rings.push_back({r[0].get<double>(), r[1].get<double>()});
        }
        return Domain::multi_annulus(c, std::move(rings));
    }
    throw ConfigError("unknown shape '" + shape + "'");
}

SphericalRule rule_from_json(const json* q, const Domain& dom) {
    if (q == nullptr) return checks::default_rule(dom);
    reject_unknown(*q, {"kind", "degree", "samples", "seed"}, "quadrature config");
    const std::string kind = q->contains("kind") ? q->at("kind").get<std::string>() : "auto";
    if (kind == "monte_carlo") {
        const std::size_t samples =
            q->contains("samples") ? q->at("samples").get<std::size_t>() : 100000;
        const std::uint64_t seed = q->contains("seed") ? q->at("seed").get<std::uint64_t>() : 1;
        return build_monte_carlo_rule(dom.dim(), samples, seed);
    }
    if (kind == "auto" || kind == "circle_uniform" || kind == "sphere_product") {
        if (q->contains("degree")) return build_rule(dom.dim(), q->at("degree").get<int>());
        if (dom.dim() > 3)
            throw ConfigError("deterministic rules need n <= 3; use kind=monte_carlo");
        return checks::default_rule(dom);
    }
    throw ConfigError("unknown quadrature kind '" + kind + "'");
}

}  // namespace

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    Domain dom = domain_from_json(j);
    const json* q = j.contains("quadrature") ? &j.at("quadrature") : nullptr;
    SphericalRule rule = rule_from_json(q, dom);

    SolverConfig solver;
    int starts = 20;
    std::uint64_t seed = 1;
    if (j.contains("solver")) {
        const json& s = j.at("solver");
        reject_unknown(s,
                       {"gradient_tolerance", "max_iterations", "starts", "seed",
                        "audit_tolerance"},
                       "solver config");
        if (s.contains("gradient_tolerance"))
            solver.gradient_tolerance = s.at("gradient_tolerance").get<double>();
        if (s.contains("max_iterations"))
            solver.max_iterations = s.at("max_iterations").get<int>();
        if (s.contains("audit_tolerance"))
            solver.audit_tolerance_frac = s.at("audit_tolerance").get<double>();
        if (s.contains("starts")) starts = s.at("starts").get<int>();
        if (s.contains("seed")) seed = s.at("seed").get<std::uint64_t>();
    }
    return LoadedConfig{std::move(dom), std::move(rule), solver, starts, seed};
}

Vec parse_point(const std::string& text) {
    std::vector<double> xs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            xs.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("malformed point component: '" + tok + "'");
        }
    }
    if (xs.size() < 2 || xs.size() > kMaxDim)
        throw ConfigError("point must have 2..8 coordinates");
    return Vec::from(xs);
}

std::vector<Ring> parse_rings(const std::string& text) {
    std::vector<Ring> rings;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw ConfigError("ring must be 'inner,outer': '" + pair + "'");
        try {
            rings.push_back(
                {std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
        } catch (const std::exception&) {
            throw ConfigError("malformed ring: '" + pair + "'");
        }
    }
    if (rings.empty()) throw ConfigError("empty ring list");
    double prev = 0.0;
    for (const Ring& r : rings) {
        if (!(prev < r.inner && r.inner < r.outer))
            throw ConfigError("ring radii must interleave 0 < a1 < b1 < a2 < ...");
        prev = r.outer;
    }
    return rings;
}

}  // namespace psi
