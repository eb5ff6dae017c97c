// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: eval | solve | annulus | sweep | oracle | check.
// Structured results go to standard output as JSON with 17-significant-digit
// numbers (round-trip exact); sweeps write CSV to --out. Exit codes:
//   0 ok, 1 check-suite failure, 2 bad config/usage, 3 point or segment not
//   interior, 4 numeric failure, 5 multi-start disagreement.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "psi/annulus.hpp"
#include "psi/checks.hpp"
#include "psi/config.hpp"
#include "psi/functional.hpp"
#include "psi/oracle.hpp"
#include "psi/solver.hpp"

namespace {

using namespace psi;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Minimal ordered JSON emitter; every number is printed with 17 significant
// digits so output documents are byte-stable and round-trip exactly.
class Doc {
  public:
    void field(const std::string& k, double v) { raw(k, fmt_double(v)); }
    void field(const std::string& k, int v) { raw(k, std::to_string(v)); }
    void field(const std::string& k, std::uint64_t v) { raw(k, std::to_string(v)); }
    void field(const std::string& k, bool v) { raw(k, v ? "true" : "false"); }
    void field(const std::string& k, const std::string& v) { raw(k, "\"" + v + "\""); }
    void field(const std::string& k, const Vec& v) {
        std::string s = "[";
        for (int i = 0; i < v.dim(); ++i) s += (i ? "," : "") + fmt_double(v[i]);
        raw(k, s + "]");
    }
    void field(const std::string& k, const std::vector<double>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt_double(v[i]);
        raw(k, s + "]");
    }
    void field(const std::string& k, const Mat& m) {
        std::string s = "[";
        for (int i = 0; i < m.dim(); ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < m.dim(); ++j) s += (j ? "," : "") + fmt_double(m(i, j));
            s += "]";
        }
        raw(k, s + "]");
    }
    void print() const { std::cout << "{\n" << body_ << "\n}\n"; }

  private:
    void raw(const std::string& k, const std::string& v) {
        if (!body_.empty()) body_ += ",\n";
        body_ += "  \"" + k + "\": " + v;
    }
    std::string body_;
};

int classify(const std::exception& e) {
    if (dynamic_cast<const DisagreementExceedsTolerance*>(&e)) return 5;
    if (dynamic_cast<const PointNotInterior*>(&e)) return 3;
    if (dynamic_cast<const StepExitsDomain*>(&e)) return 3;
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    if (dynamic_cast<const UnsupportedDimension*>(&e)) return 2;
    if (dynamic_cast<const EmptyInterior*>(&e)) return 2;
    if (dynamic_cast<const DegenerateDomain*>(&e)) return 2;
    if (dynamic_cast<const Error*>(&e)) return 4;
    return 4;
}

int cmd_eval(const std::string& config_path, const std::string& point) {
    const LoadedConfig cfg = load_config(config_path);
    const Vec xi = parse_point(point);
    Doc doc;
    if (cfg.domain.convex()) {
        const FunctionalSpec spec = FunctionalSpec::psi_default(cfg.domain.dim());
        const EvalResult r = eval_full(cfg.domain, xi, spec, cfg.rule, true);
        doc.field("psi", r.value);
        doc.field("gradient", r.gradient);
        doc.field("gradient_norm", norm(r.gradient));
        if (r.hessian) doc.field("hessian", *r.hessian);
        doc.field("quadrature_error", r.quadrature_error_estimate);
    } else {
        const double coarse = eval_psi_general(cfg.domain, xi, cfg.rule);
        const SphericalRule fine = cfg.rule.refined();
        const double value = eval_psi_general(cfg.domain, xi, fine);
        const FunctionalSpec spec = FunctionalSpec::psi_default(cfg.domain.dim());
        const Vec g = grad_fd(cfg.domain, xi, spec, fine);
        doc.field("psi", value);
        doc.field("gradient", g);
        doc.field("gradient_norm", norm(g));
        doc.field("quadrature_error", std::abs(value - coarse));
    }
    doc.print();
    return 0;
}

int cmd_solve(const std::string& config_path, int starts_flag, double tol_flag) {
    LoadedConfig cfg = load_config(config_path);
    if (starts_flag > 0) cfg.starts = starts_flag;
    if (tol_flag > 0.0) cfg.solver.gradient_tolerance = tol_flag;
    const FunctionalSpec spec = FunctionalSpec::psi_default(cfg.domain.dim());
    const CriticalPointReport rep =
        uniqueness_audit(cfg.domain, spec, cfg.rule, cfg.solver, cfg.starts, cfg.seed);
    const DomainMetrics met(cfg.domain);
    Doc doc;
    doc.field("minimizer", rep.minimizer);
    doc.field("psi", rep.value);
    doc.field("gradient_norm", rep.gradient_norm);
    doc.field("iterations", rep.iterations);
    doc.field("starts_used", rep.starts_used);
    doc.field("max_pairwise_start_disagreement", rep.max_pairwise_start_disagreement);
    doc.field("audit_tolerance", cfg.solver.audit_tolerance_frac * met.diameter());
    doc.field("agreement", true);
    doc.print();
    return 0;
}

int cmd_annulus(int n, const std::string& rings_text, long long terms) {
    const std::vector<Ring> rings = parse_rings(rings_text);
    SeriesParams params;
    params.n = n;
    params.rings = rings;
    if (terms > 0) params.max_terms = terms;
    const std::vector<double> roots = critical_radii(params);
    std::vector<double> psi_at;
    std::vector<double> terms_used;
    std::vector<double> rings_flat;
    for (const Ring& r : rings) {
        rings_flat.push_back(r.inner);
        rings_flat.push_back(r.outer);
    }
    for (const double r : roots) {
        const SeriesEval e = psi_series(params, r);
        psi_at.push_back(e.psi);
        terms_used.push_back(static_cast<double>(e.terms_used));
    }
    Doc doc;
    doc.field("dimension", n);
    doc.field("rings", rings_flat);
    doc.field("critical_radii", roots);
    doc.field("psi_at_radii", psi_at);
    doc.field("series_terms_used", terms_used);
    doc.print();
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& from_text,
              const std::string& to_text, int samples, const std::string& out_path) {
    const LoadedConfig cfg = load_config(config_path);
    const Vec from = parse_point(from_text);
    const Vec to = parse_point(to_text);
    if (samples < 1) throw ConfigError("sweep: --samples must be >= 1");

    std::ofstream out(out_path);
    if (!out) throw ConfigError("sweep: cannot open output file " + out_path);
    const int n = cfg.domain.dim();
    out << "t";
    for (int d = 0; d < n; ++d) out << ",x" << d;
    out << ",psi,grad_norm\n";

    const FunctionalSpec spec = FunctionalSpec::psi_default(n);
    for (int i = 0; i < samples; ++i) {
        const double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        const Vec x = from + t * (to - from);
        double value, gnorm;
        if (cfg.domain.convex()) {
            value = eval_phi(cfg.domain, x, spec, cfg.rule);
            gnorm = norm(grad_phi(cfg.domain, x, spec, cfg.rule));
        } else {
            value = eval_psi_general(cfg.domain, x, cfg.rule);
            gnorm = norm(grad_fd(cfg.domain, x, spec, cfg.rule));
        }
        out << fmt_double(t);
        for (int d = 0; d < n; ++d) out << ',' << fmt_double(x[d]);
        out << ',' << fmt_double(value) << ',' << fmt_double(gnorm) << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& config_path, const std::string& point, std::size_t samples,
               std::uint64_t seed, double cutoff) {
    const LoadedConfig cfg = load_config(config_path);
    const Vec xi = parse_point(point);
    if (cutoff <= 0.0)
        cutoff = 2.5 * (cfg.domain.bounding_radius() +
                        distance(xi, cfg.domain.reference_center())) +
                 1.0;
    const CartesianResult mc = psi_cartesian(cfg.domain, xi, cutoff, samples, seed);
    const double reference =
        cfg.domain.convex()
            ? eval_phi(cfg.domain, xi, FunctionalSpec::psi_default(cfg.domain.dim()), cfg.rule)
            : eval_psi_general(cfg.domain, xi, cfg.rule);
    const double diff = std::abs(mc.value - reference);
    const double tol = std::max(0.01 * std::abs(reference), 3.0 * mc.statistical_error);
    Doc doc;
    doc.field("psi_cartesian", mc.value);
    doc.field("statistical_error", mc.statistical_error);
    doc.field("psi_spherical", reference);
    doc.field("abs_diff", diff);
    doc.field("rel_diff", diff / std::abs(reference));
    doc.field("within_tolerance", diff <= tol);
    doc.field("samples", static_cast<std::uint64_t>(mc.samples));
    doc.field("seed", seed);
    doc.field("cutoff", cutoff);
    doc.print();
    return diff <= tol ? 0 : 4;
}

int cmd_check(const std::string& suite, std::uint64_t seed) {
    const std::vector<checks::CheckResult> results = checks::run_suite(suite, seed);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s %-40s margin=%.3e %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.worst_margin, r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s: %zu checks\n", all_pass ? "OK" : "FAILED", results.size());
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary-distance potential toolkit"};
    app.require_subcommand(1);

    std::string config_path, point, from_text, to_text, out_path, rings_text, suite = "all";
    int starts = 0, samples = 200, n_dim = 2;
    long long terms = 0;
    std::size_t mc_samples = 400000;
    std::uint64_t seed = 1;
    double tol = 0.0, cutoff = 0.0;

    CLI::App* eval = app.add_subcommand("eval", "evaluate psi, gradient, hessian at a point");
    eval->add_option("--config", config_path)->required();
    eval->add_option("--point", point)->required();

    CLI::App* solve = app.add_subcommand("solve", "locate the unique critical point");
    solve->add_option("--config", config_path)->required();
    solve->add_option("--starts", starts);
    solve->add_option("--tol", tol);

    CLI::App* annulus = app.add_subcommand("annulus", "critical spheres of a shell union");
    annulus->add_option("--n", n_dim);
    annulus->add_option("--rings", rings_text)->required();
    annulus->add_option("--terms", terms);

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate psi along a segment (CSV)");
    sweep->add_option("--config", config_path)->required();
    sweep->add_option("--from", from_text)->required();
    sweep->add_option("--to", to_text)->required();
    sweep->add_option("--samples", samples);
    sweep->add_option("--out", out_path)->required();

    CLI::App* oracle = app.add_subcommand("oracle", "cross-check against Cartesian integration");
    oracle->add_option("--config", config_path)->required();
    oracle->add_option("--point", point)->required();
    oracle->add_option("--samples", mc_samples);
    oracle->add_option("--seed", seed);
    oracle->add_option("--cutoff", cutoff);

    CLI::App* check = app.add_subcommand("check", "run invariant suites");
    check->add_option("--suite", suite);
    check->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(config_path, point);
        if (solve->parsed()) return cmd_solve(config_path, starts, tol);
        if (annulus->parsed()) return cmd_annulus(n_dim, rings_text, terms);
        if (sweep->parsed()) return cmd_sweep(config_path, from_text, to_text, samples, out_path);
        if (oracle->parsed()) return cmd_oracle(config_path, point, mc_samples, seed, cutoff);
        if (check->parsed()) return cmd_check(suite, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
    return 2;
}
