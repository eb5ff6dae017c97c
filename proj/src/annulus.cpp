// SPDX-License-Identifier: Apache-2.0

#include "psi/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "psi/errors.hpp"
#include "psi/special.hpp"

namespace psi {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double gegenbauer(int k, double lambda, double t) {
    if (k == 0) return 1.0;
    double c_prev = 1.0;
    double c = 2.0 * lambda * t;
    for (int j = 1; j < k; ++j) {
        const double c_next =
            (2.0 * (lambda + j) * t * c - (2.0 * lambda + j - 1.0) * c_prev) / (j + 1.0);
        c_prev = c;
        c = c_next;
    }
    return c;
}

double gegenbauer_sphere_integral(int n, int k) {
    if (k % 2 == 1) return 0.0;
    const int m = k / 2;
    return sphere_area(n) * pochhammer(n, m) / std::tgamma(m + 1.0) * (1.0 + 2.0 * m / n);
}

MomentPair gegenbauer_weighted_moments(int n, int m) {
    const double pref = kSqrtPi * gamma_half_integer(n - 1) / gamma_half_integer(n);
    const double common = pref * pochhammer(n, m) / std::tgamma(m + 1.0);
    return {common * (n + 2.0 * m) / n, common * 2.0 * (n + m) / n};
}

double gegenbauer_moment_recurrence(int n, int m) {
    // I_0 is the beta integral of the bare weight; each step combines the
    // three-term recurrence row with the odd-moment elimination
    // J_m = 2(m+n)/(2m+n) I_m.
    double im = kSqrtPi * gamma_half_integer(n - 1) / gamma_half_integer(n);
    for (int j = 0; j < m; ++j) {
        const double jm = 2.0 * (j + n) / (2.0 * j + n) * im;
        im = (2.0 * (n + 2.0 * j + 1.0) * jm - (2.0 * n + 2.0 * j) * im) / (2.0 * j + 2.0);
    }
    return im;
}

// ---------------------------------------------------------------------------
// Component series
// ---------------------------------------------------------------------------

namespace {

// Shared loop for one complement piece. Terms are generated for even degrees
// k = 2m; the coefficient A_{2m}/(n+2m) advances by the exact factor
// (n+m)/(m+1). `base_ratio` is the squared geometric ratio of the piece.
struct TermState {
    double coeff;       // A_{2m}/(n+2m)
    double base_ratio;  // q^2 < 1 once inside the convergence region
};

// Tail of a series whose term ratios decrease toward base_ratio; `ratio_now`
// must bound every subsequent ratio. Returns +inf when no bound holds yet.
double geometric_tail(double last_term, double ratio_now) {
    if (!(ratio_now < 1.0)) return kInf;
    return std::abs(last_term) * ratio_now / (1.0 - ratio_now);
}

}  // namespace

SeriesEval inner_component_series(int n, double c, double d, double r, double rel_tol,
                                  long long max_terms) {
    SeriesEval out;
    // u_x = x^{n+2m} / r^{2n+2m}
    const double qd = d / r, qc = c / r;
    double ud = std::pow(d, n) / std::pow(r, 2.0 * n);
    double uc = c > 0.0 ? std::pow(c, n) / std::pow(r, 2.0 * n) : 0.0;
    double coeff = sphere_area(n) / n;  // A_0/n
    double abs_psi = 0.0, abs_dpsi = 0.0, abs_d2 = 0.0;

    for (long long m = 0;; ++m) {
        const double k = 2.0 * m;
        const double diff = ud - uc;
        const double t_psi = coeff * diff;
        const double t_dpsi = -coeff * (2.0 * n + k) * diff / r;
        const double t_d2 = coeff * (2.0 * n + k) * (2.0 * n + k + 1.0) * diff / (r * r);
        out.psi += t_psi;
        out.dpsi += t_dpsi;
        out.d2psi += t_d2;
        abs_psi += std::abs(t_psi);
        abs_dpsi += std::abs(t_dpsi);
        abs_d2 += std::abs(t_d2);
        out.terms_used = m + 1;

        // ratio of successive terms (coefficient step times q^2), largest for
        // the second-derivative series
        const double cstep = (n + static_cast<double>(m)) / (m + 1.0);
        const double growth2 = (2.0 * n + k + 2.0) * (2.0 * n + k + 3.0) /
                               ((2.0 * n + k) * (2.0 * n + k + 1.0));
        const double r2 = cstep * qd * qd * growth2;
        if (m >= 3 && r2 < 1.0) {
            out.tail_psi = geometric_tail(t_psi, r2);
            const double td = geometric_tail(t_dpsi, r2);
            out.tail_dpsi_neg = td;  // every remaining term is negative
            out.tail_dpsi_pos = 0.0;
            out.tail_d2psi = geometric_tail(t_d2, r2);
            if (out.tail_psi <= rel_tol * (abs_psi + 1e-300) &&
                out.tail_dpsi_neg <= rel_tol * (abs_dpsi + 1e-300) &&
                out.tail_d2psi <= rel_tol * (abs_d2 + 1e-300))
                return out;
        }
        if (m + 1 >= max_terms) {
            out.converged = false;
            out.tail_psi = kInf;
            out.tail_dpsi_neg = kInf;  // sign of the missing mass is still known
            out.tail_dpsi_pos = 0.0;
            out.tail_d2psi = kInf;
            return out;
        }
        coeff *= cstep;
        ud *= qd * qd;
        uc *= qc * qc;
    }
}

SeriesEval outer_component_series(int n, double c, double d, double r, double rel_tol,
                                  long long max_terms) {
    SeriesEval out;
    // v_x = r^{2m} / x^{n+2m}
    const double qc = r / c;
    const double qd = d == kInf ? 0.0 : r / d;
    double vc = std::pow(c, -static_cast<double>(n));
    double vd = d == kInf ? 0.0 : std::pow(d, -static_cast<double>(n));
    double coeff = sphere_area(n) / n;
    double abs_psi = 0.0, abs_dpsi = 0.0, abs_d2 = 0.0;

    for (long long m = 0;; ++m) {
        const double k = 2.0 * m;
        const double diff = vc - vd;
        const double t_psi = coeff * diff;
        const double t_dpsi = coeff * k * diff / r;
        const double t_d2 = coeff * k * (k - 1.0) * diff / (r * r);
        out.psi += t_psi;
        out.dpsi += t_dpsi;
        out.d2psi += t_d2;
        abs_psi += std::abs(t_psi);
        abs_dpsi += std::abs(t_dpsi);
        abs_d2 += std::abs(t_d2);
        out.terms_used = m + 1;

        const double cstep = (n + static_cast<double>(m)) / (m + 1.0);
        const double growth2 = (k + 2.0) * (k + 1.0) / std::max(k * (k - 1.0), 1.0);
        const double r2 = cstep * qc * qc * growth2;
        if (m >= 3 && r2 < 1.0) {
            out.tail_psi = geometric_tail(t_psi, r2);
            out.tail_dpsi_pos = geometric_tail(t_dpsi, r2);  // remaining terms nonnegative
            out.tail_dpsi_neg = 0.0;
            out.tail_d2psi = geometric_tail(t_d2, r2);
            if (out.tail_psi <= rel_tol * (abs_psi + 1e-300) &&
                out.tail_dpsi_pos <= rel_tol * (abs_dpsi + 1e-300) &&
                out.tail_d2psi <= rel_tol * (abs_d2 + 1e-300))
                return out;
        }
        if (m + 1 >= max_terms) {
            out.converged = false;
            out.tail_psi = kInf;
            out.tail_dpsi_pos = kInf;
            out.tail_dpsi_neg = 0.0;
            out.tail_d2psi = kInf;
            return out;
        }
        coeff *= cstep;
        vc *= qc * qc;
        vd *= qd * qd;
    }
}

// ---------------------------------------------------------------------------
// Assembly over the ring structure
// ---------------------------------------------------------------------------

namespace {

struct Piece {
    double c, d;
    bool inner;  // below the evaluation radius
};

// Complement pieces of the shell union relative to the evaluation ring.
std::vector<Piece> complement_pieces(const SeriesParams& p, std::size_t ring_index) {
    std::vector<Piece> pieces;
    const auto& rings = p.rings;
    if (rings.front().inner > 0.0) pieces.push_back({0.0, rings.front().inner, true});
    for (std::size_t j = 0; j + 1 < rings.size(); ++j) {
        pieces.push_back({rings[j].outer, rings[j + 1].inner, j < ring_index});
    }
    pieces.push_back({rings.back().outer, kInf, false});
    return pieces;
}

std::size_t ring_of(const SeriesParams& p, double r) {
    for (std::size_t i = 0; i < p.rings.size(); ++i)
        if (p.rings[i].inner < r && r < p.rings[i].outer) return i;
    throw RadiusOutsideRings("psi_series: radius lies in no ring");
}

void validate(const SeriesParams& p) {
    if (p.n < 2) throw ConfigError("series: n must be >= 2");
    if (p.rings.empty()) throw ConfigError("series: no rings");
    double prev = 0.0;
    for (std::size_t i = 0; i < p.rings.size(); ++i) {
        const bool first = i == 0;
        // a degenerate leading ring with inner radius 0 (a solid ball) is
        // accepted by the series; the Domain type is stricter
        if (!((first ? p.rings[i].inner >= 0.0 : p.rings[i].inner > prev) &&
              p.rings[i].inner < p.rings[i].outer))
            throw ConfigError("series: radii must interleave");
        prev = p.rings[i].outer;
    }
}

}  // namespace

SeriesEval psi_series(const SeriesParams& params, double r) {
    validate(params);
    const std::size_t idx = ring_of(params, r);
    SeriesEval total;
    for (const Piece& piece : complement_pieces(params, idx)) {
        const SeriesEval e =
            piece.inner
                ? inner_component_series(params.n, piece.c, piece.d, r, params.tail_bound,
                                         params.max_terms)
                : outer_component_series(params.n, piece.c, piece.d, r, params.tail_bound,
                                         params.max_terms);
        total.psi += e.psi;
        total.dpsi += e.dpsi;
        total.d2psi += e.d2psi;
        total.tail_psi += e.tail_psi;
        total.tail_dpsi_neg += e.tail_dpsi_neg;
        total.tail_dpsi_pos += e.tail_dpsi_pos;
        total.tail_d2psi += e.tail_d2psi;
        total.terms_used = std::max(total.terms_used, e.terms_used);
        total.converged = total.converged && e.converged;
    }
    return total;
}

void psi_prime_interval(const SeriesParams& params, double r, double& lo, double& hi) {
    validate(params);
    const std::size_t idx = ring_of(params, r);
    lo = 0.0;
    hi = 0.0;
    for (const Piece& piece : complement_pieces(params, idx)) {
        const SeriesEval e =
            piece.inner
                ? inner_component_series(params.n, piece.c, piece.d, r, params.tail_bound,
                                         params.max_terms)
                : outer_component_series(params.n, piece.c, piece.d, r, params.tail_bound,
                                         params.max_terms);
        lo += e.dpsi - e.tail_dpsi_neg;
        hi += e.dpsi + e.tail_dpsi_pos;
    }
}

std::vector<double> critical_radii(const SeriesParams& params) {
    validate(params);
    std::vector<double> roots;
    for (const auto& ring : params.rings) {
        const double eps = 1e-9 * (ring.outer - ring.inner);
        double lo_r = ring.inner + eps;
        double hi_r = ring.outer - eps;

        auto sign_at = [&](double r) {
            double lo, hi;
            psi_prime_interval(params, r, lo, hi);
            if (hi < 0.0) return -1;
            if (lo > 0.0) return +1;
            return 0;
        };
        const int s_lo = sign_at(lo_r);
        const int s_hi = sign_at(hi_r);
        if (s_lo >= 0 || s_hi <= 0)
            throw BracketSignFailure(
                "critical_radii: derivative sign at a bracket endpoint could not be certified "
                "(truncation cap too small)");

        while (hi_r - lo_r > 1e-12) {
            const double mid = 0.5 * (lo_r + hi_r);
            const int s = sign_at(mid);
            if (s < 0)
                lo_r = mid;
            else if (s > 0)
                hi_r = mid;
            else {
                // Enclosure straddles zero: the midpoint is within rounding of
                // the root; tighten symmetrically using the enclosure center.
                double l, h;
                psi_prime_interval(params, mid, l, h);
                if (0.5 * (l + h) < 0.0)
                    lo_r = mid;
                else
                    hi_r = mid;
            }
        }
        roots.push_back(0.5 * (lo_r + hi_r));
    }
    return roots;
}

}  // namespace psi
