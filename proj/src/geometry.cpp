// SPDX-License-Identifier: Apache-2.0

#include "psi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "psi/kernels.hpp"
#include "psi/rng.hpp"

namespace psi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dim(const Domain& dom, const Vec& x) {
    if (x.dim() != dom.dim())
        throw ConfigError("point dimension does not match domain dimension");
}

double dist_to_segment(const Vec& x, const Vec& p, const Vec& q) {
    const Vec pq = q - p;
    const double len2 = norm2(pq);
    double t = len2 > 0.0 ? dot(x - p, pq) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(x - (p + t * pq));
}

// Matrix rank over the face normals (tolerance-based, n <= 3).
int normal_rank(const std::vector<Halfspace>& faces, int n) {
    std::vector<Vec> basis;
    for (const auto& f : faces) {
        Vec v = f.normal;
        for (const auto& b : basis) v -= dot(v, b) * b;
        if (norm(v) > 1e-9 * norm(f.normal)) {
            basis.push_back(normalized(v));
            if (static_cast<int>(basis.size()) == n) break;
        }
    }
    return static_cast<int>(basis.size());
}

// Recession cone {v : a_i . v <= 0 for all i} reduced to {0}?
bool polytope_bounded(const std::vector<Halfspace>& faces, int n) {
    if (normal_rank(faces, n) < n) return false;
    auto admissible = [&](const Vec& v) {
        const double nv = norm(v);
        if (nv < 1e-14) return false;
        for (const auto& f : faces)
            if (dot(f.normal, v) > 1e-12 * norm(f.normal) * nv) return false;
        return true;
    };
    // Extreme rays of a pointed cone lie on n-1 active constraints.
    if (n == 2) {
        for (const auto& f : faces) {
            const Vec perp{-f.normal[1], f.normal[0]};
            if (admissible(perp) || admissible(-perp)) return false;
        }
    } else {
        for (std::size_t i = 0; i < faces.size(); ++i) {
            for (std::size_t j = i + 1; j < faces.size(); ++j) {
                const Vec &a = faces[i].normal, &b = faces[j].normal;
                const Vec c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]};
                if (admissible(c) || admissible(-c)) return false;
            }
        }
    }
    return true;
}

std::vector<Vec> enumerate_vertices(const std::vector<Halfspace>& faces, int n) {
    std::vector<Vec> verts;
    auto feasible = [&](const Vec& x) {
        for (const auto& f : faces) {
            const double scale = norm(f.normal) * (norm(x) + 1.0) + std::abs(f.offset);
            if (dot(f.normal, x) > f.offset + 1e-9 * scale) return false;
        }
        return true;
    };
    auto push_unique = [&](const Vec& x) {
        for (const auto& v : verts)
            if (distance(v, x) < 1e-8 * (1.0 + norm(x))) return;
        verts.push_back(x);
    };
    const std::size_t nf = faces.size();
    if (n == 2) {
        for (std::size_t i = 0; i < nf; ++i)
            for (std::size_t j = i + 1; j < nf; ++j) {
                Mat a(2);
                Vec b(2);
                for (int k = 0; k < 2; ++k) {
                    a(0, k) = faces[i].normal[k];
                    a(1, k) = faces[j].normal[k];
                }
                b[0] = faces[i].offset;
                b[1] = faces[j].offset;
                Vec x;
                if (solve_linear(a, b, x) && feasible(x)) push_unique(x);
            }
    } else {
        for (std::size_t i = 0; i < nf; ++i)
            for (std::size_t j = i + 1; j < nf; ++j)
                for (std::size_t k = j + 1; k < nf; ++k) {
                    Mat a(3);
                    Vec b(3);
                    for (int d = 0; d < 3; ++d) {
                        a(0, d) = faces[i].normal[d];
                        a(1, d) = faces[j].normal[d];
                        a(2, d) = faces[k].normal[d];
                    }
                    b[0] = faces[i].offset;
                    b[1] = faces[j].offset;
                    b[2] = faces[k].offset;
                    Vec x;
                    if (solve_linear(a, b, x) && feasible(x)) push_unique(x);
                }
    }
    return verts;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Domain Domain::ball(const Vec& center, double radius) {
    if (center.dim() < 2 || center.dim() > kMaxDim)
        throw UnsupportedDimension("ball: dimension must be in [2, 8]");
    if (!(radius > 0.0)) throw ConfigError("ball: radius must be positive");
    return Domain(Ball{center, radius}, center.dim(), true, center, radius);
}

Domain Domain::ellipsoid(const Vec& center, const Vec& semi_axes) {
    if (center.dim() < 2 || center.dim() > kMaxDim)
        throw UnsupportedDimension("ellipsoid: dimension must be in [2, 8]");
    if (semi_axes.dim() != center.dim())
        throw ConfigError("ellipsoid: semi_axes dimension mismatch");
    double amax = 0.0;
    for (int i = 0; i < semi_axes.dim(); ++i) {
        if (!(semi_axes[i] > 0.0)) throw ConfigError("ellipsoid: semi-axes must be positive");
        amax = std::max(amax, semi_axes[i]);
    }
    return Domain(Ellipsoid{center, semi_axes}, center.dim(), true, center, amax);
}

Domain Domain::polytope(std::vector<Halfspace> faces) {
    if (faces.empty()) throw ConfigError("polytope: no half-spaces");
    const int n = faces.front().normal.dim();
    if (n != 2 && n != 3)
        throw UnsupportedDimension("polytope: only dimensions 2 and 3 are supported");
    for (const auto& f : faces) {
        if (f.normal.dim() != n) throw ConfigError("polytope: mixed normal dimensions");
        if (norm(f.normal) == 0.0) throw ConfigError("polytope: zero normal");
    }
    if (!polytope_bounded(faces, n)) throw DegenerateDomain("polytope: unbounded intersection");

    Polytope p;
    p.faces = std::move(faces);
    for (const auto& f : p.faces) p.face_norms.push_back(norm(f.normal));
    p.vertices = enumerate_vertices(p.faces, n);
    if (p.vertices.size() < static_cast<std::size_t>(n) + 1)
        throw EmptyInterior("polytope: interior is empty");

    Vec centroid(n);
    for (const auto& v : p.vertices) centroid += v;
    centroid *= 1.0 / static_cast<double>(p.vertices.size());
    for (std::size_t i = 0; i < p.faces.size(); ++i) {
        const double margin = (p.faces[i].offset - dot(p.faces[i].normal, centroid)) /
                              p.face_norms[i];
        if (!(margin > 0.0)) throw EmptyInterior("polytope: interior is empty (flat)");
    }
    p.interior_point = centroid;
    p.bounding_center = centroid;
    for (const auto& v : p.vertices)
        p.bounding_radius = std::max(p.bounding_radius, distance(v, centroid));
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
            p.diameter = std::max(p.diameter, distance(p.vertices[i], p.vertices[j]));

    const Vec ref = p.bounding_center;
    const double brad = p.bounding_radius;
    return Domain(std::move(p), n, true, ref, brad);
}

Domain Domain::stadium(const Vec& p, const Vec& q, double radius) {
    if (p.dim() != 2 || q.dim() != 2)
        throw UnsupportedDimension("stadium: a 2-D shape");
    if (!(radius > 0.0)) throw ConfigError("stadium: radius must be positive");
    const Vec mid = 0.5 * (p + q);
    return Domain(Stadium{p, q, radius}, 2, true, mid, 0.5 * distance(p, q) + radius);
}

Domain Domain::multi_annulus(const Vec& center, std::vector<Ring> rings) {
    if (center.dim() < 2 || center.dim() > kMaxDim)
        throw UnsupportedDimension("multi_annulus: dimension must be in [2, 8]");
    if (rings.empty()) throw ConfigError("multi_annulus: no rings");
    double prev = 0.0;
    for (const auto& r : rings) {
        if (!(prev < r.inner && r.inner < r.outer))
            throw ConfigError("multi_annulus: radii must interleave 0 < a1 < b1 < a2 < ...");
        prev = r.outer;
    }
    const double brad = rings.back().outer;
    return Domain(MultiAnnulus{center, std::move(rings)}, center.dim(), false, center, brad);
}

Domain Domain::implicit_convex(std::function<bool(const Vec&)> inside, const Vec& interior_point,
                               double diameter) {
    if (!(diameter > 0.0)) throw ConfigError("implicit_convex: diameter must be positive");
    if (!inside(interior_point))
        throw EmptyInterior("implicit_convex: interior point not inside");
    const int n = interior_point.dim();
    ImplicitConvex s{std::move(inside), interior_point, diameter, interior_point, diameter};
    return Domain(std::move(s), n, true, interior_point, diameter);
}

const char* Domain::shape_name() const {
    struct Visitor {
        const char* operator()(const Ball&) const { return "ball"; }
        const char* operator()(const Ellipsoid&) const { return "ellipsoid"; }
        const char* operator()(const Polytope&) const { return "polytope"; }
        const char* operator()(const Stadium&) const { return "stadium"; }
        const char* operator()(const MultiAnnulus&) const { return "multi_annulus"; }
        const char* operator()(const ImplicitConvex&) const { return "implicit"; }
    };
    return std::visit(Visitor{}, shape_);
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

bool contains(const Domain& dom, const Vec& x) {
    require_dim(dom, x);
    struct Visitor {
        const Vec& x;
        bool operator()(const Ball& b) const { return distance(x, b.center) < b.radius; }
        bool operator()(const Ellipsoid& e) const {
            double s = 0.0;
            for (int i = 0; i < x.dim(); ++i) {
                const double t = (x[i] - e.center[i]) / e.semi_axes[i];
                s += t * t;
            }
            return s < 1.0;
        }
        bool operator()(const Polytope& p) const {
            for (const auto& f : p.faces)
                if (!(dot(f.normal, x) < f.offset)) return false;
            return true;
        }
        bool operator()(const Stadium& s) const {
            return dist_to_segment(x, s.p, s.q) < s.radius;
        }
        bool operator()(const MultiAnnulus& m) const {
            const double r = distance(x, m.center);
            for (const auto& ring : m.rings)
                if (ring.inner < r && r < ring.outer) return true;
            return false;
        }
        bool operator()(const ImplicitConvex& i) const { return i.inside(x); }
    };
    return std::visit(Visitor{x}, dom.shape());
}

// ---------------------------------------------------------------------------
// Ray exits
// ---------------------------------------------------------------------------

namespace {

double ball_exit(const Ball& b, const Vec& xi, const Vec& w) {
    const Vec d = xi - b.center;
    const double bw = dot(d, w);
    return -bw + std::sqrt(bw * bw - norm2(d) + b.radius * b.radius);
}

double ellipsoid_exit(const Ellipsoid& e, const Vec& xi, const Vec& w) {
    double a = 0.0, bq = 0.0, c = -1.0;
    for (int i = 0; i < xi.dim(); ++i) {
        const double wi = w[i] / e.semi_axes[i];
        const double di = (xi[i] - e.center[i]) / e.semi_axes[i];
        a += wi * wi;
        bq += di * wi;
        c += di * di;
    }
    return (-bq + std::sqrt(bq * bq - a * c)) / a;
}

// Exit distance and face index (ties keep the lowest index).
std::pair<double, std::size_t> polytope_exit(const Polytope& p, const Vec& xi, const Vec& w) {
    double best = kInf;
    std::size_t best_face = p.faces.size();
    for (std::size_t i = 0; i < p.faces.size(); ++i) {
        const double aw = dot(p.faces[i].normal, w);
        if (aw > 0.0) {
            const double t = (p.faces[i].offset - dot(p.faces[i].normal, xi)) / aw;
            if (t < best) {
                best = t;
                best_face = i;
            }
        }
    }
    if (best_face == p.faces.size())
        throw DegenerateDomain("polytope: no face ahead of the ray (unbounded)");
    return {best, best_face};
}

// Right endpoint of the ray's intersection with a disk, -inf if disjoint.
double disk_exit(const Vec& center, double radius, const Vec& xi, const Vec& w) {
    const Vec d = xi - center;
    const double b = dot(d, w);
    const double disc = b * b - norm2(d) + radius * radius;
    if (disc < 0.0) return -kInf;
    return -b + std::sqrt(disc);
}

// Right endpoint of ray vs axis-slab rectangle of the stadium core.
double rect_exit(const Stadium& s, const Vec& xi, const Vec& w) {
    const double len = distance(s.q, s.p);
    if (len == 0.0) return -kInf;  // degenerate capsule, the disks cover it
    const Vec u = normalized(s.q - s.p);
    const Vec v{-u[1], u[0]};
    double lo = -kInf, hi = kInf;
    // axial slab 0 <= (x - p).u <= len, lateral slab |(x - p).v| <= radius
    const double xu = dot(xi - s.p, u), wu = dot(w, u);
    const double xv = dot(xi - s.p, v), wv = dot(w, v);
    auto clip = [&](double x0, double dx, double a, double b) {
        if (dx == 0.0) {
            if (x0 < a || x0 > b) lo = kInf;  // parallel and outside
            return;
        }
        double t0 = (a - x0) / dx, t1 = (b - x0) / dx;
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
    };
    clip(xu, wu, 0.0, len);
    clip(xv, wv, -s.radius, s.radius);
    if (lo > hi) return -kInf;
    return hi;
}

double stadium_exit(const Stadium& s, const Vec& xi, const Vec& w) {
    // Union of two disks and the core rectangle is the capsule; the ray exit
    // from the union is the largest piece exit.
    double t = disk_exit(s.p, s.radius, xi, w);
    t = std::max(t, disk_exit(s.q, s.radius, xi, w));
    t = std::max(t, rect_exit(s, xi, w));
    return t;
}

Vec stadium_normal(const Stadium& s, const Vec& y) {
    const Vec u = normalized(s.q - s.p);
    const double len = distance(s.q, s.p);
    const double axial = dot(y - s.p, u);
    if (axial <= 0.0) return normalized(y - s.p);
    if (axial >= len) return normalized(y - s.q);
    const Vec v{-u[1], u[0]};
    return dot(y - s.p, v) >= 0.0 ? v : -v;
}

double implicit_exit(const ImplicitConvex& ic, const Vec& xi, const Vec& w) {
    double lo = 0.0;
    double hi = 2.0 * ic.diameter;
    const double tol = 1e-12 * ic.diameter;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (ic.inside(xi + mid * w))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double exit_distance(const Domain& dom, const Vec& xi, const UnitDirection& dir) {
    require_dim(dom, xi);
    if (!contains(dom, xi)) throw PointNotInterior("exit_distance: point not interior");
    const Vec& w = dir.vec();
    struct Visitor {
        const Vec& xi;
        const Vec& w;
        double operator()(const Ball& b) const { return ball_exit(b, xi, w); }
        double operator()(const Ellipsoid& e) const { return ellipsoid_exit(e, xi, w); }
        double operator()(const Polytope& p) const { return polytope_exit(p, xi, w).first; }
        double operator()(const Stadium& s) const { return stadium_exit(s, xi, w); }
        double operator()(const MultiAnnulus&) const {
            throw ConfigError("exit_distance: domain is not convex; use complement_intervals");
        }
        double operator()(const ImplicitConvex& i) const { return implicit_exit(i, xi, w); }
    };
    return std::visit(Visitor{xi, w}, dom.shape());
}

RayExit ray_exit(const Domain& dom, const Vec& xi, const UnitDirection& dir) {
    require_dim(dom, xi);
    if (!contains(dom, xi)) throw PointNotInterior("ray_exit: point not interior");
    const Vec& w = dir.vec();
    struct Visitor {
        const Vec& xi;
        const Vec& w;
        RayExit operator()(const Ball& b) const {
            const double t = ball_exit(b, xi, w);
            const Vec y = xi + t * w;
            return {t, (1.0 / b.radius) * (y - b.center)};
        }
        RayExit operator()(const Ellipsoid& e) const {
            const double t = ellipsoid_exit(e, xi, w);
            const Vec y = xi + t * w;
            Vec g(xi.dim());
            for (int i = 0; i < xi.dim(); ++i)
                g[i] = (y[i] - e.center[i]) / (e.semi_axes[i] * e.semi_axes[i]);
            return {t, normalized(g)};
        }
        RayExit operator()(const Polytope& p) const {
            const auto [t, face] = polytope_exit(p, xi, w);
            return {t, (1.0 / p.face_norms[face]) * p.faces[face].normal};
        }
        RayExit operator()(const Stadium& s) const {
            const double t = stadium_exit(s, xi, w);
            return {t, stadium_normal(s, xi + t * w)};
        }
        RayExit operator()(const MultiAnnulus&) const {
            throw ConfigError("ray_exit: domain is not convex; use complement_intervals");
        }
        RayExit operator()(const ImplicitConvex&) const {
            throw NormalsUnavailable("ray_exit: implicit domains expose no normals");
        }
    };
    return std::visit(Visitor{xi, w}, dom.shape());
}

void exit_distances(const Domain& dom, const Vec& xi, const double* const* dirs, std::size_t m,
                    double* out) {
    require_dim(dom, xi);
    if (!contains(dom, xi)) throw PointNotInterior("exit_distances: point not interior");
    const int n = dom.dim();

    if (const Ball* b = dom.get_if<Ball>()) {
        const Vec rel = xi - b->center;
        kernels::ops().ball_exit(n, m, dirs, rel.data(), b->radius, out);
        return;
    }
    if (const Ellipsoid* e = dom.get_if<Ellipsoid>()) {
        const Vec rel = xi - e->center;
        Vec inv_axes(n);
        for (int i = 0; i < n; ++i) inv_axes[i] = 1.0 / e->semi_axes[i];
        kernels::ops().ellipsoid_exit(n, m, dirs, rel.data(), inv_axes.data(), out);
        return;
    }

    Vec w(n);
    for (std::size_t i = 0; i < m; ++i) {
        for (int d = 0; d < n; ++d) w[d] = dirs[d][i];
        struct Visitor {
            const Vec& xi;
            const Vec& w;
            double operator()(const Ball& b) const { return ball_exit(b, xi, w); }
            double operator()(const Ellipsoid& e) const { return ellipsoid_exit(e, xi, w); }
            double operator()(const Polytope& p) const { return polytope_exit(p, xi, w).first; }
            double operator()(const Stadium& s) const { return stadium_exit(s, xi, w); }
            double operator()(const MultiAnnulus&) const {
                throw ConfigError("exit_distances: domain is not convex");
            }
            double operator()(const ImplicitConvex& ic) const { return implicit_exit(ic, xi, w); }
        };
        out[i] = std::visit(Visitor{xi, w}, dom.shape());
    }
}

// ---------------------------------------------------------------------------
// Complement intervals
// ---------------------------------------------------------------------------

ComplementIntervals complement_intervals(const Domain& dom, const Vec& xi,
                                         const UnitDirection& dir) {
    require_dim(dom, xi);
    if (!contains(dom, xi)) throw PointNotInterior("complement_intervals: point not interior");

    if (dom.convex()) {
        return {{Interval{exit_distance(dom, xi, dir), kInf}}};
    }

    const MultiAnnulus& m = *dom.get_if<MultiAnnulus>();
    const Vec& w = dir.vec();
    const Vec d = xi - m.center;
    const double bw = dot(d, w);
    const double dd = norm2(d);

    // Positive crossing times of every ring sphere, then walk the segments.
    std::vector<double> ts;
    for (const auto& ring : m.rings) {
        for (const double s : {ring.inner, ring.outer}) {
            const double disc = bw * bw - dd + s * s;
            if (disc <= 0.0) continue;
            const double root = std::sqrt(disc);
            if (-bw - root > 0.0) ts.push_back(-bw - root);
            if (-bw + root > 0.0) ts.push_back(-bw + root);
        }
    }
    std::sort(ts.begin(), ts.end());

    ComplementIntervals out;
    double seg_begin = 0.0;
    auto midpoint_inside = [&](double a, double b) {
        const double mid = b == kInf ? a + 1.0 + m.rings.back().outer : 0.5 * (a + b);
        return contains(dom, xi + mid * w);
    };
    double open_begin = -1.0;
    for (std::size_t i = 0; i <= ts.size(); ++i) {
        const double seg_end = i < ts.size() ? ts[i] : kInf;
        if (seg_end > seg_begin) {
            const bool inside = midpoint_inside(seg_begin, seg_end);
            if (!inside && open_begin < 0.0) open_begin = seg_begin;
            if (inside && open_begin >= 0.0) {
                out.intervals.push_back({open_begin, seg_begin});
                open_begin = -1.0;
            }
        }
        seg_begin = seg_end;
    }
    if (open_begin >= 0.0) out.intervals.push_back({open_begin, kInf});
    return out;
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

DomainMetrics::DomainMetrics(const Domain& dom) : dom_(&dom) {
    struct Visitor {
        double operator()(const Ball& b) const { return 2.0 * b.radius; }
        double operator()(const Ellipsoid& e) const {
            double amax = 0.0;
            for (int i = 0; i < e.semi_axes.dim(); ++i) amax = std::max(amax, e.semi_axes[i]);
            return 2.0 * amax;
        }
        double operator()(const Polytope& p) const { return p.diameter; }
        double operator()(const Stadium& s) const {
            return distance(s.p, s.q) + 2.0 * s.radius;
        }
        double operator()(const MultiAnnulus& m) const { return 2.0 * m.rings.back().outer; }
        double operator()(const ImplicitConvex& i) const { return i.diameter; }
    };
    diameter_ = std::visit(Visitor{}, dom.shape());
}

double DomainMetrics::boundary_distance(const Vec& xi) const {
    require_dim(*dom_, xi);
    struct Visitor {
        const Vec& xi;
        const Domain& dom;
        double operator()(const Ball& b) const { return b.radius - distance(xi, b.center); }
        double operator()(const Ellipsoid& e) const {
            return ellipsoid_boundary_distance(e.semi_axes, xi - e.center);
        }
        double operator()(const Polytope& p) const {
            double d = kInf;
            for (std::size_t i = 0; i < p.faces.size(); ++i)
                d = std::min(d,
                             (p.faces[i].offset - dot(p.faces[i].normal, xi)) / p.face_norms[i]);
            return d;
        }
        double operator()(const Stadium& s) const {
            return s.radius - dist_to_segment(xi, s.p, s.q);
        }
        double operator()(const MultiAnnulus& m) const {
            const double r = distance(xi, m.center);
            double d = kInf;
            for (const auto& ring : m.rings) {
                d = std::min(d, std::abs(r - ring.inner));
                d = std::min(d, std::abs(r - ring.outer));
            }
            return d;
        }
        double operator()(const ImplicitConvex&) const {
            // No closed form; sampled minimum over fixed directions
            // (approximate, adequate for guards on predicate-only domains).
            double d = kInf;
            const int n = xi.dim();
            for (int k = 0; k < 64; ++k) {
                Vec g(n);
                for (int j = 0; j < n; ++j)
                    g[j] = counter_gaussian(0x9d5ab8a1ULL,
                                            static_cast<std::uint64_t>(k * kMaxDim + j));
                d = std::min(d, exit_distance(dom, xi, UnitDirection(g)));
            }
            return d;
        }
    };
    return std::visit(Visitor{xi, *dom_}, dom_->shape());
}

double ellipsoid_boundary_distance(const Vec& semi_axes, const Vec& rel) {
    const int n = rel.dim();
    double amin = kInf;
    double rel_norm = 0.0;
    for (int i = 0; i < n; ++i) {
        amin = std::min(amin, semi_axes[i]);
        rel_norm += rel[i] * rel[i];
    }
    if (rel_norm == 0.0) return amin;

    // Nearest boundary point x_i = a_i^2 rel_i / (a_i^2 + lam); the boundary
    // constraint f(lam) = sum (a_i rel_i / (a_i^2 + lam))^2 = 1 has a unique
    // root in (-L^2, 0) with L = min axis having rel_i != 0.
    double lmin2 = kInf;
    for (int i = 0; i < n; ++i)
        if (rel[i] != 0.0) lmin2 = std::min(lmin2, semi_axes[i] * semi_axes[i]);
    auto f = [&](double lam) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            if (rel[i] == 0.0) continue;
            const double t = semi_axes[i] * rel[i] / (semi_axes[i] * semi_axes[i] + lam);
            s += t * t;
        }
        return s;
    };
    double lo = -lmin2, hi = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    const double lam = 0.5 * (lo + hi);

    const double amin2 = amin * amin;
    if (lam >= -amin2) {
        double d2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double yi = semi_axes[i] * semi_axes[i] * rel[i] /
                              (semi_axes[i] * semi_axes[i] + lam);
            d2 += (yi - rel[i]) * (yi - rel[i]);
        }
        return std::sqrt(d2);
    }

    // Inside the evolute along a short axis: the nearest point leaves the
    // gradient-continuation branch. lam pins to -amin^2 and the short-axis
    // component is freed.
    double d2 = 0.0;
    double cap = 1.0;
    for (int i = 0; i < n; ++i) {
        if (semi_axes[i] * semi_axes[i] - amin2 < 1e-14 * amin2) continue;  // short axes
        const double yi = semi_axes[i] * semi_axes[i] * rel[i] /
                          (semi_axes[i] * semi_axes[i] - amin2);
        d2 += (yi - rel[i]) * (yi - rel[i]);
        cap -= (yi / semi_axes[i]) * (yi / semi_axes[i]);
    }
    d2 += amin2 * std::max(cap, 0.0);
    return std::sqrt(d2);
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

std::vector<double> sphere_tangency_polar_breakpoints(const MultiAnnulus& dom, double radius) {
    std::vector<double> thetas;
    for (const auto& ring : dom.rings) {
        for (const double s : {ring.inner, ring.outer}) {
            if (s < radius) thetas.push_back(std::numbers::pi - std::asin(s / radius));
        }
    }
    std::sort(thetas.begin(), thetas.end());
    return thetas;
}

Vec sample_interior(const Domain& dom, double margin_frac, std::uint64_t seed,
                    std::uint64_t counter) {
    const int n = dom.dim();
    const DomainMetrics met(dom);
    const double min_bdist = margin_frac * met.diameter();
    for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
        const std::uint64_t base = (counter * 100000 + attempt) * (kMaxDim + 1);
        Vec g(n);
        for (int j = 0; j < n; ++j) g[j] = counter_gaussian(seed, base + j);
        const double u = counter_uniform(seed, base + kMaxDim);
        const Vec x = dom.reference_center() +
                      (dom.bounding_radius() * std::pow(u, 1.0 / n)) * normalized(g);
        if (contains(dom, x) && met.boundary_distance(x) >= min_bdist) return x;
    }
    throw Error("sample_interior: rejection sampling failed");
}

}  // namespace psi
