// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "psi/errors.hpp"
#include "psi/vec.hpp"

namespace psi {

// ---------------------------------------------------------------------------
// Shapes
// ---------------------------------------------------------------------------

struct Ball {
    Vec center;
    double radius;
};

struct Ellipsoid {
    Vec center;
    Vec semi_axes;
};

/// Open half-space {x : normal . x < offset}.
struct Halfspace {
    Vec normal;
    double offset;
};

/// Bounded intersection of open half-spaces. Vertices, interior witness and
/// bounding ball are computed on construction (2-D and 3-D only).
struct Polytope {
    std::vector<Halfspace> faces;
    std::vector<double> face_norms;  // |normal| per face
    std::vector<Vec> vertices;
    Vec interior_point;
    Vec bounding_center;
    double bounding_radius = 0.0;
    double diameter = 0.0;
};

/// 2-D convex hull of two equal disks (demo shape).
struct Stadium {
    Vec p;
    Vec q;
    double radius;
};

struct Ring {
    double inner;
    double outer;
};

/// Union of concentric spherical shells; bounded but not convex.
struct MultiAnnulus {
    Vec center;
    std::vector<Ring> rings;
};

/// Convex domain given only by a membership predicate. Exit distances come
/// from bisection; no boundary normals are available.
struct ImplicitConvex {
    std::function<bool(const Vec&)> inside;
    Vec interior_point;
    double diameter;
    Vec bounding_center;
    double bounding_radius;
};

// ---------------------------------------------------------------------------
// Domain
// ---------------------------------------------------------------------------

class Domain {
  public:
    using Shape = std::variant<Ball, Ellipsoid, Polytope, Stadium, MultiAnnulus, ImplicitConvex>;

    static Domain ball(const Vec& center, double radius);
    static Domain ellipsoid(const Vec& center, const Vec& semi_axes);
    static Domain polytope(std::vector<Halfspace> faces);
    static Domain stadium(const Vec& p, const Vec& q, double radius);
    static Domain multi_annulus(const Vec& center, std::vector<Ring> rings);
    static Domain implicit_convex(std::function<bool(const Vec&)> inside,
                                  const Vec& interior_point, double diameter);

    int dim() const { return dim_; }
    bool convex() const { return convex_; }
    const char* shape_name() const;
    const Shape& shape() const { return shape_; }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&shape_);
    }

    /// Center used for oracle cutoffs and for the annular series.
    const Vec& reference_center() const { return ref_center_; }
    /// Radius of a ball about reference_center() containing the closure.
    double bounding_radius() const { return bounding_radius_; }

  private:
    Domain(Shape s, int dim, bool convex, Vec ref, double brad)
        : shape_(std::move(s)), dim_(dim), convex_(convex), ref_center_(ref),
          bounding_radius_(brad) {}

    Shape shape_;
    int dim_;
    bool convex_;
    Vec ref_center_;
    double bounding_radius_;
};

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

/// Membership in the open set; boundary points test false.
bool contains(const Domain& dom, const Vec& x);

struct RayExit {
    double distance;
    Vec normal;  // unit outward normal at the exit point
};

/// Exit distance along a ray from an interior point (convex domains and
/// ImplicitConvex; throws ConfigError for MultiAnnulus).
double exit_distance(const Domain& dom, const Vec& xi, const UnitDirection& dir);

/// Exit distance plus the outward normal at the exit point. Throws
/// PointNotInterior, NormalsUnavailable (ImplicitConvex), or DegenerateDomain.
RayExit ray_exit(const Domain& dom, const Vec& xi, const UnitDirection& dir);

/// Batched exit distances over unit directions stored column-wise
/// (dirs[d] points at m doubles). Kernel-accelerated for Ball/Ellipsoid.
void exit_distances(const Domain& dom, const Vec& xi, const double* const* dirs, std::size_t m,
                    double* out);

struct Interval {
    double begin;
    double end;  // +infinity on the unbounded tail
};

/// Ordered decomposition of {t > 0 : xi + t dir outside the domain}.
struct ComplementIntervals {
    std::vector<Interval> intervals;
};

ComplementIntervals complement_intervals(const Domain& dom, const Vec& xi,
                                         const UnitDirection& dir);

/// Diameter, distance-to-boundary, and the diam/margin Lipschitz bound.
/// Holds a view of the domain; keep the domain alive while in use.
class DomainMetrics {
  public:
    explicit DomainMetrics(const Domain& dom);
    double diameter() const { return diameter_; }
    double boundary_distance(const Vec& xi) const;
    double lipschitz_bound(double margin) const { return diameter_ / margin; }

  private:
    const Domain* dom_;
    double diameter_;
};

inline DomainMetrics metrics(const Domain& dom) { return DomainMetrics(dom); }

/// Exact distance from a point (relative to center) to the ellipsoid surface,
/// point strictly inside.
double ellipsoid_boundary_distance(const Vec& semi_axes, const Vec& rel);

/// Polar angles (from the axis through a point at |xi| = radius on the
/// symmetry axis) where rays become tangent to one of the annulus spheres.
/// The radial integrand is smooth between consecutive angles.
std::vector<double> sphere_tangency_polar_breakpoints(const MultiAnnulus& dom, double radius);

/// Deterministic interior sample with boundary_distance >= margin_frac * diam;
/// rejection sampling driven by the counter RNG.
Vec sample_interior(const Domain& dom, double margin_frac, std::uint64_t seed,
                    std::uint64_t counter);

}  // namespace psi
