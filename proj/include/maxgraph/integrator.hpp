#pragma once

#include <span>
#include <variant>
#include <vector>

#include "maxgraph/components.hpp"
#include "maxgraph/params.hpp"
#include "maxgraph/types.hpp"

namespace maxgraph {

// ---------------------------------------------------------------------------
// Path segments. Every segment is parametrized over t in [0, 1].

struct LineSegment {
    cplx from;
    cplx to;
};

/// Arc of the circle |z| = radius, from angle theta_from to theta_to (any sign, any length).
struct ArcSegment {
    double radius;
    double theta_from;
    double theta_to;
};

/// Ray segment at fixed angle, parametrized uniformly in log r.
struct RadialSegment {
    double theta;
    double r_from;
    double r_to;
};

using Segment = std::variant<LineSegment, ArcSegment, RadialSegment>;

cplx segment_point(const Segment& s, double t);
cplx segment_velocity(const Segment& s, double t);
inline cplx segment_start(const Segment& s) { return segment_point(s, 0.0); }
inline cplx segment_end(const Segment& s) { return segment_point(s, 1.0); }

/// A polyline path given by its waypoints.
struct PathSpec {
    std::vector<cplx> waypoints;
    double avoidance_radius = 0.0;  // <= 0 selects the default 1e-3 * min gap
};

struct IntegratorOptions {
    double abs_tol = 1e-10;  // per segment
    int max_depth = 40;
    double patch_factor = 1e-2;  // endpoint substitution radius, relative to the branch point's gap
};

struct Displacement {
    Vec3 value{};
    double error = 0.0;
};

/// Re of the integral of (phi1, phi2, phi3) along consecutive segments.
/// Endpoints at (or next to) a branch point are handled by the substitution z = c + t^2.
Displacement integrate_segments(std::span<const Segment> path, const SurfaceParams& p,
                                const IntegratorOptions& opts = {});

/// Checks the path contract and converts it to line segments.
/// Throws PathThroughSingularity when an interior waypoint is within the avoidance radius of
/// {0} and the branch points, when a segment passes through one of them, or when a segment
/// crosses a singular interval.
std::vector<Segment> segments_from_path(const PathSpec& path, const SurfaceParams& p);

Displacement integrate_path(const PathSpec& path, const SurfaceParams& p, const IntegratorOptions& opts = {});

// ---------------------------------------------------------------------------
// The immersion f(z) = Re int_{z0}^{z} (phi1, phi2, phi3).

struct ImmersionSample {
    cplx z;
    Vec3 f{};
    double quad_error = 0.0;
};

/// z0 = a_{2m} + 1, on the positive real axis to the right of every branch point.
double default_basepoint(const SurfaceParams& p);

/// Throws InvalidArgument unless x0 > 0 lies off the closed singular intervals.
void check_basepoint(double x0, const SurfaceParams& p);

/// Route from the basepoint x0 to z: arc |z| = x0 to angle +-pi/2 (the half-plane of z),
/// ray to |z|, arc to arg z. Never touches the real axis except at the endpoints.
std::vector<Segment> route(double x0, cplx z);

ImmersionSample immersion(cplx z, const SurfaceParams& p, double basepoint, const IntegratorOptions& opts = {});
inline ImmersionSample immersion(cplx z, const SurfaceParams& p) {
    return immersion(z, p, default_basepoint(p));
}

// ---------------------------------------------------------------------------
// Periods at the ends.

enum class LoopCenter { Zero, Infinity };

struct PeriodVector {
    Vec3 v{};
    LoopCenter center = LoopCenter::Zero;
    double radius = 0.0;
    double error = 0.0;
};

/// Counterclockwise loop around the stated end (clockwise in z for infinity), enclosing no branch point.
PeriodVector loop_period(LoopCenter center, const SurfaceParams& p, const IntegratorOptions& opts = {});

// ---------------------------------------------------------------------------
// Limits of f at a singular interval.

enum class ApproachSide { Above, Below, Left, Right };
const char* to_string(ApproachSide side);

struct ApexOptions {
    double interior_fraction = 0.5;  // where Above/Below approach the interval
    double eps_factor = 1e-5;        // eps0 = eps_factor * interval length
    double tolerance = 1e-6;         // maximum accepted extrapolation residual
    IntegratorOptions integrator{};
};

struct ApexEstimate {
    Vec3 value{};
    double error = 0.0;       // extrapolation residual
    double eps0 = 0.0;
    std::array<Vec3, 3> samples{};  // f at eps0, eps0/2, eps0/4
};

/// Limit of f approaching the interval from one side, by extrapolation in sqrt(eps).
/// Above/below approach an interior point, where f is analytic in eps (powers eps, eps^2);
/// left/right approach a branch point along the real axis (odd powers of sqrt(eps)).
/// Throws NonConvergent when the residual exceeds opts.tolerance.
ApexEstimate apex(const SingularComponent& c, ApproachSide side, const SurfaceParams& p, double basepoint,
                  const ApexOptions& opts = {});

/// Direct evaluation of f on the interval itself (its midpoint, reached from the upper half-plane).
ImmersionSample apex_direct(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                            const IntegratorOptions& opts = {});

}  // namespace maxgraph
