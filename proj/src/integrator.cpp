#include "maxgraph/integrator.hpp"

#include <sstream>

#include "maxgraph/extrapolation.hpp"
#include "maxgraph/quadrature.hpp"
#include "maxgraph/weierstrass.hpp"

namespace maxgraph {

namespace {

constexpr cplx kI{0.0, 1.0};

// arg in (-pi, pi], with the negative real axis (either zero sign) at +pi.
double principal_arg(cplx z) {
    if (z.imag() == 0.0)
        return z.real() < 0.0 ? kPi : 0.0;
    return std::arg(z);
}

bool near_branch_point(cplx e, const SurfaceParams& p, double patch_factor) {
    for (double c : p.branch_points())
        if (std::abs(e - c) <= patch_factor * p.local_gap(c))
            return true;
    return false;
}

CVec3 form_times_velocity(cplx z, cplx dz, const SurfaceParams& p) {
    const ExtendedComplex w2 = w_squared(z, p);
    if (w2.infinite)
        throw Error(ErrorKind::QuadratureFailure, "quadrature node landed on a pole of w^2");
    const cplx w = select_branch(w2.value);
    const FormTriple f = phi_from_w(z, w);
    return {f.phi1 * dz, f.phi2 * dz, f.phi3 * dz};
}

QuadratureResult integrate_piece(const Segment& s, double t0, double t1, bool sing_start, bool sing_end,
                                 const SurfaceParams& p, const QuadratureOptions& q) {
    const double h = t1 - t0;
    VectorIntegrand g;
    if (sing_start && !sing_end) {
        g = [&](double u) {
            const double t = t0 + h * u * u;
            const double dt = 2.0 * h * u;
            CVec3 v = form_times_velocity(segment_point(s, t), segment_velocity(s, t), p);
            for (auto& c : v) c *= dt;
            return v;
        };
    } else if (sing_end && !sing_start) {
        g = [&](double u) {
            const double t = t1 - h * (1.0 - u) * (1.0 - u);
            const double dt = 2.0 * h * (1.0 - u);
            CVec3 v = form_times_velocity(segment_point(s, t), segment_velocity(s, t), p);
            for (auto& c : v) c *= dt;
            return v;
        };
    } else {
        g = [&](double u) {
            const double t = t0 + h * u;
            CVec3 v = form_times_velocity(segment_point(s, t), segment_velocity(s, t), p);
            for (auto& c : v) c *= h;
            return v;
        };
    }
    return integrate_adaptive(g, 0.0, 1.0, q);
}

Displacement integrate_segment(const Segment& s, const SurfaceParams& p, const IntegratorOptions& opts) {
    const QuadratureOptions q{opts.abs_tol, opts.max_depth};
    const bool a = near_branch_point(segment_start(s), p, opts.patch_factor);
    const bool b = near_branch_point(segment_end(s), p, opts.patch_factor);
    std::vector<QuadratureResult> parts;
    if (a && b) {
        parts.push_back(integrate_piece(s, 0.0, 0.5, true, false, p, q));
        parts.push_back(integrate_piece(s, 0.5, 1.0, false, true, p, q));
    } else {
        parts.push_back(integrate_piece(s, 0.0, 1.0, a, b, p, q));
    }
    Displacement d;
    for (const auto& r : parts) {
        for (int i = 0; i < 3; ++i)
            d.value[i] += r.value[i].real();
        d.error += r.error;
    }
    return d;
}

}  // namespace

cplx segment_point(const Segment& s, double t) {
    return std::visit(
        [t](const auto& seg) -> cplx {
            using T = std::decay_t<decltype(seg)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                if (t == 1.0)
                    return seg.to;
                return seg.from + t * (seg.to - seg.from);
            } else if constexpr (std::is_same_v<T, ArcSegment>) {
                return std::polar(seg.radius, seg.theta_from + t * (seg.theta_to - seg.theta_from));
            } else {
                const double lr = std::log(seg.r_from) + t * (std::log(seg.r_to) - std::log(seg.r_from));
                return std::polar(std::exp(lr), seg.theta);
            }
        },
        s);
}

cplx segment_velocity(const Segment& s, double t) {
    return std::visit(
        [&](const auto& seg) -> cplx {
            using T = std::decay_t<decltype(seg)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                return seg.to - seg.from;
            } else if constexpr (std::is_same_v<T, ArcSegment>) {
                return kI * (seg.theta_to - seg.theta_from) * segment_point(s, t);
            } else {
                return (std::log(seg.r_to) - std::log(seg.r_from)) * segment_point(s, t);
            }
        },
        s);
}

Displacement integrate_segments(std::span<const Segment> path, const SurfaceParams& p,
                                const IntegratorOptions& opts) {
    Displacement total;
    for (const auto& s : path) {
        const Displacement d = integrate_segment(s, p, opts);
        total.value = total.value + d.value;
        total.error += d.error;
    }
    return total;
}

std::vector<Segment> segments_from_path(const PathSpec& path, const SurfaceParams& p) {
    const auto& wp = path.waypoints;
    if (wp.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "a path needs at least two waypoints");
    const double avoid = path.avoidance_radius > 0.0 ? path.avoidance_radius : 1e-3 * p.min_gap();
    auto singular_points = p.branch_points();
    singular_points.push_back(0.0);

    for (std::size_t i = 0; i < wp.size(); ++i) {
        if (wp[i] == cplx{})
            throw Error(ErrorKind::PathThroughSingularity, "waypoint at z = 0");
        if (i > 0 && wp[i] == wp[i - 1])
            throw Error(ErrorKind::InvalidArgument, "consecutive waypoints coincide");
        const bool interior = i > 0 && i + 1 < wp.size();
        if (!interior)
            continue;
        for (double c : singular_points) {
            if (std::abs(wp[i] - c) < avoid) {
                std::ostringstream os;
                os << "interior waypoint " << i << " lies within " << avoid << " of " << c;
                throw Error(ErrorKind::PathThroughSingularity, os.str());
            }
        }
        if (wp[i].imag() == 0.0 && on_singular_set(wp[i].real(), p))
            throw Error(ErrorKind::PathThroughSingularity, "interior waypoint on a singular interval");
    }

    std::vector<Segment> out;
    for (std::size_t i = 1; i < wp.size(); ++i) {
        const cplx from = wp[i - 1], to = wp[i];
        const cplx d = to - from;
        // Points of {0, branch points} strictly inside the segment.
        for (double c : singular_points) {
            const double t = ((cplx{c, 0.0} - from) * std::conj(d)).real() / std::norm(d);
            if (t <= 0.0 || t >= 1.0)
                continue;
            if (std::abs(from + t * d - c) <= 1e-14 * (1.0 + std::abs(c)))
                throw Error(ErrorKind::PathThroughSingularity, "segment passes through a branch point or 0");
        }
        // Crossing (or running along) a singular interval.
        if (from.imag() == 0.0 && to.imag() == 0.0) {
            const double lo = std::min(from.real(), to.real()), hi = std::max(from.real(), to.real());
            for (const auto& c : singular_components(p))
                if (lo < c.hi && c.lo < hi)
                    throw Error(ErrorKind::PathThroughSingularity, "segment runs along a singular interval");
        } else if ((from.imag() < 0.0 && to.imag() > 0.0) || (from.imag() > 0.0 && to.imag() < 0.0)) {
            const double t = -from.imag() / d.imag();
            const double x = (from + t * d).real();
            if (on_singular_set(x, p)) {
                std::ostringstream os;
                os << "segment " << i - 1 << " crosses a singular interval at x = " << x;
                throw Error(ErrorKind::PathThroughSingularity, os.str());
            }
        }
        out.push_back(LineSegment{from, to});
    }
    return out;
}

Displacement integrate_path(const PathSpec& path, const SurfaceParams& p, const IntegratorOptions& opts) {
    const auto segs = segments_from_path(path, p);
    return integrate_segments(segs, p, opts);
}

double default_basepoint(const SurfaceParams& p) { return p.a(2 * p.m()) + 1.0; }

void check_basepoint(double x0, const SurfaceParams& p) {
    if (!(x0 > 0.0) || !std::isfinite(x0))
        throw Error(ErrorKind::InvalidArgument, "basepoint must be a positive real number");
    if (on_singular_set(x0, p))
        throw Error(ErrorKind::InvalidArgument, "basepoint lies on a singular interval");
}

std::vector<Segment> route(double x0, cplx z) {
    std::vector<Segment> out;
    if (z == cplx{x0, 0.0})
        return out;
    const double r = std::abs(z);
    const double theta = principal_arg(z);
    const double mid = theta >= 0.0 ? kPi / 2 : -kPi / 2;
    out.push_back(ArcSegment{x0, 0.0, mid});
    if (r != x0)
        out.push_back(RadialSegment{mid, x0, r});
    if (theta != mid)
        out.push_back(ArcSegment{r, mid, theta});
    return out;
}

ImmersionSample immersion(cplx z, const SurfaceParams& p, double basepoint, const IntegratorOptions& opts) {
    if (z == cplx{})
        throw Error(ErrorKind::InvalidArgument, "z = 0 is an end of the surface");
    check_basepoint(basepoint, p);
    const auto segs = route(basepoint, z);
    const Displacement d = integrate_segments(segs, p, opts);
    return {z, d.value, d.error};
}

PeriodVector loop_period(LoopCenter center, const SurfaceParams& p, const IntegratorOptions& opts) {
    PeriodVector out;
    out.center = center;
    if (center == LoopCenter::Zero) {
        double inner = p.a(1);
        if (p.n() > 0)
            inner = std::min(inner, -p.b(1));
        out.radius = 0.5 * inner;
        const Segment loop = ArcSegment{out.radius, 0.0, 2.0 * kPi};
        const Displacement d = integrate_segments(std::span(&loop, 1), p, opts);
        out.v = d.value;
        out.error = d.error;
    } else {
        double outer = p.a(2 * p.m());
        if (p.n() > 0)
            outer = std::max(outer, -p.b(2 * p.n()));
        out.radius = 2.0 * outer;
        // Counterclockwise about infinity is clockwise in the z-plane.
        const Segment loop = ArcSegment{out.radius, 0.0, -2.0 * kPi};
        const Displacement d = integrate_segments(std::span(&loop, 1), p, opts);
        out.v = d.value;
        out.error = d.error;
    }
    return out;
}

const char* to_string(ApproachSide side) {
    switch (side) {
    case ApproachSide::Above: return "above";
    case ApproachSide::Below: return "below";
    case ApproachSide::Left: return "left";
    case ApproachSide::Right: return "right";
    }
    return "?";
}

ApexEstimate apex(const SingularComponent& c, ApproachSide side, const SurfaceParams& p, double basepoint,
                  const ApexOptions& opts) {
    ApexEstimate out;
    double eps0 = opts.eps_factor * c.length();
    const bool lateral = side == ApproachSide::Left || side == ApproachSide::Right;
    if (lateral)
        eps0 = std::min(eps0, 0.25 * outer_gap(c, p));
    out.eps0 = eps0;

    const double x = c.lo + opts.interior_fraction * c.length();
    std::array<double, 3> s{};
    std::array<Vec3, 3> v{};
    for (int level = 0; level < 3; ++level) {
        const double eps = eps0 / static_cast<double>(1 << level);
        cplx z;
        switch (side) {
        case ApproachSide::Above: z = {x, eps}; break;
        case ApproachSide::Below: z = {x, -eps}; break;
        case ApproachSide::Left: z = {c.lo - eps, 0.0}; break;
        case ApproachSide::Right: z = {c.hi + eps, 0.0}; break;
        }
        s[level] = std::sqrt(eps);
        v[level] = immersion(z, p, basepoint, opts.integrator).f;
    }
    out.samples = v;
    static constexpr std::array<double, 2> kInteriorPowers{2.0, 4.0};
    static constexpr std::array<double, 2> kEndpointPowers{1.0, 3.0};
    const Extrapolated e = richardson(s, v, lateral ? kEndpointPowers : kInteriorPowers);
    out.value = e.value;
    out.error = e.error;
    if (!(out.error <= opts.tolerance)) {
        std::ostringstream os;
        os << "apex from " << to_string(side) << " of [" << c.lo << ", " << c.hi << "]: residual " << out.error
           << " exceeds " << opts.tolerance;
        throw Error(ErrorKind::NonConvergent, os.str());
    }
    return out;
}

ImmersionSample apex_direct(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                            const IntegratorOptions& opts) {
    return immersion(cplx{c.midpoint(), 0.0}, p, basepoint, opts);
}

}  // namespace maxgraph
