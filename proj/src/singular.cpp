#include "maxgraph/singular.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "maxgraph/weierstrass.hpp"

namespace maxgraph {

namespace {

double modulus_minus_one(const ExtendedComplex& G) {
    if (G.infinite)
        return std::numeric_limits<double>::infinity();
    return std::abs(G.value) - 1.0;
}

double extent(const SurfaceParams& p) {
    double r = p.a(2 * p.m());
    if (p.n() > 0)
        r = std::max(r, -p.b(2 * p.n()));
    return r;
}

}  // namespace

SingularSetCheck check_singular_set(const SurfaceParams& p, const SingularSetOptions& opts) {
    SingularSetCheck out;
    out.components = singular_components(p);
    out.min_off_margin = std::numeric_limits<double>::infinity();

    for (const auto& c : out.components) {
        std::vector<double> w2;
        // Endpoints included: there w is 0 or infinite and G = +-1.
        for (int i = -1; i <= opts.interval_samples; ++i) {
            double x;
            if (i < 0)
                x = c.lo;
            else if (i == opts.interval_samples)
                x = c.hi;
            else
                x = c.lo + c.length() * (i + 0.5) / opts.interval_samples;
            const GaussValue g = gauss(cplx{x, 0.0}, p);
            out.max_interval_deviation = std::max(out.max_interval_deviation, std::abs(modulus_minus_one(g.G)));
            ++out.samples_checked;
            if (i >= 0 && i < opts.interval_samples)
                w2.push_back(w_squared(cplx{x, 0.0}, p).value.real());
        }
        bool negative = true, up = true, down = true;
        for (std::size_t i = 0; i < w2.size(); ++i) {
            negative = negative && w2[i] < 0.0;
            if (i > 0) {
                up = up && w2[i] > w2[i - 1];
                down = down && w2[i] < w2[i - 1];
            }
        }
        out.one_to_one.push_back(negative && (up || down));
    }

    std::mt19937_64 rng(opts.seed);
    const double R = 2.0 * extent(p);
    std::uniform_real_distribution<double> coord(-R, R);
    auto record = [&](cplx z) {
        const double d = modulus_minus_one(gauss(z, p).G);
        out.min_off_margin = std::min(out.min_off_margin, d);
        if (std::abs(d) <= opts.tolerance)
            ++out.off_hits;
        ++out.samples_checked;
    };
    for (int drawn = 0; drawn < opts.off_samples;) {
        const double x = coord(rng);
        if (x == 0.0 || on_singular_set(x, p))
            continue;
        record(cplx{x, 0.0});
        ++drawn;
    }
    for (int drawn = 0; drawn < opts.complex_samples;) {
        const cplx z{coord(rng), coord(rng)};
        if (z.imag() == 0.0)
            continue;
        record(z);
        ++drawn;
    }
    out.pass = out.max_interval_deviation <= opts.tolerance && out.off_hits == 0 && out.min_off_margin > 0.0;
    return out;
}

std::vector<SingularComponent> singular_set(const SurfaceParams& p, const SingularSetOptions& opts) {
    SingularSetCheck chk = check_singular_set(p, opts);
    if (!chk.pass) {
        std::ostringstream os;
        os << "|G| = 1 locus disagrees with the closed-form intervals: max deviation on intervals "
           << chk.max_interval_deviation << ", off-set hits " << chk.off_hits;
        throw Error(ErrorKind::VerificationFailure, os.str());
    }
    return chk.components;
}

NondegeneracyReport check_nondegeneracy(const SingularComponent& c, const SurfaceParams& p,
                                        const NondegeneracyOptions& opts) {
    NondegeneracyReport out;
    out.min_abs_value = std::numeric_limits<double>::infinity();
    out.min_abs_dh_over_g = std::numeric_limits<double>::infinity();
    std::vector<double> args;
    for (int i = 1; i <= opts.samples; ++i) {
        const double x = c.lo + c.length() * i / (opts.samples + 1);
        const cplx z{x, 0.0};
        const cplx v = dg_over_g_dh(z, p);
        out.x.push_back(x);
        out.values.push_back(v.real());
        out.max_relative_imag = std::max(out.max_relative_imag, std::abs(v.imag()) / std::abs(v));
        out.min_abs_value = std::min(out.min_abs_value, std::abs(v));

        const ExtendedComplex G = gauss(z, p).G;
        out.min_abs_dh_over_g = std::min(out.min_abs_dh_over_g, std::abs(dh_coefficient(z, p) / G.value));
        args.push_back(std::arg(G.value));
    }
    // Unwrapped angle steps all of one sign and less than a full turn in total.
    bool up = true, down = true;
    double turn = 0.0;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const double step = std::remainder(args[i] - args[i - 1], 2.0 * kPi);
        up = up && step > 0.0;
        down = down && step < 0.0;
        turn += step;
    }
    out.gauss_injective = (up || down) && std::abs(turn) < 2.0 * kPi;
    out.pass = out.max_relative_imag <= opts.imag_tolerance && out.min_abs_value >= opts.floor &&
               out.min_abs_dh_over_g >= opts.floor && out.gauss_injective;
    return out;
}

NondegeneracyReport nondegeneracy(const SingularComponent& c, const SurfaceParams& p,
                                  const NondegeneracyOptions& opts) {
    NondegeneracyReport r = check_nondegeneracy(c, p, opts);
    if (!r.pass) {
        std::ostringstream os;
        os << "component [" << c.lo << ", " << c.hi << "]: max relative imaginary part " << r.max_relative_imag
           << ", min |dG/(G dh)| " << r.min_abs_value << ", min |dh/G| " << r.min_abs_dh_over_g
           << (r.gauss_injective ? "" : ", G not injective");
        throw Error(ErrorKind::DegenerateSingularity, os.str());
    }
    return r;
}

DirectionEstimate numeric_direction(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                                    const DirectionOptions& opts) {
    DirectionEstimate out;
    out.apex = apex_direct(c, p, basepoint, opts.integrator).f;
    const double gap = outer_gap(c, p);
    bool first = true;
    for (double factor : opts.eps_factors) {
        const double eps = std::min(factor * c.length(), 0.5 * gap);
        DirectionSample s;
        s.eps = eps;
        s.x3_left = immersion(cplx{c.lo - eps, 0.0}, p, basepoint, opts.integrator).f[2];
        s.x3_right = immersion(cplx{c.hi + eps, 0.0}, p, basepoint, opts.integrator).f[2];
        out.samples.push_back(s);

        const double dl = out.apex[2] - s.x3_left, dr = out.apex[2] - s.x3_right;
        ConeDirection d;
        if (dl > opts.tolerance && dr > opts.tolerance) {
            d = ConeDirection::Up;
        } else if (dl < -opts.tolerance && dr < -opts.tolerance) {
            d = ConeDirection::Down;
        } else {
            std::ostringstream os;
            os << "apex height minus neighbors at eps " << eps << ": " << dl << ", " << dr;
            throw Error(ErrorKind::AmbiguousDirection, os.str());
        }
        if (!first && d != out.direction)
            throw Error(ErrorKind::AmbiguousDirection, "direction changes between eps levels");
        out.direction = d;
        first = false;
    }
    return out;
}

std::array<EndpointGauss, 2> endpoint_gauss(const SingularComponent& c, const SurfaceParams& p) {
    const int s = c.sign(p);
    // Positive axis: G(a_{2j-1}) = -alpha, G(a_{2j}) = alpha.  Negative: G(b_{2k}) = -beta, G(b_{2k-1}) = beta.
    std::array<EndpointGauss, 2> out{};
    out[0].x = c.lo;
    out[0].expected = -s;
    out[1].x = c.hi;
    out[1].expected = s;
    for (auto& e : out) {
        e.measured = gauss(cplx{e.x, 0.0}, p).G;
        e.ok = !e.measured.infinite && std::abs(e.measured.value - e.expected) <= 1e-8;
    }
    return out;
}

namespace {

using P2 = std::array<double, 2>;

double orient(const P2& a, const P2& b, const P2& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool segments_cross(const P2& a, const P2& b, const P2& c, const P2& d) {
    const double o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

bool polygon_simple(const std::vector<P2>& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;  // adjacent through the wrap
            if (segments_cross(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n]))
                return false;
        }
    return true;
}

bool polygons_disjoint(const std::vector<P2>& a, const std::vector<P2>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (segments_cross(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
                return false;
    return true;
}

double winding(const std::vector<P2>& ring, const P2& o) {
    double total = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const P2& a = ring[i];
        const P2& b = ring[(i + 1) % ring.size()];
        total += std::atan2(orient(o, a, b), (a[0] - o[0]) * (b[0] - o[0]) + (a[1] - o[1]) * (b[1] - o[1]));
    }
    return total / (2.0 * kPi);
}

}  // namespace

NeighborhoodCheck embedded_neighborhood(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                                        const Vec3& apex, const NeighborhoodOptions& opts) {
    const double half = 0.5 * c.length();
    // Confocal ellipses with foci at the endpoints: z = mid + half * cosh(mu + i theta).
    std::array<double, 2> mu{std::asinh(2.0 * opts.ring_widths[0]), std::asinh(2.0 * opts.ring_widths[1])};
    const double reach = 0.5 * outer_gap(c, p);
    if (half * (std::cosh(mu[1]) - 1.0) > reach) {
        const double scale = std::acosh(1.0 + reach / half) / mu[1];
        mu[0] *= scale;
        mu[1] *= scale;
    }
    std::array<std::vector<P2>, 2> rings;
    for (int r = 0; r < 2; ++r) {
        for (int k = 0; k < opts.ring_points; ++k) {
            const double th = 2.0 * kPi * k / opts.ring_points;
            const cplx z{c.midpoint() + half * std::cosh(mu[r]) * std::cos(th), half * std::sinh(mu[r]) * std::sin(th)};
            Vec3 f = immersion(z, p, basepoint, opts.integrator).f;
            // Below a negative-axis interval the continuous sheet sits one period lower in x2.
            if (c.axis == Axis::Negative && z.imag() < 0.0)
                f[1] -= 2.0 * kPi;
            rings[r].push_back({f[0], f[1]});
        }
    }
    const P2 o{apex[0], apex[1]};
    NeighborhoodCheck out;
    out.rings_simple = polygon_simple(rings[0]) && polygon_simple(rings[1]);
    out.rings_disjoint = polygons_disjoint(rings[0], rings[1]);
    out.winds_once = std::abs(std::abs(winding(rings[0], o)) - 1.0) < 1e-6 &&
                     std::abs(std::abs(winding(rings[1], o)) - 1.0) < 1e-6;
    out.pass = out.rings_simple && out.rings_disjoint && out.winds_once;
    return out;
}

ConeReport classify_cone(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                         const ClassifyOptions& opts) {
    ConeReport r;
    r.component = c;
    const ImmersionSample direct = apex_direct(c, p, basepoint, opts.direction.integrator);
    r.apex = direct.f;
    r.apex_error = direct.quad_error;

    const DirectionEstimate d = numeric_direction(c, p, basepoint, opts.direction);
    r.direction = d.direction;
    r.direction_samples = d.samples;
    r.predicted = predicted_direction(c, p);
    r.lemma_statement = lemma_statement_direction(c, p);
    r.matches_prediction = r.direction == r.predicted;
    r.matches_lemma_statement = r.direction == r.lemma_statement;

    r.endpoints = endpoint_gauss(c, p);
    const NondegeneracyReport nd = check_nondegeneracy(c, p, opts.nondegeneracy);
    r.dg_over_gdh_samples = nd.values;
    r.nondegenerate = nd.pass;
    if (opts.neighborhood_check)
        r.embedded_neighborhood_check = embedded_neighborhood(c, p, basepoint, r.apex, opts.neighborhood).pass;
    return r;
}

ApexCheck apex_coincidence(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                           const ApexOptions& opts, int interval_samples) {
    ApexCheck out;
    out.apex = apex_direct(c, p, basepoint, opts.integrator).f;
    bool converged = true;
    const std::array<ApproachSide, 4> sides{ApproachSide::Above, ApproachSide::Below, ApproachSide::Left,
                                            ApproachSide::Right};
    ApexOptions lenient = opts;
    lenient.tolerance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sides.size(); ++i) {
        const ApexEstimate e = apex(c, sides[i], p, basepoint, lenient);
        out.sides[i] = e.value;
        out.residuals[i] = e.error;
        converged = converged && e.error <= opts.tolerance;
        Vec3 d = e.value - out.apex;
        d[1] -= 2.0 * kPi * std::round(d[1] / (2.0 * kPi));
        out.max_side_discrepancy = std::max(out.max_side_discrepancy, max_abs(d));
    }
    for (int i = 1; i <= interval_samples; ++i) {
        const double x = c.lo + c.length() * i / (interval_samples + 1);
        const Vec3 f = immersion(cplx{x, 0.0}, p, basepoint, opts.integrator).f;
        out.max_interval_variation = std::max(out.max_interval_variation, max_abs(f - out.apex));
    }
    out.pass = converged && out.max_side_discrepancy <= opts.tolerance && out.max_interval_variation <= opts.tolerance;
    return out;
}

Vec3 hyperboloid_point(const ExtendedComplex& G) {
    if (G.infinite)
        return {0.0, 0.0, 1.0};
    const double g2 = std::norm(G.value);
    const double den = g2 - 1.0;
    if (std::abs(den) <= 1e-14)
        throw Error(ErrorKind::DegenerateGauss, "|G| = 1 has no point on the hyperboloid");
    return {-2.0 * G.value.real() / den, -2.0 * G.value.imag() / den, (g2 + 1.0) / den};
}

ExtendedComplex stereographic(const Vec3& x) {
    const double q = x[0] * x[0] + x[1] * x[1] - x[2] * x[2];
    if (!(std::abs(q + 1.0) <= 1e-9 * std::max(1.0, x[2] * x[2]))) {
        std::ostringstream os;
        os << "<x, x> = " << q << ", expected -1";
        throw Error(ErrorKind::NotOnHyperboloid, os.str());
    }
    if (x[2] == 1.0)
        return ExtendedComplex::infinity();
    return {cplx{x[0], x[1]} / (1.0 - x[2]), false};
}

}  // namespace maxgraph
