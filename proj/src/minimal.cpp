#include "maxgraph/minimal.hpp"

#include <sstream>

#include "maxgraph/components.hpp"
#include "maxgraph/quadrature.hpp"
#include "maxgraph/weierstrass.hpp"

namespace maxgraph {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx sheet_w(cplx z, const SurfaceParams& p, int sheet) {
    const ExtendedComplex w = branch_w(z, p).w;
    if (w.infinite || w.is_zero())
        throw Error(ErrorKind::BranchPointEvaluation, "w is 0 or infinite at this point");
    return static_cast<double>(sheet) * w.value;
}

}  // namespace

const char* to_string(EndOrientation o) { return o == EndOrientation::Vertical ? "vertical" : "horizontal"; }

MinimalWeierstrass minimal_weierstrass(cplx z, const MinimalData& d, int sheet) {
    if (z == cplx{})
        throw Error(ErrorKind::BranchPointEvaluation, "z = 0 is an end");
    const cplx w = sheet_w(z, d.params, sheet);
    if (d.orientation == EndOrientation::Vertical)
        return {{w, false}, 1.0 / z};
    const cplx dh = 0.5 * (1.0 / w - w) / z;
    if (w == cplx{1.0, 0.0})
        return {ExtendedComplex::infinity(), dh};
    return {{kI * (w + 1.0) / (w - 1.0), false}, dh};
}

CVec3 omega(cplx z, const MinimalData& d, int sheet) {
    const MinimalWeierstrass m = minimal_weierstrass(z, d, sheet);
    if (m.G.infinite || m.G.is_zero()) {
        // G has a pole or zero exactly where dh has the matching zero; use the reduced forms.
        const cplx w = sheet_w(z, d.params, sheet);
        if (d.orientation == EndOrientation::Vertical)
            return {0.5 * (1.0 / w - w) / z, 0.5 * kI * (1.0 / w + w) / z, 1.0 / z};
        return {0.5 * kI * (1.0 / w + w) / z, 1.0 / z, 0.5 * (1.0 / w - w) / z};
    }
    const cplx G = m.G.value;
    return {0.5 * (1.0 / G - G) * m.dh, 0.5 * kI * (1.0 / G + G) * m.dh, m.dh};
}

SurfaceParams b2n_normalize(const RawParams& raw_in) {
    RawParams raw = raw_in;
    if (raw.n < 1)
        throw Error(ErrorKind::InvalidArgument, "b_2n normalization needs n >= 1");
    for (int s : raw.alpha)
        if (s != 1)
            throw Error(ErrorKind::InvalidArgument, "b_2n normalization assumes every alpha = +1");
    for (int s : raw.beta)
        if (s != 1)
            throw Error(ErrorKind::InvalidArgument, "b_2n normalization assumes every beta = +1");
    const auto want = static_cast<std::size_t>(2 * raw.n);
    if (raw.b.size() + 1 == want)
        raw.b.push_back(0.0);
    if (raw.b.size() != want || raw.a.size() != static_cast<std::size_t>(2 * raw.m))
        throw Error(ErrorKind::LengthMismatch, "branch point lists do not match (m, n)");

    double factor = 1.0;
    for (int k = 1; k <= raw.m; ++k)
        factor *= raw.a[2 * k - 1] / raw.a[2 * k - 2];
    for (int k = 1; k < raw.n; ++k)
        factor *= raw.b[2 * k - 2] / raw.b[2 * k - 1];
    const double b_prev = raw.b[want - 2];
    const double value = factor * b_prev;
    if (!(value < b_prev)) {
        std::ostringstream os;
        os << "solved b_" << want << " = " << value << " is not below b_" << want - 1 << " = " << b_prev;
        throw Error(ErrorKind::OrderingInfeasible, os.str());
    }
    raw.b[want - 1] = value;
    return SurfaceParams::validate(raw);
}

LoopMeasurement measure_period(const PathSpec& loop, const MinimalData& d, const MeasureOptions& opts) {
    const SurfaceParams& p = d.params;
    const auto& wp = loop.waypoints;
    if (wp.size() < 4 || wp.front() != wp.back())
        throw Error(ErrorKind::InvalidArgument, "a loop needs at least three distinct waypoints and must close");
    auto special = p.branch_points();
    special.push_back(0.0);
    const double scale = 1.0 + std::abs(special.front()) + std::abs(special.back());
    for (const cplx& z : wp) {
        for (double c : special)
            if (std::abs(z - c) <= 1e-12 * scale)
                throw Error(ErrorKind::PathThroughSingularity, "waypoint at 0 or a branch point");
        if (z.imag() == 0.0 && on_singular_set(z.real(), p))
            throw Error(ErrorKind::PathThroughSingularity, "waypoint on a branch cut");
    }

    LoopMeasurement out;
    int sheet = 1;
    const QuadratureOptions q{opts.abs_tol, opts.max_depth};
    auto integrate_line = [&](cplx from, cplx to) {
        const cplx dz = to - from;
        const int s = sheet;
        const auto r = integrate_adaptive(
            [&](double t) {
                CVec3 v = omega(from + t * dz, d, s);
                for (auto& c : v)
                    c *= dz;
                return v;
            },
            0.0, 1.0, q);
        for (int i = 0; i < 3; ++i)
            out.v[i] += r.value[i].real();
        out.error += r.error;
    };

    for (std::size_t i = 1; i < wp.size(); ++i) {
        const cplx from = wp[i - 1], to = wp[i];
        const cplx dz = to - from;
        if (dz == cplx{})
            continue;
        for (double c : special) {
            const double t = ((cplx{c, 0.0} - from) * std::conj(dz)).real() / std::norm(dz);
            if (t > 0.0 && t < 1.0 && std::abs(from + t * dz - c) <= 1e-12 * scale)
                throw Error(ErrorKind::PathThroughSingularity, "segment passes through 0 or a branch point");
        }
        if (from.imag() == 0.0 && to.imag() == 0.0) {
            const double lo = std::min(from.real(), to.real()), hi = std::max(from.real(), to.real());
            for (const auto& c : singular_components(p))
                if (lo < c.hi && c.lo < hi)
                    throw Error(ErrorKind::PathThroughSingularity, "segment runs along a branch cut");
            integrate_line(from, to);
            continue;
        }
        const bool crosses = (from.imag() < 0.0 && to.imag() > 0.0) || (from.imag() > 0.0 && to.imag() < 0.0);
        if (crosses) {
            const double t = -from.imag() / dz.imag();
            const cplx x{(from + t * dz).real(), 0.0};
            if (on_singular_set(x.real(), p)) {
                integrate_line(from, x);
                sheet = -sheet;
                ++out.crossings;
                integrate_line(x, to);
                continue;
            }
        }
        integrate_line(from, to);
    }
    if (out.crossings % 2 != 0) {
        std::ostringstream os;
        os << "loop crosses the branch cuts " << out.crossings << " times and does not close on the curve";
        throw Error(ErrorKind::NotClosedOnCurve, os.str());
    }
    out.horizontal = std::abs(out.v[2]) <= opts.horizontal_tolerance;
    return out;
}

std::vector<std::pair<std::string, PathSpec>> standard_loops(const SurfaceParams& p) {
    std::vector<std::pair<std::string, PathSpec>> out;
    auto square = [](double s, bool clockwise) {
        std::vector<cplx> v{{s, 0.0}, {s, s}, {-s, s}, {-s, -s}, {s, -s}, {s, 0.0}};
        if (clockwise)
            std::reverse(v.begin(), v.end());
        return PathSpec{v, 0.0};
    };
    double inner = p.a(1), outer = p.a(2 * p.m());
    if (p.n() > 0) {
        inner = std::min(inner, -p.b(1));
        outer = std::max(outer, -p.b(2 * p.n()));
    }
    out.push_back({"around z = 0", square(0.5 * inner, false)});
    for (const auto& c : singular_components(p)) {
        const double g = 0.5 * outer_gap(c, p);
        const double h = 0.5 * c.length();
        const double l = c.lo - g, r = c.hi + g;
        std::ostringstream name;
        name << "around [" << c.lo << ", " << c.hi << "]";
        out.push_back({name.str(), PathSpec{{{r, 0.0}, {r, h}, {l, h}, {l, 0.0}, {l, -h}, {r, -h}, {r, 0.0}}, 0.0}});
    }
    out.push_back({"around infinity", square(2.0 * outer, true)});
    return out;
}

PeriodLattice measure_lattice(const MinimalData& d, const MeasureOptions& opts) {
    PeriodLattice lattice;
    lattice.genus = d.params.m() + d.params.n() - 1;
    for (const auto& [name, loop] : standard_loops(d.params)) {
        LoopMeasurement m = measure_period(loop, d, opts);
        m.description = name;
        lattice.measured_loops.push_back(m);
    }
    return lattice;
}

nlohmann::json to_json(const PeriodLattice& lattice) {
    nlohmann::json loops = nlohmann::json::array();
    for (const auto& m : lattice.measured_loops)
        loops.push_back({{"loop", m.description},
                         {"period", {m.v[0], m.v[1], m.v[2]}},
                         {"quadrature_error", m.error},
                         {"cut_crossings", m.crossings},
                         {"horizontal", m.horizontal}});
    return {{"genus", lattice.genus}, {"ends", lattice.ends}, {"measured_loops", loops}};
}

}  // namespace maxgraph
