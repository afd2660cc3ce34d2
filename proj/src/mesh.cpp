#include "maxgraph/mesh.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "maxgraph/singular.hpp"
#include "maxgraph/weierstrass.hpp"

namespace maxgraph {

namespace {

double inner_extent(const SurfaceParams& p) {
    double r = p.a(1);
    if (p.n() > 0)
        r = std::min(r, -p.b(1));
    return r;
}

double outer_extent(const SurfaceParams& p) {
    double r = p.a(2 * p.m());
    if (p.n() > 0)
        r = std::max(r, -p.b(2 * p.n()));
    return r;
}

// Runs body(i) for i in [0, count) on a few threads; rethrows the first exception.
template <typename F>
void parallel_for(std::size_t count, F&& body) {
    const unsigned hw = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    const std::size_t workers = std::min<std::size_t>(hw, count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

Displacement integrate_one(const Segment& s, const SurfaceParams& p) {
    return integrate_segments(std::span(&s, 1), p);
}

}  // namespace

GridSpec resolve_grid(const GridSpec& g, const SurfaceParams& p) {
    GridSpec out = g;
    if (out.r_min <= 0.0)
        out.r_min = 0.05 * inner_extent(p);
    if (out.r_max <= 0.0)
        out.r_max = 20.0 * outer_extent(p);
    if (out.radial_samples < 2)
        throw Error(ErrorKind::InvalidArgument, "need at least 2 radial samples");
    if (out.angular_samples < 8)
        throw Error(ErrorKind::InvalidArgument, "need at least 8 angular samples");
    if (out.seam_refinement < 0)
        throw Error(ErrorKind::InvalidArgument, "seam refinement must be nonnegative");
    if (!(out.r_min < inner_extent(p)))
        throw Error(ErrorKind::InvalidArgument, "r_min must lie inside the innermost branch point");
    if (!(out.r_max > outer_extent(p)))
        throw Error(ErrorKind::InvalidArgument, "r_max must lie beyond the outermost branch point");
    return out;
}

std::vector<double> grid_radii(const GridSpec& g, const SurfaceParams& p) {
    const int R = g.radial_samples;
    const double lmin = std::log(g.r_min), lmax = std::log(g.r_max);
    const double step = (lmax - lmin) / (R - 1);
    std::vector<double> radii;
    for (int i = 0; i < R; ++i)
        radii.push_back(i == R - 1 ? g.r_max : std::exp(lmin + step * i));

    // Moduli ranges of the intervals, widened by one base cell.
    std::vector<std::pair<double, double>> bands;
    for (const auto& c : singular_components(p)) {
        const double lo = std::min(std::abs(c.lo), std::abs(c.hi)), hi = std::max(std::abs(c.lo), std::abs(c.hi));
        bands.push_back({lo, hi});
    }
    std::vector<double> extra;
    for (int i = 0; i + 1 < R; ++i) {
        const double l0 = lmin + step * i, l1 = l0 + step;
        bool near = false;
        for (const auto& [lo, hi] : bands)
            near = near || (l0 <= std::log(hi) + step && std::log(lo) - step <= l1);
        if (!near)
            continue;
        for (int k = 1; k <= g.seam_refinement; ++k)
            extra.push_back(std::exp(l0 + step * k / (g.seam_refinement + 1)));
    }
    radii.insert(radii.end(), extra.begin(), extra.end());
    // At least three radii strictly inside every interval.
    for (const auto& [lo, hi] : bands) {
        const auto inside = std::count_if(radii.begin(), radii.end(), [&](double r) { return lo < r && r < hi; });
        if (inside < 3)
            for (int k = 1; k <= 3; ++k)
                radii.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * k / 4.0));
    }
    // Keep radii off the immediate outside of a branch point modulus.
    std::vector<double> moduli;
    for (double c : p.branch_points())
        moduli.push_back(std::abs(c));
    std::erase_if(radii, [&](double r) {
        for (double m : moduli) {
            const double d = std::abs(r - m);
            if (d > 0.0 && d < 1e-6 * m) {
                const bool inside = std::any_of(bands.begin(), bands.end(),
                                                [&](const auto& b) { return b.first <= r && r <= b.second; });
                if (!inside)
                    return true;
            }
        }
        return false;
    });
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(a, b); }),
                radii.end());
    return radii;
}

MeshSamples sample_fundamental(const SurfaceParams& p, const GridSpec& g, double basepoint) {
    check_basepoint(basepoint, p);
    MeshSamples s;
    s.grid = resolve_grid(g, p);
    s.basepoint = basepoint;
    s.radii = grid_radii(s.grid, p);
    const int A = s.grid.angular_samples;
    for (int j = 0; j < A; ++j)
        s.angles.push_back(j == 0 ? 0.0 : (j == A - 1 ? kPi : kPi * j / (A - 1)));
    s.components = singular_components(p);

    const std::size_t R = s.radii.size();
    // f and its error at (r_i, pi/2), chained along the ray from the basepoint's quarter arc.
    std::vector<Displacement> ray(R);
    const Displacement start = integrate_one(ArcSegment{basepoint, 0.0, kPi / 2}, p);
    {
        const auto split = std::lower_bound(s.radii.begin(), s.radii.end(), basepoint) - s.radii.begin();
        Displacement acc = start;
        double prev = basepoint;
        for (std::size_t i = split; i < R; ++i) {
            if (s.radii[i] != prev) {
                const Displacement d = integrate_one(RadialSegment{kPi / 2, prev, s.radii[i]}, p);
                acc.value = acc.value + d.value;
                acc.error += d.error;
            }
            ray[i] = acc;
            prev = s.radii[i];
        }
        acc = start;
        prev = basepoint;
        for (std::size_t i = split; i-- > 0;) {
            const Displacement d = integrate_one(RadialSegment{kPi / 2, prev, s.radii[i]}, p);
            acc.value = acc.value + d.value;
            acc.error += d.error;
            ray[i] = acc;
            prev = s.radii[i];
        }
    }

    s.grid_samples.resize(R * A);
    s.collapsed.assign(R * A, -1);
    s.nu3.assign(R * A, 0.0);
    parallel_for(R, [&](std::size_t i) {
        const double r = s.radii[i];
        auto place = [&](int j, const Displacement& d) {
            cplx z;
            if (j == 0)
                z = {r, 0.0};
            else if (j == A - 1)
                z = {-r, 0.0};
            else
                z = std::polar(r, s.angles[j]);
            const std::size_t idx = s.index(i, j);
            s.grid_samples[idx] = {z, d.value, d.error};
            if (j == 0 || j == A - 1) {
                for (std::size_t k = 0; k < s.components.size(); ++k)
                    if (s.components[k].contains(z.real()))
                        s.collapsed[idx] = static_cast<int>(k);
            }
            if (s.collapsed[idx] < 0)
                s.nu3[idx] = gauss(z, p).nu[2];
        };
        int first_up = 0;
        while (first_up < A && s.angles[first_up] < kPi / 2)
            ++first_up;
        Displacement acc = ray[i];
        double prev = kPi / 2;
        for (int j = first_up; j < A; ++j) {
            if (s.angles[j] != prev) {
                const Displacement d = integrate_one(ArcSegment{r, prev, s.angles[j]}, p);
                acc.value = acc.value + d.value;
                acc.error += d.error;
            }
            place(j, acc);
            prev = s.angles[j];
        }
        acc = ray[i];
        prev = kPi / 2;
        for (int j = first_up - 1; j >= 0; --j) {
            const Displacement d = integrate_one(ArcSegment{r, prev, s.angles[j]}, p);
            acc.value = acc.value + d.value;
            acc.error += d.error;
            place(j, acc);
            prev = s.angles[j];
        }
    });
    for (const auto& q : s.grid_samples)
        s.max_quad_error = std::max(s.max_quad_error, q.quad_error);

    for (const auto& c : s.components) {
        s.apexes.push_back(apex_direct(c, p, basepoint));
        s.directions.push_back(numeric_direction(c, p, basepoint).direction);
    }
    return s;
}

GraphMesh assemble(const MeshSamples& s, const SurfaceParams& p, int copies, const AssembleOptions& opts) {
    (void)p;
    if (copies < 0)
        throw Error(ErrorKind::InvalidArgument, "copies must be nonnegative");
    const std::size_t R = s.radii.size(), A = s.angles.size(), K = s.components.size();
    constexpr std::uint32_t kNone = ~0u;
    GraphMesh mesh;
    mesh.copies = copies;
    mesh.mirror_constant = 0.0;
    const double c2 = 2.0 * mesh.mirror_constant;

    auto add_vertex = [&](const Vec3& v, double nu3, bool apex) {
        mesh.vertices.push_back(v);
        mesh.nu3.push_back(nu3);
        mesh.is_apex.push_back(apex);
        return static_cast<std::uint32_t>(mesh.vertices.size() - 1);
    };

    // Upper sheet.
    std::vector<std::uint32_t> upper(R * A, kNone), mirror(R * A, kNone);
    for (std::size_t idx = 0; idx < R * A; ++idx)
        if (s.collapsed[idx] < 0)
            upper[idx] = add_vertex(s.grid_samples[idx].f, s.nu3[idx], false);
    std::vector<std::uint32_t> apex_id(K), mirror_apex_id(K);
    for (std::size_t k = 0; k < K; ++k)
        apex_id[k] = add_vertex(s.apexes[k].f, 0.0, true);
    for (std::size_t idx = 0; idx < R * A; ++idx) {
        const int k = s.collapsed[idx];
        if (k < 0)
            continue;
        upper[idx] = apex_id[k];
        mesh.weld_residual = std::max(mesh.weld_residual, max_abs(s.grid_samples[idx].f - s.apexes[k].f));
    }
    if (!(mesh.weld_residual <= opts.weld_tolerance)) {
        std::ostringstream os;
        os << "seam samples miss their apex by " << mesh.weld_residual << " (tolerance " << opts.weld_tolerance << ")";
        throw Error(ErrorKind::WeldFailure, os.str());
    }

    // Mirror sheet: (x1, 2c - x2, x3); the theta = 0 row is its fixed locus and stays shared.
    auto reflect = [&](const Vec3& v) { return Vec3{v[0], c2 - v[1], v[2]}; };
    for (std::size_t i = 0; i < R; ++i) {
        mirror[s.index(i, 0)] = upper[s.index(i, 0)];
        for (std::size_t j = 1; j < A; ++j) {
            const std::size_t idx = s.index(i, j);
            if (s.collapsed[idx] < 0) {
                mirror[idx] = add_vertex(reflect(s.grid_samples[idx].f), s.nu3[idx], false);
                mesh.mirror_pairs.push_back({mirror[idx], upper[idx]});
            }
        }
    }
    for (std::size_t k = 0; k < K; ++k) {
        if (s.components[k].axis == Axis::Negative) {
            mirror_apex_id[k] = add_vertex(reflect(s.apexes[k].f), 0.0, true);
            mesh.mirror_pairs.push_back({mirror_apex_id[k], apex_id[k]});
        } else {
            mirror_apex_id[k] = apex_id[k];
        }
    }
    for (std::size_t idx = 0; idx < R * A; ++idx)
        if (s.collapsed[idx] >= 0 && idx % A != 0)
            mirror[idx] = mirror_apex_id[s.collapsed[idx]];

    auto add_triangle = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (a == b || b == c || a == c)
            return;
        mesh.triangles.push_back({a, b, c});
    };
    for (std::size_t i = 0; i + 1 < R; ++i)
        for (std::size_t j = 0; j + 1 < A; ++j) {
            const std::size_t a = s.index(i, j), b = s.index(i + 1, j), c = s.index(i + 1, j + 1),
                              d = s.index(i, j + 1);
            add_triangle(upper[a], upper[b], upper[c]);
            add_triangle(upper[a], upper[c], upper[d]);
            add_triangle(mirror[a], mirror[c], mirror[b]);
            add_triangle(mirror[a], mirror[d], mirror[c]);
        }

    auto row = [&](const std::vector<std::uint32_t>& map, std::size_t j) {
        std::vector<std::uint32_t> out;
        for (std::size_t i = 0; i < R; ++i) {
            const std::uint32_t v = map[s.index(i, j)];
            if (out.empty() || out.back() != v)
                out.push_back(v);
        }
        return out;
    };
    mesh.row_zero = row(upper, 0);
    mesh.row_pi = row(upper, A - 1);
    mesh.row_pi_mirror = row(mirror, A - 1);

    mesh.block_vertices = mesh.vertices.size();
    mesh.block_triangles = mesh.triangles.size();
    for (std::size_t k = 0; k < K; ++k) {
        mesh.cone_vertices.push_back(apex_id[k]);
        mesh.cone_directions.push_back(s.directions[k]);
    }
    const std::size_t cones = mesh.cone_vertices.size();
    for (int copy = 1; copy <= copies; ++copy) {
        const double shift = 2.0 * kPi * copy;
        const auto offset = static_cast<std::uint32_t>(mesh.vertices.size());
        for (std::size_t v = 0; v < mesh.block_vertices; ++v) {
            const Vec3 q = mesh.vertices[v];
            add_vertex({q[0], q[1] + shift, q[2]}, mesh.nu3[v], mesh.is_apex[v]);
        }
        for (std::size_t t = 0; t < mesh.block_triangles; ++t) {
            const auto tri = mesh.triangles[t];
            mesh.triangles.push_back({tri[0] + offset, tri[1] + offset, tri[2] + offset});
        }
        for (std::size_t k = 0; k < cones; ++k) {
            mesh.cone_vertices.push_back(mesh.cone_vertices[k] + offset);
            mesh.cone_directions.push_back(mesh.cone_directions[k]);
        }
    }
    return mesh;
}

namespace {

using P2 = std::array<double, 2>;

struct Tri2 {
    std::array<P2, 3> v;
    double minx, miny, maxx, maxy;
    double diam;
};

Tri2 project(const GraphMesh& mesh, std::size_t t) {
    Tri2 out;
    for (int k = 0; k < 3; ++k) {
        const Vec3& q = mesh.vertices[mesh.triangles[t][k]];
        out.v[k] = {q[0], q[1]};
    }
    out.minx = std::min({out.v[0][0], out.v[1][0], out.v[2][0]});
    out.maxx = std::max({out.v[0][0], out.v[1][0], out.v[2][0]});
    out.miny = std::min({out.v[0][1], out.v[1][1], out.v[2][1]});
    out.maxy = std::max({out.v[0][1], out.v[1][1], out.v[2][1]});
    out.diam = std::max(out.maxx - out.minx, out.maxy - out.miny);
    return out;
}

double signed_area(const Tri2& t) {
    return 0.5 * ((t.v[1][0] - t.v[0][0]) * (t.v[2][1] - t.v[0][1]) -
                  (t.v[1][1] - t.v[0][1]) * (t.v[2][0] - t.v[0][0]));
}

// Separating-axis test; true when the interiors overlap by more than tol.
bool overlap(const Tri2& a, const Tri2& b, double tol) {
    for (const Tri2* t : {&a, &b}) {
        for (int e = 0; e < 3; ++e) {
            const P2& p0 = t->v[e];
            const P2& p1 = t->v[(e + 1) % 3];
            double nx = p0[1] - p1[1], ny = p1[0] - p0[0];
            const double len = std::hypot(nx, ny);
            if (len == 0.0)
                continue;
            nx /= len;
            ny /= len;
            double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
            for (const P2& q : a.v) {
                const double d = q[0] * nx + q[1] * ny;
                amin = std::min(amin, d);
                amax = std::max(amax, d);
            }
            for (const P2& q : b.v) {
                const double d = q[0] * nx + q[1] * ny;
                bmin = std::min(bmin, d);
                bmax = std::max(bmax, d);
            }
            if (std::min(amax, bmax) - std::max(amin, bmin) <= tol)
                return false;
        }
    }
    return true;
}

double pair_tolerance(const Tri2& a, const Tri2& b, double scale) {
    return std::max(1e-9 * std::min(a.diam, b.diam), 1e-13 * scale);
}

}  // namespace

std::size_t brute_force_overlaps(const GraphMesh& mesh) {
    std::vector<Tri2> tris;
    double scale = 0.0;
    for (std::size_t t = 0; t < mesh.block_triangles; ++t) {
        tris.push_back(project(mesh, t));
        scale = std::max({scale, std::abs(tris.back().minx), std::abs(tris.back().maxx), std::abs(tris.back().miny),
                          std::abs(tris.back().maxy)});
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            if (overlap(tris[i], tris[j], pair_tolerance(tris[i], tris[j], scale)))
                ++count;
    return count;
}

bool cone_fans_closed(const GraphMesh& mesh) {
    // Identify the mirror theta = pi row with the upper one (they coincide after a -2 pi shift).
    std::unordered_map<std::uint32_t, std::uint32_t> ident;
    if (mesh.row_pi.size() != mesh.row_pi_mirror.size())
        return false;
    for (std::size_t k = 0; k < mesh.row_pi.size(); ++k) {
        const Vec3 a = mesh.vertices[mesh.row_pi[k]];
        const Vec3 b = mesh.vertices[mesh.row_pi_mirror[k]];
        if (max_abs(Vec3{b[0], b[1] - 2.0 * kPi, b[2]} - a) > 1e-6)
            return false;
        ident[mesh.row_pi_mirror[k]] = mesh.row_pi[k];
    }
    auto canon = [&](std::uint32_t v) {
        auto it = ident.find(v);
        return it == ident.end() ? v : it->second;
    };
    const std::size_t cones_per_copy = mesh.copies >= 0 && !mesh.cone_vertices.empty()
                                           ? mesh.cone_vertices.size() / static_cast<std::size_t>(mesh.copies + 1)
                                           : 0;
    for (std::size_t k = 0; k < cones_per_copy; ++k) {
        const std::uint32_t apex = mesh.cone_vertices[k];
        std::map<std::uint32_t, std::vector<std::uint32_t>> link;
        std::size_t edges = 0;
        for (std::size_t t = 0; t < mesh.block_triangles; ++t) {
            std::array<std::uint32_t, 3> tri;
            for (int q = 0; q < 3; ++q)
                tri[q] = canon(mesh.triangles[t][q]);
            const auto pos = std::find(tri.begin(), tri.end(), apex) - tri.begin();
            if (pos == 3)
                continue;
            const std::uint32_t u = tri[(pos + 1) % 3], v = tri[(pos + 2) % 3];
            link[u].push_back(v);
            link[v].push_back(u);
            ++edges;
        }
        if (link.empty() || edges != link.size())
            return false;
        for (const auto& [v, nb] : link)
            if (nb.size() != 2)
                return false;
        // Connected: walk the cycle.
        std::set<std::uint32_t> seen;
        std::uint32_t prev = link.begin()->first, cur = link.begin()->second[0];
        seen.insert(prev);
        while (seen.insert(cur).second) {
            const auto& nb = link[cur];
            const std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        if (seen.size() != link.size())
            return false;
    }
    return true;
}

GraphCheck graph_check(const GraphMesh& mesh) {
    GraphCheck out;
    out.min_nu3 = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < mesh.block_vertices; ++v)
        if (!mesh.is_apex[v])
            out.min_nu3 = std::min(out.min_nu3, mesh.nu3[v]);
    out.normals_up = out.min_nu3 > 0.0;

    // x1 decreases with |z| along both boundary images.
    auto decreasing = [&](const std::vector<std::uint32_t>& row) {
        for (std::size_t k = 1; k < row.size(); ++k)
            if (!(mesh.vertices[row[k]][0] < mesh.vertices[row[k - 1]][0]))
                return false;
        return true;
    };
    out.row_zero_monotone = decreasing(mesh.row_zero);
    out.row_pi_monotone = decreasing(mesh.row_pi) && decreasing(mesh.row_pi_mirror);

    // Projected triangles: consistent orientation and no interior overlaps (spatial hash).
    std::vector<Tri2> tris;
    tris.reserve(mesh.block_triangles);
    double scale = 0.0, total_diam = 0.0;
    double area_sum = 0.0;
    for (std::size_t t = 0; t < mesh.block_triangles; ++t) {
        tris.push_back(project(mesh, t));
        const Tri2& q = tris.back();
        scale = std::max({scale, std::abs(q.minx), std::abs(q.maxx), std::abs(q.miny), std::abs(q.maxy)});
        total_diam += q.diam;
        area_sum += signed_area(q);
    }
    const double orientation = area_sum >= 0.0 ? 1.0 : -1.0;
    for (const auto& q : tris)
        if (!(orientation * signed_area(q) > 1e-14 * q.diam * q.diam + 1e-300))
            ++out.degenerate_triangles;

    if (!tris.empty()) {
        const double cell = 2.0 * total_diam / static_cast<double>(tris.size());
        double x0 = 1e300, y0 = 1e300;
        for (const auto& q : tris) {
            x0 = std::min(x0, q.minx);
            y0 = std::min(y0, q.miny);
        }
        auto key = [](long long cx, long long cy) { return (cx << 32) ^ (cy & 0xffffffffLL); };
        std::unordered_map<long long, std::vector<std::uint32_t>> buckets;
        auto cell_of = [&](double x, double y) {
            return std::pair<long long, long long>{static_cast<long long>(std::floor((x - x0) / cell)),
                                                   static_cast<long long>(std::floor((y - y0) / cell))};
        };
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto [cx0, cy0] = cell_of(tris[t].minx, tris[t].miny);
            const auto [cx1, cy1] = cell_of(tris[t].maxx, tris[t].maxy);
            for (long long cx = cx0; cx <= cx1; ++cx)
                for (long long cy = cy0; cy <= cy1; ++cy)
                    buckets[key(cx, cy)].push_back(static_cast<std::uint32_t>(t));
        }
        for (const auto& [k, list] : buckets) {
            for (std::size_t a = 0; a < list.size(); ++a)
                for (std::size_t b = a + 1; b < list.size(); ++b) {
                    const Tri2& A = tris[list[a]];
                    const Tri2& B = tris[list[b]];
                    // Test each pair once: in the cell holding the corner of the bbox intersection.
                    const auto [cx, cy] = cell_of(std::max(A.minx, B.minx), std::max(A.miny, B.miny));
                    if (key(cx, cy) != k)
                        continue;
                    if (A.maxx < B.minx || B.maxx < A.minx || A.maxy < B.miny || B.maxy < A.miny)
                        continue;
                    ++out.pairs_tested;
                    if (overlap(A, B, pair_tolerance(A, B, scale)))
                        ++out.overlapping_pairs;
                }
        }
    }
    out.closed_cone_fans = cone_fans_closed(mesh);
    out.pass = out.normals_up && out.row_zero_monotone && out.row_pi_monotone && out.overlapping_pairs == 0 &&
               out.degenerate_triangles == 0 && out.closed_cone_fans;
    return out;
}

std::string obj_string(const GraphMesh& mesh) {
    std::string out;
    char buf[128];
    out += "# maxgraph singly periodic maximal graph\n";
    std::snprintf(buf, sizeof buf, "# vertices %zu\n# triangles %zu\n# copies %d\n", mesh.vertices.size(),
                  mesh.triangles.size(), mesh.copies);
    out += buf;
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "v %.9f %.9f %.9f\n", v[0], v[1], v[2]);
        out += buf;
    }
    for (std::size_t k = 0; k < mesh.cone_vertices.size(); ++k) {
        std::snprintf(buf, sizeof buf, "# cone %u %s\n", mesh.cone_vertices[k] + 1, to_string(mesh.cone_directions[k]));
        out += buf;
    }
    for (const auto& t : mesh.triangles) {
        std::snprintf(buf, sizeof buf, "f %u %u %u\n", t[0] + 1, t[1] + 1, t[2] + 1);
        out += buf;
    }
    return out;
}

void export_obj(const GraphMesh& mesh, const std::string& path) { write_file_atomic(path, obj_string(mesh)); }

namespace {

template <typename T>
void put_le(std::string& out, T value) {
    auto bytes = std::bit_cast<std::array<char, sizeof(T)>>(value);
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    out.append(bytes.data(), bytes.size());
}

}  // namespace

void export_ply(const GraphMesh& mesh, const std::string& path) {
    std::ostringstream header;
    header << "ply\nformat binary_little_endian 1.0\n"
           << "element vertex " << mesh.vertices.size() << "\n"
           << "property double x\nproperty double y\nproperty double z\n"
           << "element face " << mesh.triangles.size() << "\n"
           << "property list uchar uint vertex_indices\nend_header\n";
    std::string out = header.str();
    for (const auto& v : mesh.vertices)
        for (double c : v)
            put_le(out, c);
    for (const auto& t : mesh.triangles) {
        out.push_back(static_cast<char>(3));
        for (std::uint32_t i : t)
            put_le(out, i);
    }
    write_file_atomic(path, out);
}

void write_file_atomic(const std::string& path, const std::string& data) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw Error(ErrorKind::IOFailure, "cannot open " + tmp.string() + " for writing");
        f.write(data.data(), static_cast<std::streamsize>(data.size()));
        f.flush();
        if (!f)
            throw Error(ErrorKind::IOFailure, "write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorKind::IOFailure, "cannot move output into place at " + path);
    }
}

}  // namespace maxgraph
