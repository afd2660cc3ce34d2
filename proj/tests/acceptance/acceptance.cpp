// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [--nine-stride K]   (K = 1 checks every nine-cone class)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "maxgraph/catalog.hpp"
#include "maxgraph/integrator.hpp"
#include "maxgraph/mesh.hpp"
#include "maxgraph/minimal.hpp"
#include "maxgraph/report.hpp"
#include "maxgraph/singular.hpp"
#include "maxgraph/weierstrass.hpp"
#include "unit/fixtures.hpp"

using namespace maxgraph;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* id, const char* name, bool pass, const std::string& detail) {
    std::printf("%s [%s] %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Every canonical class with m + n <= 4.
std::vector<SurfaceParams> small_classes() {
    std::vector<SurfaceParams> out;
    for (int total = 1; total <= 4; ++total)
        for (const auto& [m, n] : enumerate_types(total))
            for (const auto& c : catalog_classes(m, n))
                out.push_back(instantiate(c.representative));
    return out;
}

std::string type_name(const SurfaceParams& p) { return fmt("(%d,%d)", p.m(), p.n()); }

}  // namespace

int main(int argc, char** argv) {
    int nine_stride = 9;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--nine-stride") == 0)
            nine_stride = std::max(1, std::atoi(argv[i + 1]));

    const std::vector<SurfaceParams> randoms = fixtures::spread(2718);
    const std::vector<SurfaceParams> classes = small_classes();
    std::vector<SurfaceParams> tested = randoms;
    tested.insert(tested.end(), classes.begin(), classes.end());

    // 1. Periods at the ends.
    {
        const auto t0 = Clock::now();
        double worst = 0.0;
        for (const auto& p : randoms) {
            worst = std::max(worst, max_abs(loop_period(LoopCenter::Zero, p).v - Vec3{0.0, -2.0 * kPi, 0.0}));
            worst = std::max(worst, max_abs(loop_period(LoopCenter::Infinity, p).v - Vec3{0.0, 2.0 * kPi, 0.0}));
        }
        const double t = seconds_since(t0);
        report("1", "period reproduction", worst <= 1e-8 && t < 5.0,
               fmt("10 configurations (1,0)..(3,2), max deviation %.2e (tol 1e-8), %.3f s (limit 5 s)", worst, t));
    }

    // 2. Conformality.
    {
        const auto t0 = Clock::now();
        std::mt19937_64 rng(1);
        std::uniform_real_distribution<double> u(-6.0, 6.0);
        double worst = 0.0;
        long points = 0;
        for (const auto& p : randoms)
            for (int k = 0; k < 1000; ++k) {
                cplx z{u(rng), u(rng)};
                if (std::abs(z.imag()) < 1e-6)
                    z += cplx{0.0, 1e-3};
                const FormTriple f = phi(z, p);
                const double scale = std::norm(f.phi1) + std::norm(f.phi2) + std::norm(f.phi3);
                worst = std::max(worst, std::abs(f.phi1 * f.phi1 + f.phi2 * f.phi2 - f.phi3 * f.phi3) / scale);
                ++points;
            }
        const double t = seconds_since(t0);
        report("2", "conformality", worst <= 1e-12 && t < 1.0,
               fmt("%ld points, max relative residual %.2e (tol 1e-12), %.3f s (limit 1 s)", points, worst, t));
    }

    // 3. Singular set.
    {
        bool ok = true;
        int hits = 0;
        double dev = 0.0;
        for (const auto& p : tested) {
            const SingularSetCheck c = check_singular_set(p);
            ok = ok && c.pass;
            hits += c.off_hits;
            dev = std::max(dev, c.max_interval_deviation);
        }
        report("3", "singular-set identity", ok && hits == 0,
               fmt("%zu configurations, max ||G|-1| on intervals %.2e (tol 1e-10), off-set hits %d", tested.size(), dev,
                   hits));
    }

    // 4. Cone points.
    {
        double side = 0.0, along = 0.0;
        int intervals = 0;
        bool ok = true;
        for (const auto& p : tested)
            for (const auto& c : singular_components(p)) {
                const ApexCheck a = apex_coincidence(c, p, default_basepoint(p));
                side = std::max(side, a.max_side_discrepancy);
                along = std::max(along, a.max_interval_variation);
                ok = ok && a.pass;
                ++intervals;
            }
        report("4", "cone-point property", ok && side <= 1e-6 && along <= 1e-6,
               fmt("%d intervals, max side discrepancy %.2e, max variation along interval %.2e (tol 1e-6)", intervals,
                   side, along));
    }

    // 5. Direction table.
    {
        int cones = 0, theorem = 0, lemma = 0;
        for (const auto& p : classes)
            for (const auto& c : singular_components(p)) {
                const ConeDirection d = numeric_direction(c, p, default_basepoint(p)).direction;
                theorem += d == predicted_direction(c, p);
                lemma += d == lemma_statement_direction(c, p);
                ++cones;
            }
        report("5", "direction table", theorem == cones,
               fmt("%zu classes, %d cones: %d match the theorem table, %d match the lemma statement", classes.size(),
                   cones, theorem, lemma));
    }

    // 6. Enumeration counts.
    {
        const auto four = catalog_json(4);
        std::vector<int> counts;
        for (const auto& t : four["types"])
            counts.push_back(t["count"]);
        const auto nine = enumerate_types(9);
        const bool ok = counts == std::vector<int>{6, 6, 5} && four["total"] == 17 && nine.size() == 5;
        report("6", "enumeration counts", ok,
               fmt("four cones %d/%d/%d total %d, nine cones %zu types", counts.size() > 0 ? counts[0] : -1,
                   counts.size() > 1 ? counts[1] : -1, counts.size() > 2 ? counts[2] : -1, four["total"].get<int>(),
                   nine.size()));
    }

    // 7 and 8. Graph property and the f2 identity on default grids.
    {
        int graph_ok = 0;
        double f2 = 0.0, slowest = 0.0;
        bool f2_ok = true;
        std::string failed;
        for (const auto& p : classes) {
            const auto t0 = Clock::now();
            VerifyConfig cfg;
            cfg.raw = p.raw();
            const VerificationResult r = verify(p, cfg, true);
            const double t = seconds_since(t0);
            slowest = std::max(slowest, t);
            const auto& g = r.report["checks"]["graph"];
            const auto& f = r.report["checks"]["f2_identity"];
            if (g.value("pass", false) && t < 30.0)
                ++graph_ok;
            else
                failed += " " + type_name(p);
            f2_ok = f2_ok && f.value("pass", false);
            if (f.contains("max_deviation"))
                f2 = std::max(f2, f["max_deviation"].get<double>());
        }
        report("7", "graph property", graph_ok == static_cast<int>(classes.size()),
               fmt("%d/%zu classes pass on the 200x100 grid, slowest %.2f s (limit 30 s)%s", graph_ok, classes.size(),
                   slowest, failed.c_str()));
        report("8", "f2 identity", f2_ok && f2 <= 1e-10,
               fmt("max |f2 + Arg z - c| %.2e over all mesh samples (tol 1e-10)", f2));
    }

    // 9. Horizontal end.
    {
        const SurfaceParams mixed = fixtures::two_one();
        double worst = 0.0;
        int feasible = 0;
        for (Axis axis : {Axis::Positive, Axis::Negative})
            for (int i = 1; i <= (axis == Axis::Positive ? 4 : 2); ++i) {
                try {
                    worst = std::max(worst, std::abs(end_value_w0(normalize_horizontal_end(mixed, {axis, i})) - 1.0));
                    ++feasible;
                } catch (const Error&) {
                }
            }
        int same = 0, infeasible = 0;
        for (const auto& p : classes) {
            if (!all_cones_same_direction(p))
                continue;
            ++same;
            bool all_infeasible = true;
            for (Axis axis : {Axis::Positive, Axis::Negative})
                for (int i = 1; i <= 2 * (axis == Axis::Positive ? p.m() : p.n()); ++i) {
                    try {
                        normalize_horizontal_end(p, {axis, i});
                        all_infeasible = false;
                    } catch (const Error& e) {
                        all_infeasible = all_infeasible && e.kind() == ErrorKind::Infeasible;
                    }
                }
            infeasible += all_infeasible;
        }
        report("9", "horizontal-end normalization", feasible > 0 && worst <= 1e-12 && same > 0 && infeasible == same,
               fmt("mixed (2,1): %d coordinates solve, max |w(0)-1| %.2e (tol 1e-12); all-same instances %d/%d Infeasible",
                   feasible, worst, infeasible, same));
    }

    // 10. Minimal counterpart.
    {
        double g0 = 0.0, ident = 0.0, loops = 0.0;
        const std::vector<RawParams> raws{{1, 1, {1, 2}, {-1}, {1}, {1}},
                                          {2, 1, {1, 2, 3, 4}, {-1}, {1, 1}, {1}},
                                          {2, 2, {1, 1.5, 2, 3}, {-1, -2, -3}, {1, 1}, {1, 1}}};
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        for (const auto& raw : raws) {
            const SurfaceParams p = b2n_normalize(raw);
            g0 = std::max(g0, std::abs(end_value_w0(p) - 1.0));
            const MinimalData h{p, EndOrientation::Horizontal}, v{p, EndOrientation::Vertical};
            for (int k = 0; k < 1000; ++k) {
                const cplx z{u(rng), u(rng)};
                const CVec3 om = omega(z, h);
                const FormTriple f = phi(z, p);
                const cplx I{0.0, 1.0};
                const double s = std::abs(f.phi1) + std::abs(f.phi2) + std::abs(f.phi3);
                ident = std::max({ident, std::abs(f.phi1 - I * om[0]) / s, std::abs(f.phi2 - I * om[1]) / s,
                                  std::abs(f.phi3 - om[2]) / s});
            }
            const double x = p.a(2 * p.m()) + 1.0;
            for (const MinimalData* d : {&h, &v}) {
                loops = std::max(loops, max_abs(measure_period(PathSpec{{{x, 1.0}, {x + 1.0, 1.0}, {x + 1.0, 2.0}, {x, 2.0}, {x, 1.0}}}, *d).v));
                const double m = p.a(1) + 0.25 * (p.a(2) - p.a(1)), M = p.a(2) - 0.25 * (p.a(2) - p.a(1));
                loops = std::max(loops, max_abs(measure_period(PathSpec{{{m, -0.2}, {M, -0.2}, {M, 0.2}, {m, 0.2}, {m, -0.2}}}, *d).v));
            }
        }
        report("10", "minimal counterpart", g0 <= 1e-12 && ident <= 1e-14 && loops <= 1e-8,
               fmt("|G(0)-1| %.2e (tol 1e-12), rotated-triple identity %.2e relative (tol 1e-14), contractible loops %.2e (tol 1e-8)",
                   g0, ident, loops));
    }

    // 11. Nondegeneracy.
    {
        double imag = 0.0, least = 1e300;
        bool ok = true;
        int intervals = 0;
        for (const auto& p : tested)
            for (const auto& c : singular_components(p)) {
                const NondegeneracyReport r = check_nondegeneracy(c, p);
                imag = std::max(imag, r.max_relative_imag);
                least = std::min(least, r.min_abs_value);
                ok = ok && r.pass;
                ++intervals;
            }
        report("11", "nondegeneracy", ok && imag <= 1e-8,
               fmt("%d intervals, max relative imaginary part %.2e (tol 1e-8), min |dG/(G dh)| %.3e", intervals, imag,
                   least));
    }

    // Nine cones: (8,1) and (7,2) build, verify and export with nine tagged cones.
    {
        const auto dir = std::filesystem::temp_directory_path() / "maxgraph_acceptance";
        std::filesystem::create_directories(dir);
        int built = 0, ok = 0;
        double slowest = 0.0;
        std::string failed;
        for (const auto& [m, n] : {std::pair{8, 1}, std::pair{7, 2}}) {
            const auto cls = catalog_classes(m, n);
            for (std::size_t k = 0; k < cls.size(); ++k) {
                if (k % nine_stride != 0 && k + 1 != cls.size())
                    continue;
                const auto t0 = Clock::now();
                const SurfaceParams p = instantiate(cls[k].representative);
                VerifyConfig cfg;
                cfg.raw = p.raw();
                const VerificationResult r = verify(p, cfg, true);
                bool good = r.pass && r.mesh && r.mesh->cone_vertices.size() == 9;
                if (r.mesh) {
                    const auto path = dir / "nine.obj";
                    export_obj(*r.mesh, path.string());
                    std::ifstream in(path);
                    std::string line;
                    int tags = 0;
                    while (std::getline(in, line))
                        tags += line.rfind("# cone ", 0) == 0;
                    good = good && tags == 9;
                }
                slowest = std::max(slowest, seconds_since(t0));
                ++built;
                if (good)
                    ++ok;
                else
                    failed += fmt(" (%d,%d)#%zu", m, n, k + 1);
            }
        }
        std::filesystem::remove_all(dir);
        report("9c", "nine-cone meshes", ok == built && built > 0,
               fmt("%d/%d classes of (8,1) and (7,2) verify under checks 1-8 with 9 tagged cones (every %d-th class), slowest %.2f s%s",
                   ok, built, nine_stride, slowest, failed.c_str()));
    }

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
