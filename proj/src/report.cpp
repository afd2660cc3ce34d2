#include "maxgraph/report.hpp"

#include <chrono>
#include <ctime>
#include <random>
#include <regex>

#include "maxgraph/singular.hpp"
#include "maxgraph/weierstrass.hpp"

namespace maxgraph {

using nlohmann::json;

namespace {

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json complex_json(const ExtendedComplex& z) {
    if (z.infinite)
        return "infinity";
    return json::array({z.value.real(), z.value.imag()});
}

// Regular points for the pointwise checks: random in a box, kept off the real axis and away from 0.
std::vector<cplx> random_points(const SurfaceParams& p, int count) {
    double outer = p.a(2 * p.m());
    if (p.n() > 0)
        outer = std::max(outer, -p.b(2 * p.n()));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0 * outer, 2.0 * outer);
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < count) {
        const cplx z{u(rng), u(rng)};
        if (std::abs(z.imag()) < 1e-6 || std::abs(z) < 1e-6)
            continue;
        out.push_back(z);
    }
    return out;
}

// Runs a check body; exceptions become a failed entry carrying the message.
template <typename F>
json run_check(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {{"pass", false}, {"error", e.what()}, {"error_kind", to_string(e.kind())}};
    }
}

json check_conformality(const SurfaceParams& p, const std::vector<cplx>& pts, const ToleranceLadder& tol) {
    double worst = 0.0;
    for (const cplx& z : pts) {
        const FormTriple f = phi(z, p);
        const cplx q = f.phi1 * f.phi1 + f.phi2 * f.phi2 - f.phi3 * f.phi3;
        const double scale = std::norm(f.phi1) + std::norm(f.phi2) + std::norm(f.phi3);
        worst = std::max(worst, std::abs(q) / scale);
    }
    return {{"pass", worst <= tol.conformality}, {"max_relative_residual", worst}, {"points", pts.size()},
            {"tolerance", tol.conformality}};
}

json check_branch(const SurfaceParams& p, const std::vector<cplx>& pts) {
    double worst_square = 0.0, worst_step = 0.0, min_re = std::numeric_limits<double>::infinity();
    for (const cplx& z : pts) {
        const ExtendedComplex w2 = w_squared(z, p);
        const cplx w = branch_w(z, p).w.value;
        min_re = std::min(min_re, w.real());
        worst_square = std::max(worst_square, std::abs(w * w - w2.value) / std::abs(w2.value));
        // A step parallel to the real axis never crosses a cut, so the first-order prediction holds
        // up to O(h^2); a sheet jump would show up as a defect of order 2.
        const double h = 1e-6 * std::abs(z.imag());
        const cplx next = branch_w(z + h, p).w.value;
        const cplx predicted = w + 0.5 * w * log_derivative_w2(z, p) * h;
        worst_step = std::max(worst_step, std::abs(next - predicted) / std::abs(w));
    }
    const bool pass = min_re >= 0.0 && worst_square <= 1e-13 && worst_step <= 1e-6;
    return {{"pass", pass},
            {"min_re_w", min_re},
            {"max_square_residual", worst_square},
            {"max_relative_step_defect", worst_step},
            {"points", pts.size()}};
}

json check_gauss_modulus(const SurfaceParams& p, const std::vector<cplx>& pts) {
    double min_excess = std::numeric_limits<double>::infinity(), min_nu3 = std::numeric_limits<double>::infinity();
    for (const cplx& z : pts) {
        const GaussValue g = gauss(z, p);
        if (!g.G.infinite)
            min_excess = std::min(min_excess, std::abs(g.G.value) - 1.0);
        min_nu3 = std::min(min_nu3, g.nu[2]);
    }
    return {{"pass", min_excess > 0.0 && min_nu3 > 0.0},
            {"min_modulus_minus_one", min_excess},
            {"min_nu3", min_nu3},
            {"points", pts.size()}};
}

json check_singular(const SurfaceParams& p, const ToleranceLadder& tol) {
    SingularSetOptions o;
    o.tolerance = tol.singular_set;
    const SingularSetCheck c = check_singular_set(p, o);
    json comps = json::array();
    for (std::size_t i = 0; i < c.components.size(); ++i)
        comps.push_back({{"interval", {c.components[i].lo, c.components[i].hi}},
                         {"axis", c.components[i].axis == Axis::Positive ? "positive" : "negative"},
                         {"index", c.components[i].index},
                         {"w2_one_to_one", static_cast<bool>(c.one_to_one[i])}});
    return {{"pass", c.pass},
            {"components", comps},
            {"count", c.components.size()},
            {"max_interval_deviation", c.max_interval_deviation},
            {"min_off_set_margin", c.min_off_margin},
            {"off_set_hits", c.off_hits},
            {"samples", c.samples_checked},
            {"tolerance", tol.singular_set}};
}

json check_apexes(const SurfaceParams& p, double x0, const ToleranceLadder& tol) {
    ApexOptions o;
    o.tolerance = tol.apex;
    bool pass = true;
    json list = json::array();
    for (const auto& c : singular_components(p)) {
        list.push_back(run_check([&]() -> json {
            const ApexCheck a = apex_coincidence(c, p, x0, o);
            pass = pass && a.pass;
            json sides = json::object();
            const char* names[] = {"above", "below", "left", "right"};
            for (int i = 0; i < 4; ++i)
                sides[names[i]] = {{"limit", vec_json(a.sides[i])}, {"residual", a.residuals[i]}};
            return {{"pass", a.pass},
                    {"interval", {c.lo, c.hi}},
                    {"apex", vec_json(a.apex)},
                    {"sides", sides},
                    {"max_side_discrepancy", a.max_side_discrepancy},
                    {"max_interval_variation", a.max_interval_variation}};
        }));
        pass = pass && list.back()["pass"].get<bool>();
    }
    return {{"pass", pass}, {"components", list}, {"tolerance", tol.apex},
            {"note", "negative-axis limits are compared modulo the period (0, 2 pi, 0)"}};
}

json check_cones(const SurfaceParams& p, double x0, bool& nondeg_pass, json& nondeg) {
    bool pass = true;
    nondeg_pass = true;
    json list = json::array();
    nondeg = json::array();
    for (const auto& c : singular_components(p)) {
        list.push_back(run_check([&]() -> json {
            const ConeReport r = classify_cone(c, p, x0);
            json samples = json::array();
            for (const auto& s : r.direction_samples)
                samples.push_back({{"eps", s.eps}, {"x3_left", s.x3_left}, {"x3_right", s.x3_right}});
            json ends = json::array();
            for (const auto& e : r.endpoints)
                ends.push_back({{"x", e.x}, {"expected", e.expected}, {"G", complex_json(e.measured)}, {"ok", e.ok}});
            const bool ok = r.matches_prediction && r.endpoints[0].ok && r.endpoints[1].ok;
            return {{"pass", ok},
                    {"interval", {c.lo, c.hi}},
                    {"sign", c.sign(p)},
                    {"apex", vec_json(r.apex)},
                    {"numeric", to_string(r.direction)},
                    {"theorem_convention", to_string(r.predicted)},
                    {"lemma_statement_convention", to_string(r.lemma_statement)},
                    {"matches_theorem_convention", r.matches_prediction},
                    {"matches_lemma_statement_convention", r.matches_lemma_statement},
                    {"samples", samples},
                    {"endpoint_gauss", ends},
                    {"embedded_neighborhood_proxy", r.embedded_neighborhood_check}};
        }));
        pass = pass && list.back()["pass"].get<bool>();

        nondeg.push_back(run_check([&]() -> json {
            const NondegeneracyReport n = check_nondegeneracy(c, p);
            return {{"pass", n.pass},
                    {"interval", {c.lo, c.hi}},
                    {"dg_over_g_dh", n.values},
                    {"max_relative_imag", n.max_relative_imag},
                    {"min_abs", n.min_abs_value},
                    {"min_abs_dh_over_g", n.min_abs_dh_over_g},
                    {"gauss_injective", n.gauss_injective}};
        }));
        nondeg_pass = nondeg_pass && nondeg.back()["pass"].get<bool>();
    }
    return {{"pass", pass}, {"components", list}};
}

json check_periods(const SurfaceParams& p, const ToleranceLadder& tol) {
    const PeriodVector z = loop_period(LoopCenter::Zero, p);
    const PeriodVector i = loop_period(LoopCenter::Infinity, p);
    const double ez = max_abs(z.v - Vec3{0.0, -2.0 * kPi, 0.0});
    const double ei = max_abs(i.v - Vec3{0.0, 2.0 * kPi, 0.0});
    return {{"pass", ez <= tol.period && ei <= tol.period},
            {"zero", {{"period", vec_json(z.v)}, {"radius", z.radius}, {"deviation", ez}, {"quadrature_error", z.error}}},
            {"infinity",
             {{"period", vec_json(i.v)}, {"radius", i.radius}, {"deviation", ei}, {"quadrature_error", i.error}}},
            {"expected_zero", vec_json({0.0, -2.0 * kPi, 0.0})},
            {"expected_infinity", vec_json({0.0, 2.0 * kPi, 0.0})},
            {"tolerance", tol.period}};
}

json check_symmetry(const SurfaceParams& p, double x0, const std::vector<cplx>& pts, const GraphMesh* mesh,
                    const ToleranceLadder& tol) {
    double worst = 0.0;
    const std::size_t count = std::min<std::size_t>(pts.size(), 32);
    for (std::size_t k = 0; k < count; ++k) {
        const cplx z{pts[k].real(), std::abs(pts[k].imag())};
        const Vec3 up = immersion(z, p, x0).f;
        const Vec3 down = immersion(std::conj(z), p, x0).f;
        worst = std::max(worst, max_abs(down - Vec3{up[0], -up[1], up[2]}));
    }
    json out = {{"reflection_points", count}, {"max_reflection_defect", worst}, {"tolerance", tol.symmetry}};
    bool pass = worst <= tol.symmetry;
    if (mesh) {
        double mesh_defect = 0.0;
        const double c2 = 2.0 * mesh->mirror_constant;
        for (const auto& [m, u] : mesh->mirror_pairs) {
            const Vec3& a = mesh->vertices[m];
            const Vec3& b = mesh->vertices[u];
            mesh_defect = std::max(mesh_defect, max_abs(a - Vec3{b[0], c2 - b[1], b[2]}));
        }
        out["mesh_mirror_defect"] = mesh_defect;
        pass = pass && mesh_defect <= 1e-6;
    }
    out["pass"] = pass;
    return out;
}

json check_end_direction(const SurfaceParams& p, double x0) {
    const double w0 = end_value_w0(p);
    double inner = p.a(1);
    if (p.n() > 0)
        inner = std::min(inner, -p.b(1));
    const double f_near = immersion(cplx{0.0, 1e-3 * inner}, p, x0).f[2];
    const double f_far = immersion(cplx{0.0, 1e-2 * inner}, p, x0).f[2];
    const double coefficient = 0.5 * (1.0 / w0 - w0);  // f3 ~ coefficient * log r near z = 0
    std::string numeric = "horizontal";
    if (f_near < f_far - 1e-9)
        numeric = "down";
    else if (f_near > f_far + 1e-9)
        numeric = "up";
    std::string predicted = "horizontal";
    if (std::abs(coefficient) > 1e-12)
        predicted = coefficient > 0.0 ? "down" : "up";
    // With every cone up the end at 0 must go down (and vice versa).
    int up = 0, down = 0;
    for (const auto& c : singular_components(p))
        (predicted_direction(c, p) == ConeDirection::Up ? up : down)++;
    std::string forced = "none";
    if (down == 0)
        forced = "down";
    else if (up == 0)
        forced = "up";
    const bool pass = (numeric == predicted || (predicted == "horizontal" && std::abs(f_near - f_far) < 1e-6)) &&
                      (forced == "none" || forced == numeric);
    return {{"pass", pass},
            {"w0", w0},
            {"G0", complex_json(gauss_from_w({{w0, 0.0}, false}))},
            {"numeric", numeric},
            {"from_w0", predicted},
            {"forced_by_cone_directions", forced}};
}

json check_horizontal(const SurfaceParams& p, const ToleranceLadder& tol) {
    const double w0 = end_value_w0(p);
    const bool ok = std::abs(w0 - 1.0) <= tol.horizontal_end;
    json out = {{"pass", ok}, {"w0", w0}, {"tolerance", tol.horizontal_end},
                {"normalization_feasible", !all_cones_same_direction(p)}};
    if (!ok)
        out["reason"] = all_cones_same_direction(p)
                            ? "every cone points the same way, so the end at z = 0 cannot be horizontal"
                            : "w(0) != 1; normalize_horizontal_end can re-solve one branch point";
    return out;
}

}  // namespace

ToleranceLadder tolerance_ladder(const std::string& level) {
    ToleranceLadder t;
    t.level = level;
    if (level == "strict") {
        t.period = 1e-10;
        t.apex = 1e-7;
        t.weld = 1e-7;
    } else if (level == "loose") {
        t.period = 1e-6;
        t.apex = 1e-4;
        t.weld = 1e-4;
    } else if (level != "default") {
        throw Error(ErrorKind::InvalidArgument, "tolerance level must be strict, default or loose");
    }
    return t;
}

std::pair<int, int> parse_grid(const std::string& text) {
    static const std::regex re(R"(^\s*(\d+)\s*[xX]\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw Error(ErrorKind::InvalidArgument, "grid must look like RxA, e.g. 200x100");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

VerifyConfig config_from_json(const json& j) {
    VerifyConfig cfg;
    cfg.raw = raw_params_from_json(j);
    try {
        if (j.contains("grid")) {
            const json& g = j.at("grid");
            cfg.grid.radial_samples = g.value("radial", cfg.grid.radial_samples);
            cfg.grid.angular_samples = g.value("angular", cfg.grid.angular_samples);
            cfg.grid.seam_refinement = g.value("seam_refinement", cfg.grid.seam_refinement);
            cfg.grid.r_min = g.value("r_min", cfg.grid.r_min);
            cfg.grid.r_max = g.value("r_max", cfg.grid.r_max);
        }
        if (j.contains("tolerances"))
            cfg.tol_level = j.at("tolerances").value("level", cfg.tol_level);
        if (j.contains("basepoint"))
            cfg.basepoint = j.at("basepoint").get<double>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed config: ") + e.what());
    }
    tolerance_ladder(cfg.tol_level);
    return cfg;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

VerificationResult verify(const SurfaceParams& p, const VerifyConfig& cfg, bool with_mesh) {
    const ToleranceLadder tol = tolerance_ladder(cfg.tol_level);
    const double x0 = cfg.basepoint > 0.0 ? cfg.basepoint : default_basepoint(p);
    check_basepoint(x0, p);
    const auto pts = random_points(p, cfg.random_points);

    VerificationResult result;
    json checks = json::object();
    checks["conformality"] = run_check([&] { return check_conformality(p, pts, tol); });
    checks["branch_coherence"] = run_check([&] { return check_branch(p, pts); });
    checks["gauss_modulus"] = run_check([&] { return check_gauss_modulus(p, pts); });
    checks["singular_set"] = run_check([&] { return check_singular(p, tol); });
    checks["apex_coincidence"] = run_check([&] { return check_apexes(p, x0, tol); });
    bool nondeg_pass = false;
    json nondeg;
    checks["cone_directions"] = run_check([&] { return check_cones(p, x0, nondeg_pass, nondeg); });
    checks["nondegeneracy"] = {{"pass", nondeg_pass && !nondeg.empty()}, {"components", nondeg},
                               {"imag_tolerance", tol.nondegeneracy_imag}};
    checks["periods"] = run_check([&] { return check_periods(p, tol); });

    GridSpec grid = cfg.grid;
    json mesh_info;
    if (with_mesh) {
        checks["graph"] = run_check([&]() -> json {
            const MeshSamples s = sample_fundamental(p, cfg.grid, x0);
            grid = s.grid;
            result.mesh = assemble(s, p, cfg.copies, AssembleOptions{tol.weld});
            const GraphCheck g = graph_check(*result.mesh);

            double f2 = 0.0;
            for (const auto& q : s.grid_samples) {
                const double arg = q.z.imag() == 0.0 ? (q.z.real() < 0.0 ? kPi : 0.0) : std::arg(q.z);
                f2 = std::max(f2, std::abs(q.f[1] + arg - result.mesh->mirror_constant));
            }
            for (const auto& q : s.apexes) {
                const double arg = q.z.real() < 0.0 ? kPi : 0.0;
                f2 = std::max(f2, std::abs(q.f[1] + arg - result.mesh->mirror_constant));
            }
            mesh_info = {{"pass", f2 <= tol.f2_identity},
                         {"max_deviation", f2},
                         {"samples", s.size()},
                         {"mirror_constant", result.mesh->mirror_constant},
                         {"tolerance", tol.f2_identity}};
            return {{"pass", g.pass},
                    {"min_nu3", g.min_nu3},
                    {"normals_up", g.normals_up},
                    {"row_zero_x1_decreasing", g.row_zero_monotone},
                    {"row_pi_x1_decreasing", g.row_pi_monotone},
                    {"overlapping_pairs", g.overlapping_pairs},
                    {"pairs_tested", g.pairs_tested},
                    {"degenerate_triangles", g.degenerate_triangles},
                    {"closed_cone_fans", g.closed_cone_fans},
                    {"weld_residual", result.mesh->weld_residual},
                    {"max_quadrature_error", s.max_quad_error},
                    {"vertices", result.mesh->vertices.size()},
                    {"triangles", result.mesh->triangles.size()},
                    {"cone_vertices", result.mesh->cone_vertices.size()},
                    {"copies", result.mesh->copies},
                    {"radii", s.radii.size()},
                    {"angles", s.angles.size()}};
        });
        checks["f2_identity"] = mesh_info.is_null() ? json{{"pass", false}, {"error", "mesh not built"}} : mesh_info;
    }
    checks["symmetry"] = run_check(
        [&] { return check_symmetry(p, x0, pts, result.mesh ? &*result.mesh : nullptr, tol); });
    checks["end_direction"] = run_check([&] { return check_end_direction(p, x0); });
    if (cfg.require_horizontal_ends)
        checks["horizontal_ends"] = run_check([&] { return check_horizontal(p, tol); });

    bool pass = true;
    for (const auto& [name, c] : checks.items())
        pass = pass && c.value("pass", false);
    result.pass = pass;

    result.report = {
        {"tool", "maxgraph"},
        {"version", "1.0.0"},
        {"generated_at", utc_timestamp()},
        {"params", to_json(p)},
        {"conventions",
         {{"basepoint", x0},
          {"basepoint_rule", "f(z0) = 0 at z0 = a_2m + 1 unless configured"},
          {"branch", "Re w >= 0, ties to Im w >= 0"},
          {"route", "arc |z| = z0 to arg +-pi/2, ray to |z|, arc to arg z"},
          {"gauge", "parameters used as given; catalog instances use a_1 = 1"},
          {"mirror_constant", 0.0},
          {"cone_up_convention", "positive axis alpha = -1, negative axis beta = +1"},
          {"truncation", {{"r_min", grid.r_min}, {"r_max", grid.r_max}}},
          {"grid",
           {{"radial", grid.radial_samples},
            {"angular", grid.angular_samples},
            {"seam_refinement", grid.seam_refinement}}},
          {"embedded_neighborhood", "finite proxy: projected rings around each interval"}}},
        {"tolerances",
         {{"level", tol.level},
          {"ladder", {{"strict", 1e-10}, {"default", 1e-8}, {"loose", 1e-6}}},
          {"period", tol.period},
          {"apex", tol.apex},
          {"weld", tol.weld},
          {"conformality", tol.conformality},
          {"singular_set", tol.singular_set},
          {"nondegeneracy_imag", tol.nondegeneracy_imag},
          {"f2_identity", tol.f2_identity},
          {"symmetry", tol.symmetry},
          {"horizontal_end", tol.horizontal_end}}},
        {"checks", checks},
        {"pass", pass}};
    return result;
}

}  // namespace maxgraph
