// maxgraph command line: verify, mesh, catalog, minimal-measure.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxgraph/catalog.hpp"
#include "maxgraph/mesh.hpp"
#include "maxgraph/minimal.hpp"
#include "maxgraph/report.hpp"
#include "maxgraph/weierstrass.hpp"

using namespace maxgraph;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("config " + path + " is not valid JSON: " + e.what());
    }
}

struct CommonFlags {
    std::string config;
    std::string out;
    std::string grid;
    std::string tol;
    int copies = 0;
    bool json_stdout = false;
    bool require_horizontal = false;
    std::string type;  // "M,N"
    int class_index = 0;
    double spacing = 1.0;
};

// Config from --config or from --type/--class; command-line flags override the file.
VerifyConfig load_config(const CommonFlags& f) {
    VerifyConfig cfg;
    if (!f.config.empty()) {
        cfg = config_from_json(read_json_file(f.config));
    } else if (!f.type.empty()) {
        int m = 0, n = 0;
        char comma = 0;
        std::istringstream is(f.type);
        if (!(is >> m >> comma >> n) || comma != ',')
            throw UsageError("--type must look like M,N");
        const auto classes = catalog_classes(m, n);
        if (f.class_index < 1 || f.class_index > static_cast<int>(classes.size()))
            throw UsageError("--class must be between 1 and " + std::to_string(classes.size()));
        cfg.raw = instantiate(classes[f.class_index - 1].representative, f.spacing).raw();
    } else {
        throw UsageError("either --config or --type with --class is required");
    }
    if (!f.grid.empty()) {
        const auto [r, a] = parse_grid(f.grid);
        cfg.grid.radial_samples = r;
        cfg.grid.angular_samples = a;
    }
    if (!f.tol.empty())
        cfg.tol_level = f.tol;
    tolerance_ladder(cfg.tol_level);
    cfg.copies = f.copies;
    cfg.require_horizontal_ends = f.require_horizontal;
    return cfg;
}

void emit(const json& report, const std::string& path, bool to_stdout) {
    const std::string text = report.dump(2) + "\n";
    if (!path.empty())
        write_file_atomic(path, text);
    if (to_stdout)
        std::cout << text;
}

void print_failures(const json& report) {
    for (const auto& [name, c] : report.at("checks").items())
        if (!c.value("pass", false))
            std::cerr << "check failed: " << name << (c.contains("error") ? ": " + c["error"].get<std::string>() : "")
                      << (c.contains("reason") ? ": " + c["reason"].get<std::string>() : "") << "\n";
}

int cmd_verify(const CommonFlags& f) {
    const VerifyConfig cfg = load_config(f);
    const SurfaceParams p = SurfaceParams::validate(cfg.raw);
    VerificationResult r = verify(p, cfg, true);
    emit(r.report, f.out.empty() && !f.json_stdout ? "maxgraph-report.json" : f.out, f.json_stdout);
    if (!r.pass) {
        print_failures(r.report);
        return kCheckFailed;
    }
    return kPass;
}

int cmd_mesh(const CommonFlags& f, const std::string& ply, const std::string& report_path) {
    const VerifyConfig cfg = load_config(f);
    const SurfaceParams p = SurfaceParams::validate(cfg.raw);
    VerificationResult r = verify(p, cfg, true);
    if (!r.mesh) {
        print_failures(r.report);
        return kCheckFailed;
    }
    const std::string obj = f.out.empty() ? "maxgraph.obj" : f.out;
    export_obj(*r.mesh, obj);
    if (!ply.empty())
        export_ply(*r.mesh, ply);
    r.report["mesh"] = {{"obj", obj}, {"ply", ply.empty() ? json(nullptr) : json(ply)},
                        {"cone_tagged_vertices", r.mesh->cone_vertices.size()}};
    emit(r.report, report_path.empty() ? obj + ".report.json" : report_path, f.json_stdout);
    if (!r.pass) {
        print_failures(r.report);
        return kCheckFailed;
    }
    return kPass;
}

int cmd_catalog(int cones, const std::string& out) {
    const json j = catalog_json(cones);
    if (!out.empty())
        write_file_atomic(out, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return kPass;
}

int cmd_minimal(const CommonFlags& f, const std::string& orientation) {
    const VerifyConfig cfg = load_config(f);
    SurfaceParams p = SurfaceParams::validate(cfg.raw);
    json out = {{"tool", "maxgraph"}, {"generated_at", utc_timestamp()}, {"input_params", to_json(p)}};

    json norm;
    const bool canonical = p.n() >= 1 && std::all_of(p.alphas().begin(), p.alphas().end(), [](int s) { return s == 1; }) &&
                           std::all_of(p.betas().begin(), p.betas().end(), [](int s) { return s == 1; });
    if (canonical) {
        try {
            p = b2n_normalize(p);
            norm = {{"applied", true}, {"b_2n", p.b(2 * p.n())}};
        } catch (const Error& e) {
            norm = {{"applied", false}, {"error", e.what()}};
        }
    } else {
        norm = {{"applied", false}, {"reason", "needs n >= 1 and every sign +1"}};
    }
    const MinimalData d{p, orientation == "horizontal" ? EndOrientation::Horizontal : EndOrientation::Vertical};
    const double w0 = end_value_w0(p);
    const PeriodLattice lattice = measure_lattice(d);
    out["params"] = to_json(p);
    out["orientation"] = to_string(d.orientation);
    out["b2n_normalization"] = norm;
    out["w0"] = w0;
    out["minimal_counterpart"] = to_json(lattice);
    out["period_problem"] = "measured only; handle periods are not solved for";
    emit(out, f.out, f.json_stdout || f.out.empty());
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singly periodic maximal graphs with cone-like singularities"};
    app.require_subcommand(1);
    CommonFlags flags;
    std::string ply, report_path, orientation = "vertical";
    int cones = 4;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", flags.config, "JSON config: parameters plus optional grid/tolerances/basepoint");
        sub->add_option("--out", flags.out, "output path");
        sub->add_option("--grid", flags.grid, "grid as RxA, e.g. 200x100");
        sub->add_option("--tol", flags.tol, "tolerance level")->check(CLI::IsMember({"strict", "default", "loose"}));
        sub->add_option("--type", flags.type, "surface type M,N (instead of --config)");
        sub->add_option("--class", flags.class_index, "1-based catalog class of the type");
        sub->add_option("--spacing", flags.spacing, "branch point spacing for --type instances");
        sub->add_flag("--json", flags.json_stdout, "print the report to stdout");
    };
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full check suite and write a JSON report");
    add_common(verify_cmd);
    verify_cmd->add_flag("--require-horizontal-ends", flags.require_horizontal, "fail unless w(0) = 1");
    verify_cmd->add_option("--copies", flags.copies, "period translates in the checked mesh");

    CLI::App* mesh_cmd = app.add_subcommand("mesh", "build, check and export the graph mesh");
    add_common(mesh_cmd);
    mesh_cmd->add_option("--copies", flags.copies, "period translates by (0, 2 pi, 0)");
    mesh_cmd->add_option("--ply", ply, "also write binary little-endian PLY");
    mesh_cmd->add_option("--report", report_path, "report path (default <out>.report.json)");
    mesh_cmd->add_flag("--require-horizontal-ends", flags.require_horizontal, "fail unless w(0) = 1");

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "list types and canonical cone configurations");
    catalog_cmd->add_option("--cones", cones, "number of cones")->check(CLI::PositiveNumber);
    catalog_cmd->add_option("--out", flags.out, "also write the listing here");

    CLI::App* minimal_cmd = app.add_subcommand("minimal-measure", "measure periods of the minimal counterpart");
    add_common(minimal_cmd);
    minimal_cmd->add_option("--orientation", orientation, "vertical or horizontal ends")
        ->check(CLI::IsMember({"vertical", "horizontal"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*verify_cmd)
            return cmd_verify(flags);
        if (*mesh_cmd)
            return cmd_mesh(flags, ply, report_path);
        if (*catalog_cmd)
            return cmd_catalog(cones, flags.out);
        if (*minimal_cmd)
            return cmd_minimal(flags, orientation);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::OrderingViolation:
        case ErrorKind::LengthMismatch:
        case ErrorKind::SignDomain:
        case ErrorKind::InvalidArgument:
        case ErrorKind::IOFailure:
            return kUsage;
        default:
            return kCheckFailed;
        }
    }
    return kUsage;
}
