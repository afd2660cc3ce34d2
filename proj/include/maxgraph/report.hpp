#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "maxgraph/mesh.hpp"
#include "maxgraph/params.hpp"

namespace maxgraph {

/// Tolerances applied by the verification suite. The level only moves the period and apex
/// thresholds; the pointwise algebraic checks are fixed.
struct ToleranceLadder {
    std::string level = "default";
    double period = 1e-8;
    double apex = 1e-6;
    double weld = 1e-6;
    double conformality = 1e-12;
    double singular_set = 1e-10;
    double nondegeneracy_imag = 1e-8;
    double f2_identity = 1e-10;
    double symmetry = 1e-8;
    double horizontal_end = 1e-12;
};

/// "strict", "default" or "loose"; throws InvalidArgument otherwise.
ToleranceLadder tolerance_ladder(const std::string& level);

struct VerifyConfig {
    RawParams raw;
    GridSpec grid{};
    double basepoint = 0.0;  // <= 0 selects a_{2m} + 1
    std::string tol_level = "default";
    bool require_horizontal_ends = false;
    int copies = 0;
    int random_points = 1000;
};

/// Reads the parameter document plus the optional "grid", "tolerances" and "basepoint" sections.
/// Throws Error(InvalidArgument) on malformed input; parameters are not validated here.
VerifyConfig config_from_json(const nlohmann::json& j);

/// Parses "RxA" (e.g. "200x100"); throws InvalidArgument.
std::pair<int, int> parse_grid(const std::string& text);

struct VerificationResult {
    nlohmann::json report;
    bool pass = false;
    std::optional<GraphMesh> mesh;
};

/// Runs every check once and assembles the report. `with_mesh` builds the mesh for the graph,
/// f2 and symmetry checks.
VerificationResult verify(const SurfaceParams& p, const VerifyConfig& cfg, bool with_mesh = true);

/// Single ISO-8601 UTC timestamp, the only nondeterministic field of a report.
std::string utc_timestamp();

}  // namespace maxgraph
