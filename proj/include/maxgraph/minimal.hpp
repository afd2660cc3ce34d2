#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "maxgraph/integrator.hpp"
#include "maxgraph/params.hpp"
#include "maxgraph/types.hpp"

// The doubly periodic minimal surface on the same curve w^2 = ..., in two orientations:
//   vertical ends:   G = w,                   dh = dz / z
//   horizontal ends: G = i (w + 1) / (w - 1), dh = (1/2)(1/w - w) dz / z
// with omega = ((1/2)(1/G - G) dh, (i/2)(1/G + G) dh, dh).

namespace maxgraph {

enum class EndOrientation { Vertical, Horizontal };
const char* to_string(EndOrientation o);

struct MinimalData {
    SurfaceParams params;
    EndOrientation orientation = EndOrientation::Vertical;
};

struct MinimalWeierstrass {
    ExtendedComplex G;
    cplx dh;  // coefficient of dz
};

/// Weierstrass data at z on the given sheet (sheet = -1 replaces w by -w).
MinimalWeierstrass minimal_weierstrass(cplx z, const MinimalData& d, int sheet = 1);

/// Coefficients of dz of (omega1, omega2, omega3).
CVec3 omega(cplx z, const MinimalData& d, int sheet = 1);

/// Sets b_{2n} so that w(0) = 1 (hence G(0) = 1 with vertical ends).
/// Needs n >= 1 and every alpha, beta equal to +1; raw.b may omit b_{2n}.
/// Throws OrderingInfeasible when the solved b_{2n} is not below b_{2n-1}.
SurfaceParams b2n_normalize(const RawParams& raw);
inline SurfaceParams b2n_normalize(const SurfaceParams& p) { return b2n_normalize(p.raw()); }

struct LoopMeasurement {
    std::string description;
    Vec3 v{};
    double error = 0.0;
    int crossings = 0;  // branch cut crossings (even on a closed loop)
    bool horizontal = false;
};

struct MeasureOptions {
    double abs_tol = 1e-11;
    int max_depth = 40;
    double horizontal_tolerance = 1e-8;
};

/// Re of the loop integral of omega along a closed polyline, continuing w analytically:
/// the branch cuts sit on the singular intervals and every transversal crossing flips the sheet.
/// Throws NotClosedOnCurve for an odd number of crossings, PathThroughSingularity when the loop
/// touches 0, a branch point or runs along a cut.
LoopMeasurement measure_period(const PathSpec& loop, const MinimalData& d, const MeasureOptions& opts = {});

struct PeriodLattice {
    std::vector<LoopMeasurement> measured_loops;
    int genus = 0;  // m + n - 1
    int ends = 4;   // two top and two bottom ends in the quotient
};

/// Closed polylines: a square around z = 0, a rectangle around each singular interval,
/// and a large square around infinity (clockwise).
std::vector<std::pair<std::string, PathSpec>> standard_loops(const SurfaceParams& p);

PeriodLattice measure_lattice(const MinimalData& d, const MeasureOptions& opts = {});

nlohmann::json to_json(const PeriodLattice& lattice);

}  // namespace maxgraph
