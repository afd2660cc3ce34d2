#pragma once

#include <vector>

#include "maxgraph/components.hpp"
#include "maxgraph/integrator.hpp"
#include "maxgraph/params.hpp"
#include "maxgraph/types.hpp"

namespace maxgraph {

// ---------------------------------------------------------------------------
// The singular set {|G| = 1}.

struct SingularSetOptions {
    int interval_samples = 64;   // per component, interior points
    int off_samples = 1000;      // real points off the set
    int complex_samples = 1000;  // points off the real axis
    double tolerance = 1e-10;    // allowed | |G| - 1 | on the intervals
    unsigned seed = 20240611u;
};

struct SingularSetCheck {
    std::vector<SingularComponent> components;
    double max_interval_deviation = 0.0;  // max | |G| - 1 | over interval samples
    double min_off_margin = 0.0;          // min (|G| - 1) over off-set samples
    int off_hits = 0;                     // off-set samples with | |G| - 1 | <= tolerance
    int samples_checked = 0;
    /// Per component: w^2 strictly monotone and negative on the open interval.
    std::vector<bool> one_to_one;
    bool pass = false;
};

/// Samples |G| on and off the closed-form intervals; never throws on a failed check.
SingularSetCheck check_singular_set(const SurfaceParams& p, const SingularSetOptions& opts = {});

/// The m + n closed intervals. Throws VerificationFailure when the numeric locus disagrees.
std::vector<SingularComponent> singular_set(const SurfaceParams& p, const SingularSetOptions& opts = {});

// ---------------------------------------------------------------------------
// Non-degeneracy of a component.

struct NondegeneracyOptions {
    int samples = 15;             // interior points at fractions i / (samples + 1)
    double imag_tolerance = 1e-8; // relative
    double floor = 1e-6;          // minimal |dG/(G dh)| and |dh/G|
};

struct NondegeneracyReport {
    std::vector<double> x;
    std::vector<double> values;      // Re dG/(G dh) at x
    double max_relative_imag = 0.0;
    double min_abs_value = 0.0;
    double min_abs_dh_over_g = 0.0;
    bool gauss_injective = false;    // arg G strictly monotone along the samples
    bool pass = false;
};

/// Evaluates dG/(G dh) on the interval (limit from the upper half-plane; the quantity depends on
/// w^2 only, so it is single-valued there). Throws DegenerateSingularity on failure.
NondegeneracyReport nondegeneracy(const SingularComponent& c, const SurfaceParams& p,
                                  const NondegeneracyOptions& opts = {});
/// Same, without throwing.
NondegeneracyReport check_nondegeneracy(const SingularComponent& c, const SurfaceParams& p,
                                        const NondegeneracyOptions& opts = {});

// ---------------------------------------------------------------------------
// Cone apex and direction.

struct DirectionOptions {
    std::vector<double> eps_factors{1e-2, 1e-3};  // offsets relative to the interval length
    double tolerance = 1e-8;                       // minimal x3 gap
    IntegratorOptions integrator{};
};

struct DirectionSample {
    double eps = 0.0;
    double x3_left = 0.0;   // f3 at lo - eps
    double x3_right = 0.0;  // f3 at hi + eps
};

struct DirectionEstimate {
    ConeDirection direction = ConeDirection::Up;
    Vec3 apex{};
    std::vector<DirectionSample> samples;
};

/// Compares the apex height with f3 just outside both endpoints, at every eps.
/// Throws AmbiguousDirection when a gap is below tolerance or the eps levels disagree.
DirectionEstimate numeric_direction(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                                    const DirectionOptions& opts = {});

struct EndpointGauss {
    double x = 0.0;
    double expected = 0.0;  // +-1
    ExtendedComplex measured;
    bool ok = false;
};

/// G at both endpoints (where w is exactly 0 or infinite) against the sign tables.
std::array<EndpointGauss, 2> endpoint_gauss(const SingularComponent& c, const SurfaceParams& p);

struct NeighborhoodOptions {
    int ring_points = 64;
    std::array<double, 2> ring_widths{0.05, 0.15};  // semi-minor axis relative to the interval length
    IntegratorOptions integrator{};
};

struct NeighborhoodCheck {
    bool rings_simple = false;  // each projected ring is a simple closed polygon
    bool rings_disjoint = false;
    bool winds_once = false;    // each ring winds once around the projected apex
    bool pass = false;
};

/// Finite proxy for an embedded punctured neighborhood: two confocal ellipses around the interval,
/// mapped by f and projected to the x1x2-plane, must be nested simple loops around the apex.
NeighborhoodCheck embedded_neighborhood(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                                        const Vec3& apex, const NeighborhoodOptions& opts = {});

struct ConeReport {
    SingularComponent component;
    Vec3 apex{};
    double apex_error = 0.0;
    ConeDirection direction = ConeDirection::Up;  // numeric
    ConeDirection predicted = ConeDirection::Up;  // sign tables of the main theorem
    ConeDirection lemma_statement = ConeDirection::Up;
    bool matches_prediction = false;
    bool matches_lemma_statement = false;
    std::vector<DirectionSample> direction_samples;
    std::array<EndpointGauss, 2> endpoints{};
    std::vector<double> dg_over_gdh_samples;
    bool nondegenerate = false;
    bool embedded_neighborhood_check = false;  // proxy, see embedded_neighborhood
};

struct ClassifyOptions {
    DirectionOptions direction{};
    NondegeneracyOptions nondegeneracy{};
    NeighborhoodOptions neighborhood{};
    bool neighborhood_check = true;
};

ConeReport classify_cone(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                         const ClassifyOptions& opts = {});
inline ConeReport classify_cone(const SingularComponent& c, const SurfaceParams& p) {
    return classify_cone(c, p, default_basepoint(p));
}

// ---------------------------------------------------------------------------
// Apex coincidence: the four one-sided limits and constancy along the interval.

struct ApexCheck {
    Vec3 apex{};                       // direct value at the midpoint
    std::array<Vec3, 4> sides{};       // above, below, left, right
    std::array<double, 4> residuals{}; // extrapolation residuals
    double max_side_discrepancy = 0.0; // modulo the period (0, 2 pi, 0)
    double max_interval_variation = 0.0;
    bool pass = false;
};

ApexCheck apex_coincidence(const SingularComponent& c, const SurfaceParams& p, double basepoint,
                           const ApexOptions& opts = {}, int interval_samples = 9);

// ---------------------------------------------------------------------------
// Hyperboloid model.

/// Point of H^2 (upper or lower sheet) with stereographic image G; throws DegenerateGauss on |G| = 1.
Vec3 hyperboloid_point(const ExtendedComplex& G);

/// sigma(x) = (x1 + i x2) / (1 - x3). Throws NotOnHyperboloid unless <x, x> = -1.
ExtendedComplex stereographic(const Vec3& x);

}  // namespace maxgraph
