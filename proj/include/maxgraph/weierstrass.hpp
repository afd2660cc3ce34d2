#pragma once

#include "maxgraph/params.hpp"
#include "maxgraph/types.hpp"

// Algebraic layer of the Weierstrass data on C* with the Re w >= 0 sheet:
//
//   w^2 = prod_k ((z - a_{2k}) / (z - a_{2k-1}))^alpha_k * prod_k ((z - b_{2k-1}) / (z - b_{2k}))^beta_k
//   G   = (1 + w) / (1 - w),         dh = -(1/2)(1/w - w) dz / z
//   phi = (-(1/2)(1/w + w)/z, i/z, (1/2)(1/w - w)/z) dz

namespace maxgraph {

/// A domain point together with the branch-resolved square root of w^2.
struct BranchedValue {
    cplx z;
    ExtendedComplex w;
};

/// Coefficients of dz of the three holomorphic 1-forms.
struct FormTriple {
    cplx phi1;
    cplx phi2;
    cplx phi3;

    CVec3 as_array() const { return {phi1, phi2, phi3}; }
};

struct GaussValue {
    ExtendedComplex G;
    /// Gauss vector in H^2 (signed: x3 > 0 iff |G| > 1), Euclidean-normalized.
    /// On |G| = 1 it is the normalized null limit direction.
    Vec3 nu;
};

ExtendedComplex w_squared(cplx z, const SurfaceParams& p);

/// Logarithmic derivative d/dz log(w^2), a sum of simple fractions with real poles.
cplx log_derivative_w2(cplx z, const SurfaceParams& p);

/// Square root with Re w >= 0; ties on the imaginary axis go to Im w >= 0.
cplx select_branch(cplx w2);

BranchedValue branch_w(cplx z, const SurfaceParams& p);

/// G = (1 + w) / (1 - w), with G = -1 at poles of w^2 and G = infinity at w = 1.
ExtendedComplex gauss_from_w(const ExtendedComplex& w);
/// Euclidean-normalized Gauss vector for a given G.
Vec3 gauss_vector(const ExtendedComplex& G);
GaussValue gauss(cplx z, const SurfaceParams& p);

/// Throws BranchPointEvaluation where w is 0 or infinite.
FormTriple phi(cplx z, const SurfaceParams& p);
FormTriple phi_from_w(cplx z, cplx w);

/// Conformal factor of ds^2 with respect to |dz|^2.
double metric_factor(cplx z, const SurfaceParams& p);

/// dG/dz along the Re w >= 0 branch, from the analytic derivative of w.
cplx gauss_derivative(cplx z, const SurfaceParams& p);
/// Coefficient of dh with respect to dz.
cplx dh_coefficient(cplx z, const SurfaceParams& p);
/// Coefficient of the Hopf differential Q = dG dh / G with respect to dz^2.
cplx hopf(cplx z, const SurfaceParams& p);
/// dG / (G dh), the quantity whose reality characterizes cone-like singular points.
cplx dg_over_g_dh(cplx z, const SurfaceParams& p);

/// w(0) > 0; the end at z = 0 is horizontal iff this equals 1.
double end_value_w0(const SurfaceParams& p);

/// Selects a single branch-point coordinate, 1-based (e.g. {Axis::Negative, 2} is b_2).
struct FreeCoordinate {
    Axis axis;
    int index;
};

/// Re-solves one coordinate in closed form so that w(0) = 1.
/// Throws Infeasible when all cones point the same way or the solved value breaks the ordering.
SurfaceParams normalize_horizontal_end(const SurfaceParams& p, FreeCoordinate free);

/// True when every cone points the same way under the sign convention
/// (positive axis: alpha = -1 is up; negative axis: beta = +1 is up).
bool all_cones_same_direction(const SurfaceParams& p);

}  // namespace maxgraph
