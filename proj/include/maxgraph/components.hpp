#pragma once

#include <vector>

#include "maxgraph/params.hpp"

namespace maxgraph {

/// One closed singular interval, in closed form: [a_{2j-1}, a_{2j}] or [b_{2k}, b_{2k-1}].
struct SingularComponent {
    double lo = 0.0;
    double hi = 0.0;
    Axis axis = Axis::Positive;
    int index = 1;  // j for the positive axis, k for the negative axis

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    /// Sign entry governing this cone (alpha_j or beta_k).
    int sign(const SurfaceParams& p) const { return axis == Axis::Positive ? p.alpha(index) : p.beta(index); }
};

enum class ConeDirection { Up, Down };
const char* to_string(ConeDirection d);

/// Direction predicted by the sign tables: positive axis alpha = -1 is up, negative axis beta = +1 is up.
ConeDirection predicted_direction(const SingularComponent& c, const SurfaceParams& p);
/// The opposite table, as literally stated for the direction lemma (alpha = +1 up, beta = -1 up).
ConeDirection lemma_statement_direction(const SingularComponent& c, const SurfaceParams& p);

/// The m + n singular intervals, positive axis first (j = 1..m), then negative (k = 1..n).
std::vector<SingularComponent> singular_components(const SurfaceParams& p);

/// True when the real number x lies in some closed singular interval.
bool on_singular_set(double x, const SurfaceParams& p);

/// Distance from the interval to the nearest point of {branch points, 0} outside it.
double outer_gap(const SingularComponent& c, const SurfaceParams& p);

}  // namespace maxgraph
