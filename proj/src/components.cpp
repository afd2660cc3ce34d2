#include "maxgraph/components.hpp"

#include <limits>

namespace maxgraph {

std::vector<SingularComponent> singular_components(const SurfaceParams& p) {
    std::vector<SingularComponent> out;
    out.reserve(static_cast<std::size_t>(p.m() + p.n()));
    for (int j = 1; j <= p.m(); ++j)
        out.push_back({p.a(2 * j - 1), p.a(2 * j), Axis::Positive, j});
    for (int k = 1; k <= p.n(); ++k)
        out.push_back({p.b(2 * k), p.b(2 * k - 1), Axis::Negative, k});
    return out;
}

bool on_singular_set(double x, const SurfaceParams& p) {
    for (const auto& c : singular_components(p))
        if (c.contains(x))
            return true;
    return false;
}

double outer_gap(const SingularComponent& c, const SurfaceParams& p) {
    auto pts = p.branch_points();
    pts.push_back(0.0);
    double gap = std::numeric_limits<double>::infinity();
    for (double q : pts) {
        if (q < c.lo)
            gap = std::min(gap, c.lo - q);
        else if (q > c.hi)
            gap = std::min(gap, q - c.hi);
    }
    return gap;
}

const char* to_string(ConeDirection d) { return d == ConeDirection::Up ? "up" : "down"; }

ConeDirection predicted_direction(const SingularComponent& c, const SurfaceParams& p) {
    const int up_sign = c.axis == Axis::Positive ? -1 : 1;
    return c.sign(p) == up_sign ? ConeDirection::Up : ConeDirection::Down;
}

ConeDirection lemma_statement_direction(const SingularComponent& c, const SurfaceParams& p) {
    return predicted_direction(c, p) == ConeDirection::Up ? ConeDirection::Down : ConeDirection::Up;
}

}  // namespace maxgraph
