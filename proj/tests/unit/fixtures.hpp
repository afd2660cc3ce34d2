#pragma once

#include <random>
#include <vector>

#include "maxgraph/params.hpp"
#include "support/oracle.hpp"

namespace fixtures {

using maxgraph::RawParams;
using maxgraph::SurfaceParams;

inline SurfaceParams one_zero(int alpha = 1) { return SurfaceParams::validate({1, 0, {1, 2}, {}, {alpha}, {}}); }

inline SurfaceParams one_one(int alpha = 1, int beta = 1) {
    return SurfaceParams::validate({1, 1, {1, 2}, {-1, -2.5}, {alpha}, {beta}});
}

inline SurfaceParams two_one() { return SurfaceParams::validate({2, 1, {1, 2, 3, 4.5}, {-1, -3}, {-1, 1}, {-1}}); }

inline oracle::Surface to_oracle(const SurfaceParams& p) {
    const RawParams r = p.raw();
    return {r.a, r.b, r.alpha, r.beta};
}

/// Random valid parameters of type (m, n) with gaps in [0.3, 1.5] and random signs.
inline SurfaceParams random_params(std::mt19937_64& rng, int m, int n) {
    std::uniform_real_distribution<double> gap(0.3, 1.5);
    std::bernoulli_distribution coin(0.5);
    RawParams r{m, n, {}, {}, {}, {}};
    double x = 0.0;
    for (int j = 0; j < 2 * m; ++j)
        r.a.push_back(x += gap(rng));
    x = 0.0;
    for (int k = 0; k < 2 * n; ++k)
        r.b.push_back(x -= gap(rng));
    for (int j = 0; j < m; ++j)
        r.alpha.push_back(coin(rng) ? 1 : -1);
    for (int k = 0; k < n; ++k)
        r.beta.push_back(coin(rng) ? 1 : -1);
    return SurfaceParams::validate(r);
}

/// A spread of configurations from (1,0) up to (3,2).
inline std::vector<SurfaceParams> spread(unsigned seed = 11) {
    std::mt19937_64 rng(seed);
    const int types[][2] = {{1, 0}, {2, 0}, {1, 1}, {2, 1}, {3, 0}, {2, 2}, {3, 1}, {3, 2}, {2, 1}, {3, 2}};
    std::vector<SurfaceParams> out;
    for (const auto& t : types)
        out.push_back(random_params(rng, t[0], t[1]));
    return out;
}

}  // namespace fixtures
