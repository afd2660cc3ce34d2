#pragma once

#include <functional>

#include "maxgraph/types.hpp"

namespace maxgraph {

struct QuadratureResult {
    CVec3 value{};
    double error = 0.0;  // estimate of max-component absolute error
    long evaluations = 0;
};

struct QuadratureOptions {
    double abs_tol = 1e-10;
    int max_depth = 40;
};

using VectorIntegrand = std::function<CVec3(double)>;

/// Adaptive interval halving with an embedded Gauss(7)-Kronrod(15) error estimate on [lo, hi].
/// Bisects the panel with the largest estimate until the summed estimate meets abs_tol.
/// Throws QuadratureFailure when the worst panel would need splitting beyond max_depth.
QuadratureResult integrate_adaptive(const VectorIntegrand& f, double lo, double hi,
                                    const QuadratureOptions& opts = {});

}  // namespace maxgraph
