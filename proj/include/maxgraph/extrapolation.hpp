#pragma once

#include <span>

#include "maxgraph/types.hpp"

namespace maxgraph {

struct Extrapolated {
    Vec3 value{};
    double error = 0.0;
};

/// Richardson extrapolation to s = 0 of samples v_i = A + sum_k B_k s_i^{powers_k} + ...
///
/// Needs exactly powers.size() + 1 samples. The error is the max-component distance between
/// the full estimate and the one obtained from the last two samples using only powers[0].
Extrapolated richardson(std::span<const double> s, std::span<const Vec3> v, std::span<const double> powers);

}  // namespace maxgraph
