#pragma once

#include <span>
#include <vector>

#include "json.hpp"
#include "maxgraph/types.hpp"

namespace maxgraph {

/// Unchecked parameter vector, as read from a config or built by hand.
struct RawParams {
    int m = 0;
    int n = 0;
    std::vector<double> a;  // a_1 < ... < a_{2m}
    std::vector<double> b;  // b_1 > ... > b_{2n}, all negative
    std::vector<int> alpha;
    std::vector<int> beta;
};

/// Which axis a singular interval (or branch point) lives on.
enum class Axis { Positive, Negative };

/// Validated surface parameters:
///   b_{2n} < ... < b_1 < 0 < a_1 < ... < a_{2m},  alpha, beta in {+1, -1}.
/// Immutable once constructed; every evaluation routine takes it by const reference.
class SurfaceParams {
public:
    static SurfaceParams validate(const RawParams& raw);

    int m() const { return m_; }
    int n() const { return n_; }

    /// 1-based accessors matching the usual index conventions.
    double a(int j) const { return a_[j - 1]; }
    double b(int k) const { return b_[k - 1]; }
    int alpha(int j) const { return alpha_[j - 1]; }
    int beta(int k) const { return beta_[k - 1]; }

    std::span<const double> a_points() const { return a_; }
    std::span<const double> b_points() const { return b_; }
    std::span<const int> alphas() const { return alpha_; }
    std::span<const int> betas() const { return beta_; }

    /// All 2(m+n) branch points, sorted ascending.
    std::vector<double> branch_points() const;
    /// Roots of the denominator of w^2 (where w^2 = infinity).
    std::vector<double> poles() const;
    /// Roots of the numerator of w^2 (where w^2 = 0).
    std::vector<double> zeros() const;

    /// Smallest distance between consecutive points of {b..., 0, a...}.
    double min_gap() const;
    /// Distance from x to the nearest other point of {b..., 0, a...}.
    double local_gap(double x) const;

    RawParams raw() const;

private:
    SurfaceParams() = default;

    int m_ = 0;
    int n_ = 0;
    std::vector<double> a_;
    std::vector<double> b_;
    std::vector<int> alpha_;
    std::vector<int> beta_;
};

inline SurfaceParams validate_params(const RawParams& raw) { return SurfaceParams::validate(raw); }

/// Free real parameters left after the a_1 = 1 gauge.
inline int moduli_dimension(int m, int n) { return 2 * (m + n) - 1; }

nlohmann::json to_json(const SurfaceParams& p);
/// Reads {"m","n","a","b","alpha","beta"}; missing "b"/"beta" mean n = 0.
/// Throws Error(InvalidArgument) on malformed documents (validation is separate).
RawParams raw_params_from_json(const nlohmann::json& j);

}  // namespace maxgraph
