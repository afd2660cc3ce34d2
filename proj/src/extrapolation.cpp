#include "maxgraph/extrapolation.hpp"

#include <vector>

namespace maxgraph {

namespace {

// Solves the square system M x = rhs by Gaussian elimination with partial pivoting.
std::vector<double> solve(std::vector<std::vector<double>> M, std::vector<double> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col]))
                piv = r;
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        if (M[col][col] == 0.0)
            throw Error(ErrorKind::NonConvergent, "singular extrapolation system");
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = M[r][col] / M[col][col];
            for (std::size_t c = col; c < n; ++c)
                M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c)
            acc -= M[i][c] * x[c];
        x[i] = acc / M[i][i];
    }
    return x;
}

Vec3 fit_constant(std::span<const double> s, std::span<const Vec3> v, std::span<const double> powers) {
    const std::size_t n = s.size();
    std::vector<std::vector<double>> M(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        M[i][0] = 1.0;
        for (std::size_t k = 0; k + 1 < n; ++k)
            M[i][k + 1] = std::pow(s[i], powers[k]);
    }
    Vec3 out{};
    for (int c = 0; c < 3; ++c) {
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = v[i][c];
        out[c] = solve(M, rhs)[0];
    }
    return out;
}

}  // namespace

Extrapolated richardson(std::span<const double> s, std::span<const Vec3> v, std::span<const double> powers) {
    if (s.size() != v.size() || s.size() != powers.size() + 1 || s.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "richardson needs powers.size() + 1 samples");
    Extrapolated out;
    out.value = fit_constant(s, v, powers);
    const std::size_t n = s.size();
    const Vec3 coarse = fit_constant(s.subspan(n - 2), v.subspan(n - 2), powers.first(1));
    out.error = max_abs(out.value - coarse);
    return out;
}

}  // namespace maxgraph
