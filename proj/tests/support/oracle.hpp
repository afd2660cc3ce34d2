#pragma once

// Reference computations for the tests. Nothing here calls into the library: the rational
// product, the square root, the forms and the path integrals are written out again, and
// integrals use composite Gauss-Legendre panels (Boost nodes) graded toward singular ends.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace oracle {

using cplx = std::complex<double>;
using C3 = std::array<cplx, 3>;
using R3 = std::array<double, 3>;

inline constexpr double pi = 3.14159265358979323846;

struct Surface {
    std::vector<double> a, b;
    std::vector<int> alpha, beta;
};

inline cplx w2(cplx z, const Surface& s) {
    cplx v{1.0, 0.0};
    for (std::size_t k = 0; k < s.alpha.size(); ++k)
        v *= std::pow((z - s.a[2 * k + 1]) / (z - s.a[2 * k]), static_cast<double>(s.alpha[k]));
    for (std::size_t k = 0; k < s.beta.size(); ++k)
        v *= std::pow((z - s.b[2 * k]) / (z - s.b[2 * k + 1]), static_cast<double>(s.beta[k]));
    return v;
}

// Both roots; keep the one with nonnegative real part (imaginary part breaks ties).
inline cplx w(cplx z, const Surface& s) {
    const cplx v = w2(z, s);
    const cplx r1 = std::sqrt(v), r2 = -r1;
    if (r1.real() > r2.real())
        return r1;
    if (r2.real() > r1.real())
        return r2;
    return r1.imag() >= 0 ? r1 : r2;
}

inline C3 phi(cplx z, const Surface& s) {
    const cplx ww = w(z, s);
    const cplx I{0.0, 1.0};
    return {-0.5 * (1.0 / ww + ww) / z, I / z, 0.5 * (1.0 / ww - ww) / z};
}

// Composite 30-point Gauss-Legendre over [0, 1] of g(t) with `panels` uniform panels, plus
// geometric grading (ratio 0.2, 30 levels) at ends flagged singular.
inline C3 integrate01(const std::function<C3(double)>& g, int panels, bool sing0, bool sing1) {
    using Q = boost::math::quadrature::gauss<double, 30>;
    std::vector<std::pair<double, double>> pieces;
    const double h = 1.0 / panels;
    for (int i = 0; i < panels; ++i) {
        const double lo = i * h, hi = (i + 1) * h;
        if (i == 0 && sing0) {
            double right = hi;
            for (int k = 0; k < 30; ++k) {
                pieces.push_back({right * 0.2, right});
                right *= 0.2;
            }
        } else if (i == panels - 1 && sing1) {
            double left = lo, width = hi - lo;
            for (int k = 0; k < 30; ++k) {
                pieces.push_back({left, left + 0.8 * width});
                left += 0.8 * width;
                width *= 0.2;
            }
        } else {
            pieces.push_back({lo, hi});
        }
    }
    C3 sum{};
    const auto& x = Q::abscissa();
    const auto& wt = Q::weights();
    for (const auto& [lo, hi] : pieces) {
        const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < x.size(); ++k) {
            for (double sgn : {1.0, -1.0}) {
                if (x[k] == 0.0 && sgn < 0)
                    continue;
                const C3 v = g(c + sgn * r * x[k]);
                for (int i = 0; i < 3; ++i)
                    sum[i] += r * wt[k] * v[i];
            }
        }
    }
    return sum;
}

// Re of the integral of phi along the straight segment from -> to.
inline R3 segment(cplx from, cplx to, const Surface& s, int panels = 200, bool sing0 = false, bool sing1 = false) {
    const cplx d = to - from;
    const C3 v = integrate01(
        [&](double t) {
            C3 f = phi(from + t * d, s);
            for (auto& c : f)
                c *= d;
            return f;
        },
        panels, sing0, sing1);
    return {v[0].real(), v[1].real(), v[2].real()};
}

inline R3 add(const R3& a, const R3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

inline bool is_branch_point(double x, const Surface& s) {
    for (double q : s.a)
        if (q == x)
            return true;
    for (double q : s.b)
        if (q == x)
            return true;
    return false;
}

// f(z) along a rectangular route: up (or down) from the basepoint, across at height H, then
// straight to z. Independent of the library's arc/ray routing.
inline R3 immersion(cplx z, const Surface& s, double x0, int panels = 200) {
    const double sgn = z.imag() < 0.0 ? -1.0 : 1.0;
    const double H = sgn * (1.0 + std::abs(z));
    const cplx p1{x0, H}, p2{z.real(), H};
    const bool end_sing = z.imag() == 0.0 && is_branch_point(z.real(), s);
    R3 f = segment(cplx{x0, 0.0}, p1, s, panels);
    f = add(f, segment(p1, p2, s, panels));
    f = add(f, segment(p2, z, s, panels, false, end_sing));
    return f;
}

}  // namespace oracle
