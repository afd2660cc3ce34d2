#include "maxgraph/weierstrass.hpp"

#include <limits>
#include <sstream>

namespace maxgraph {

namespace {

constexpr cplx kI{0.0, 1.0};

// One factor (z - num) / (z - den) raised to sign in {+1, -1}: returns (numerator root, denominator root).
struct Factor {
    double num;
    double den;
};

template <typename F>
void for_each_factor(const SurfaceParams& p, F&& fn) {
    for (int k = 1; k <= p.m(); ++k) {
        double top = p.a(2 * k), bottom = p.a(2 * k - 1);
        if (p.alpha(k) == 1)
            fn(Factor{top, bottom});
        else
            fn(Factor{bottom, top});
    }
    for (int k = 1; k <= p.n(); ++k) {
        double top = p.b(2 * k - 1), bottom = p.b(2 * k);
        if (p.beta(k) == 1)
            fn(Factor{top, bottom});
        else
            fn(Factor{bottom, top});
    }
}

}  // namespace

ExtendedComplex w_squared(cplx z, const SurfaceParams& p) {
    bool pole = false;
    if (z.imag() == 0.0) {
        // Real arithmetic keeps the value exactly real, so the branch tie-break sees a clean sign.
        const double x = z.real();
        double prod = 1.0;
        for_each_factor(p, [&](const Factor& f) {
            if (x == f.den)
                pole = true;
            else
                prod *= (x - f.num) / (x - f.den);
        });
        if (pole)
            return ExtendedComplex::infinity();
        return {cplx{prod, 0.0}, false};
    }
    cplx prod{1.0, 0.0};
    for_each_factor(p, [&](const Factor& f) { prod *= (z - f.num) / (z - f.den); });
    return {prod, false};
}

cplx log_derivative_w2(cplx z, const SurfaceParams& p) {
    cplx sum{};
    for_each_factor(p, [&](const Factor& f) { sum += 1.0 / (z - f.num) - 1.0 / (z - f.den); });
    return sum;
}

cplx select_branch(cplx w2) {
    if (w2.imag() == 0.0) {
        const double r = w2.real();
        return r >= 0.0 ? cplx{std::sqrt(r), 0.0} : cplx{0.0, std::sqrt(-r)};
    }
    cplx w = std::sqrt(w2);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0))
        w = -w;
    return w;
}

BranchedValue branch_w(cplx z, const SurfaceParams& p) {
    const ExtendedComplex w2 = w_squared(z, p);
    if (w2.infinite)
        return {z, ExtendedComplex::infinity()};
    return {z, {select_branch(w2.value), false}};
}

ExtendedComplex gauss_from_w(const ExtendedComplex& w) {
    if (w.infinite)
        return {cplx{-1.0, 0.0}, false};
    if (w.value == cplx{1.0, 0.0})
        return ExtendedComplex::infinity();
    return {(1.0 + w.value) / (1.0 - w.value), false};
}

Vec3 gauss_vector(const ExtendedComplex& G) {
    if (G.infinite)
        return {0.0, 0.0, 1.0};
    const double g2 = std::norm(G.value);
    const double scale = std::sqrt(g2 * g2 + 6.0 * g2 + 1.0);
    // The H^2 representative is (-2 Re G, -2 Im G, |G|^2 + 1) / (|G|^2 - 1); its sign picks the sheet.
    const double sheet = (g2 < 1.0 - 4.0 * std::numeric_limits<double>::epsilon()) ? -1.0 : 1.0;
    return {sheet * -2.0 * G.value.real() / scale, sheet * -2.0 * G.value.imag() / scale,
            sheet * (g2 + 1.0) / scale};
}

GaussValue gauss(cplx z, const SurfaceParams& p) {
    const ExtendedComplex G = gauss_from_w(branch_w(z, p).w);
    return {G, gauss_vector(G)};
}

FormTriple phi_from_w(cplx z, cplx w) {
    const cplx inv = 1.0 / w;
    return {-0.5 * (inv + w) / z, kI / z, 0.5 * (inv - w) / z};
}

FormTriple phi(cplx z, const SurfaceParams& p) {
    if (z == cplx{})
        throw Error(ErrorKind::BranchPointEvaluation, "z = 0 is an end, not a point of C*");
    const ExtendedComplex w = branch_w(z, p).w;
    if (w.infinite || w.is_zero())
        throw Error(ErrorKind::BranchPointEvaluation, "w is 0 or infinite at this point");
    return phi_from_w(z, w.value);
}

double metric_factor(cplx z, const SurfaceParams& p) {
    const FormTriple f = phi(z, p);
    const ExtendedComplex G = gauss_from_w(branch_w(z, p).w);
    if (G.infinite || G.is_zero())
        return 0.5 * (std::norm(f.phi1) + std::norm(f.phi2) - std::norm(f.phi3));
    const double g = std::abs(G.value);
    const double k = 1.0 / g - g;
    return k * k * std::norm(f.phi3) / 4.0;  // |dh| = |phi3|
}

namespace {

cplx regular_w(cplx z, const SurfaceParams& p, const char* what) {
    const ExtendedComplex w = branch_w(z, p).w;
    if (w.infinite || w.is_zero())
        throw Error(ErrorKind::BranchPointEvaluation, what);
    return w.value;
}

}  // namespace

cplx gauss_derivative(cplx z, const SurfaceParams& p) {
    const cplx w = regular_w(z, p, "dG/dz undefined at a branch point");
    if (w == cplx{1.0, 0.0})
        throw Error(ErrorKind::DegenerateGauss, "G has a pole where w = 1");
    const cplx dw = 0.5 * w * log_derivative_w2(z, p);
    return 2.0 * dw / ((1.0 - w) * (1.0 - w));
}

cplx dh_coefficient(cplx z, const SurfaceParams& p) {
    const cplx w = regular_w(z, p, "dh undefined at a branch point");
    return -0.5 * (1.0 / w - w) / z;
}

cplx hopf(cplx z, const SurfaceParams& p) {
    const cplx w = regular_w(z, p, "Hopf differential undefined at a branch point");
    const ExtendedComplex G = gauss_from_w({w, false});
    if (G.infinite || G.is_zero())
        throw Error(ErrorKind::DegenerateGauss, "G is 0 or infinite");
    return gauss_derivative(z, p) * dh_coefficient(z, p) / G.value;
}

cplx dg_over_g_dh(cplx z, const SurfaceParams& p) {
    const cplx w = regular_w(z, p, "dG/(G dh) undefined at a branch point");
    const ExtendedComplex G = gauss_from_w({w, false});
    if (G.infinite || G.is_zero())
        throw Error(ErrorKind::DegenerateGauss, "G is 0 or infinite");
    return gauss_derivative(z, p) / (G.value * dh_coefficient(z, p));
}

double end_value_w0(const SurfaceParams& p) {
    double prod = 1.0;
    for (int k = 1; k <= p.m(); ++k)
        prod *= std::pow(p.a(2 * k) / p.a(2 * k - 1), p.alpha(k));
    for (int k = 1; k <= p.n(); ++k)
        prod *= std::pow(p.b(2 * k - 1) / p.b(2 * k), p.beta(k));
    return std::sqrt(prod);
}

bool all_cones_same_direction(const SurfaceParams& p) {
    int up = 0, down = 0;
    for (int s : p.alphas())
        (s == -1 ? up : down)++;
    for (int s : p.betas())
        (s == 1 ? up : down)++;
    return up == 0 || down == 0;
}

SurfaceParams normalize_horizontal_end(const SurfaceParams& p, FreeCoordinate free) {
    if (all_cones_same_direction(p))
        throw Error(ErrorKind::Infeasible,
                    "all cones point the same way; the end at z = 0 cannot be horizontal");
    const int count = free.axis == Axis::Positive ? 2 * p.m() : 2 * p.n();
    if (free.index < 1 || free.index > count)
        throw Error(ErrorKind::InvalidArgument, "free coordinate index out of range");

    const int k = (free.index + 1) / 2;
    const double w0 = end_value_w0(p);
    RawParams raw = p.raw();
    if (free.axis == Axis::Positive) {
        const int s = p.alpha(k);
        const double own = std::pow(p.a(2 * k) / p.a(2 * k - 1), s);
        const double target = own / (w0 * w0);  // factor value making the full product 1
        const double ratio = std::pow(target, s);  // required a_{2k} / a_{2k-1}
        if (free.index == 2 * k)
            raw.a[2 * k - 1] = p.a(2 * k - 1) * ratio;
        else
            raw.a[2 * k - 2] = p.a(2 * k) / ratio;
    } else {
        const int s = p.beta(k);
        const double own = std::pow(p.b(2 * k - 1) / p.b(2 * k), s);
        const double target = own / (w0 * w0);
        const double ratio = std::pow(target, s);  // required b_{2k-1} / b_{2k}
        if (free.index == 2 * k - 1)
            raw.b[2 * k - 2] = p.b(2 * k) * ratio;
        else
            raw.b[2 * k - 1] = p.b(2 * k - 1) / ratio;
    }
    try {
        return SurfaceParams::validate(raw);
    } catch (const Error& e) {
        std::ostringstream os;
        os << "solved " << (free.axis == Axis::Positive ? "a_" : "b_") << free.index
           << " violates the ordering: " << e.what();
        throw Error(ErrorKind::Infeasible, os.str());
    }
}

}  // namespace maxgraph
