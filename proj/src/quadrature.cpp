#include "maxgraph/quadrature.hpp"

#include <limits>
#include <queue>
#include <vector>
#include <sstream>

namespace maxgraph {

namespace {

// Kronrod 15-point abscissae on [-1, 1] (nonnegative half); odd indices are the Gauss 7 nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    CVec3 kronrod{};
    double error = 0.0;
    double magnitude = 0.0;
};

Panel gk15(const VectorIntegrand& f, double lo, double hi, long& evals) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    CVec3 k{}, g{};
    double mag = 0.0;

    const CVec3 fc = f(c);
    ++evals;
    for (int i = 0; i < 3; ++i) {
        k[i] = kWgk[7] * fc[i];
        g[i] = kWg[3] * fc[i];
        mag += kWgk[7] * std::abs(fc[i]);
    }
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const CVec3 f1 = f(c - dx);
        const CVec3 f2 = f(c + dx);
        evals += 2;
        for (int i = 0; i < 3; ++i) {
            const cplx s = f1[i] + f2[i];
            k[i] += kWgk[j] * s;
            mag += kWgk[j] * (std::abs(f1[i]) + std::abs(f2[i]));
            if (j % 2 == 1)
                g[i] += kWg[j / 2] * s;
        }
    }
    Panel out;
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        out.kronrod[i] = h * k[i];
        err = std::max(err, std::abs(h * (k[i] - g[i])));
    }
    out.magnitude = std::abs(h) * mag;
    out.error = err;
    return out;
}

}  // namespace

QuadratureResult integrate_adaptive(const VectorIntegrand& f, double lo, double hi,
                                    const QuadratureOptions& opts) {
    QuadratureResult acc;
    if (lo == hi)
        return acc;

    struct Item {
        double lo, hi;
        int depth;
        Panel panel;
        bool operator<(const Item& o) const { return panel.error < o.panel.error; }
    };
    std::priority_queue<Item> queue;
    double total_err = 0.0;
    double total_mag = 0.0;
    auto push = [&](double a, double b, int depth) {
        Panel panel = gk15(f, a, b, acc.evaluations);
        if (!std::isfinite(panel.error) || !std::isfinite(panel.magnitude))
            throw Error(ErrorKind::QuadratureFailure, "non-finite integrand on the path");
        total_err += panel.error;
        total_mag += panel.magnitude;
        queue.push(Item{a, b, depth, panel});
    };
    push(lo, hi, 0);

    // Bisect the worst panel until the summed estimate meets the tolerance (or hits round-off).
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    while (total_err > std::max(opts.abs_tol, 50.0 * kEps * total_mag)) {
        Item worst = queue.top();
        if (worst.panel.error <= 50.0 * kEps * worst.panel.magnitude)
            break;  // the largest remaining error is pure round-off
        if (worst.depth >= opts.max_depth) {
            std::ostringstream os;
            os << "tolerance " << opts.abs_tol << " not reached: panel [" << worst.lo << ", " << worst.hi
               << "] still has error " << worst.panel.error << " at depth " << worst.depth;
            throw Error(ErrorKind::QuadratureFailure, os.str());
        }
        queue.pop();
        total_err -= worst.panel.error;
        total_mag -= worst.panel.magnitude;
        const double mid = 0.5 * (worst.lo + worst.hi);
        push(worst.lo, mid, worst.depth + 1);
        push(mid, worst.hi, worst.depth + 1);
    }

    // Sum small panels first.
    std::vector<Item> items;
    items.reserve(queue.size());
    while (!queue.empty()) {
        items.push_back(queue.top());
        queue.pop();
    }
    acc.error = 0.0;
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
        for (int i = 0; i < 3; ++i)
            acc.value[i] += it->panel.kronrod[i];
        acc.error += std::max(it->panel.error, 50.0 * kEps * it->panel.magnitude);
    }
    return acc;
}

}  // namespace maxgraph
