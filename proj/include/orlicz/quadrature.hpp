#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

// Gauss 7 / Kronrod 15 panel. Returns the K15 value; err receives an estimate
// of the panel error derived from |K15 - G7|.
template <class Func>
double quad_g7k15(const Func& f, double a, double b, double& err) {
    // node, Gauss weight, Kronrod weight (nodes are +/- symmetric)
    static const double nw[8][3] = {
        {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
        {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
        {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
        {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
        {0.207784955007898468, 0.0,                  0.204432940075298892},
        {0.586087235467691130, 0.0,                  0.169004726639267903},
        {0.864864423359769073, 0.0,                  0.104790010322250184},
        {0.991455371120812639, 0.0,                  0.022935322010529225},
    };
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double g7 = nw[0][1] * f0;
    double k15 = nw[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * nw[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += nw[i][1] * fi;
        k15 += nw[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    err = std::fabs(k15 - g7);
    return k15;
}

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-300;  // floor for integrals that are exactly zero
    std::size_t max_intervals = 10000;
};

// Adaptive bisection on a stack of panels. Throws NonConvergence when the
// interval budget runs out before every panel meets the tolerance.
template <class Func>
double integrate(const Func& f, double a, double b, QuadratureOptions opt = {}) {
    if (!(b > a)) return 0.0;

    double err0 = 0.0;
    const double whole = quad_g7k15(f, a, b, err0);
    // tolerance target against the first whole-interval estimate
    const double scale = std::max(std::fabs(whole), opt.abs_tol);

    std::vector<std::pair<double, double>> stack;
    stack.reserve(64);
    stack.emplace_back(a, b);
    double sum = 0.0;
    std::size_t used = 1;
    while (!stack.empty()) {
        const auto [lo, hi] = stack.back();
        stack.pop_back();
        double err = 0.0;
        const double s = quad_g7k15(f, lo, hi, err);
        const double width_share = (hi - lo) / (b - a);
        if (err <= opt.rel_tol * scale * std::max(width_share, 1e-6) ||
            err <= opt.abs_tol) {
            sum += s;
            continue;
        }
        if (used + 2 > opt.max_intervals || hi - lo < 1e-15 * (b - a)) {
            throw NonConvergence("adaptive quadrature did not reach tolerance");
        }
        used += 2;
        const double mid = 0.5 * (lo + hi);
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    return sum;
}

// Convenience: integrate with interior breakpoints (integrand kinks).
template <class Func>
double integrate_split(const Func& f, double a, double b,
                       std::initializer_list<double> breaks,
                       QuadratureOptions opt = {}) {
    std::vector<double> pts{a};
    for (double x : breaks)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        sum += integrate(f, pts[i], pts[i + 1], opt);
    return sum;
}

} // namespace orlicz
