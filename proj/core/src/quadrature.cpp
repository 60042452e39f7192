// SPDX-License-Identifier: Apache-2.0
#include "denseplan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "denseplan/errors.hpp"

namespace denseplan {
namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
const double kNodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
const double kWeightK[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss weights attach to the even-indexed Kronrod nodes.
const double kWeightG[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

struct Interval {
    double a, b, value, error;
};

void gk15(const std::function<double(double)>& f, Interval& iv, long& evals) {
    const double mid = 0.5 * (iv.a + iv.b);
    const double half = 0.5 * (iv.b - iv.a);
    double fv[15];
    const double f0 = f(mid);
    double k = kWeightK[0] * f0;
    double g = kWeightG[0] * f0;
    evals += 1;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i];
        const double y1 = f(mid - dx), y2 = f(mid + dx);
        evals += 2;
        k += kWeightK[i] * (y1 + y2);
        if ((i & 1) == 0) g += kWeightG[i / 2] * (y1 + y2);
        fv[i] = y1;
        fv[7 + i] = y2;
    }
    fv[0] = f0;
    for (int i = 0; i < 15; ++i)
        if (std::isnan(fv[i])) throw numerical_error("quadrature: integrand returned NaN");
    iv.value = k * half;
    const double diff = std::fabs((k - g) * half);
    // sharpen like QUADPACK when the embedded rule is converging
    iv.error = (200.0 * diff <= 1.0) ? std::pow(200.0 * diff, 1.5) : diff;
    if (iv.error == 0.0) iv.error = std::fabs(iv.value) * 1e-16;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, int max_intervals) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        res.evaluations = 1;
        return res;
    }
    std::vector<Interval> ivs;
    ivs.reserve(64);
    Interval first{a, b, 0.0, 0.0};
    gk15(f, first, res.evaluations);
    ivs.push_back(first);

    double total = first.value, err = first.error;
    while (err > std::max(tol, 1e-14 * std::fabs(total)) &&
           static_cast<int>(ivs.size()) < max_intervals) {
        // split the interval with the largest error estimate
        size_t worst = 0;
        for (size_t i = 1; i < ivs.size(); ++i)
            if (ivs[i].error > ivs[worst].error) worst = i;
        Interval w = ivs[worst];
        if (w.b - w.a < 1e-15 * (std::fabs(w.a) + std::fabs(w.b) + 1.0)) break;
        const double mid = 0.5 * (w.a + w.b);
        Interval left{w.a, mid, 0.0, 0.0}, right{mid, w.b, 0.0, 0.0};
        gk15(f, left, res.evaluations);
        gk15(f, right, res.evaluations);
        ivs[worst] = left;
        ivs.push_back(right);
        total = 0.0;
        err = 0.0;
        for (const Interval& iv : ivs) {
            total += iv.value;
            err += iv.error;
        }
    }
    res.value = total;
    res.abs_error_estimate = err;
    res.converged = err <= std::max(tol, 1e-12 * std::fabs(total));
    return res;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double tol,
                                         int max_intervals) {
    auto g = [&f](double t) {
        const double u = 1.0 - t;
        if (u <= 1e-300) return 0.0;  // integrand must vanish at infinity
        const double x = t / u;
        return f(x) / (u * u);
    };
    return integrate(g, 0.0, 1.0, tol, max_intervals);
}

}  // namespace denseplan
