// SPDX-License-Identifier: Apache-2.0
#include "denseplan/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "denseplan/errors.hpp"
#include "denseplan/quadrature.hpp"

namespace denseplan {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::fabs(x - std::nearbyint(x)) < 1e-12;
}

// Maclaurin series after a Pfaff transform; caller guarantees |s| < 1.
double gauss_series(double a, double b, double c, double s) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 100000; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * s;
        sum += term;
        if (std::fabs(term) <= 1e-16 * std::fabs(sum)) return sum;
    }
    throw numerical_error("hyp2f1: series did not converge");
}

// J(p, w) = int_0^1 t^{p-1}/(1 + w t) dt for p in (0, 1), w > ~9,
// via the exact head term and the alternating tail expansion of
// int_w^inf u^{p-1}/(1+u) du.
double J_fractional(double p, double w) {
    double head = kPi / std::sin(kPi * p) * std::pow(w, -p);
    double tail = 0.0, sign = 1.0;
    for (int k = 0; k < 400; ++k) {
        const double t = sign * std::pow(w, -1.0 - k) / (k + 1.0 - p);
        tail += t;
        if (std::fabs(t) < 1e-18 * (std::fabs(head) + std::fabs(tail) + 1e-300)) break;
        sign = -sign;
    }
    return head - tail;
}

// 2F1(1, b; b+1; -w) = b * int_0^1 t^{b-1}/(1+wt) dt, b in (0, 2), large w.
double hyp2f1_a1(double b, double w) {
    double J;
    if (b > 1.0)
        J = (1.0 / w) * (1.0 / (b - 1.0) - J_fractional(b - 1.0, w));
    else
        J = J_fractional(b, w);
    return b * J;
}

// 2F1(a, b; b+1; -w) = b w^{-b} B(b, a-b) I_{w/(1+w)}(b, a-b), a-b > 0, large w.
double hyp2f1_cbp1(double a, double b, double w) {
    const double x = w / (1.0 + w);
    const double lB = log_gamma_fn(b) + log_gamma_fn(a - b) - log_gamma_fn(a);
    return b * std::exp(-b * std::log(w) + lB) * regularized_incomplete_beta(b, a - b, x);
}

// Euler integral Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 t^{b-1}(1-t)^{c-b-1}(1-dt)^{-a} dt,
// valid for c > b > 0, d <= 0. Endpoint singularities removed by splitting at 1/2
// and substituting each half with a power map.
double hyp2f1_euler(double a, double b, double c, double d) {
    const double cb = c - b;
    // halves substituted with power maps so the endpoint singularities vanish
    auto left = [&](double v) {
        const double t = 0.5 * std::pow(v, 1.0 / b);
        return std::pow(0.5, b) / b * std::pow(1.0 - t, cb - 1.0) * std::pow(1.0 - d * t, -a);
    };
    auto right = [&](double v) {
        const double omt = 0.5 * std::pow(v, 1.0 / cb);  // 1 - t
        const double t = 1.0 - omt;
        return std::pow(0.5, cb) / cb * std::pow(t, b - 1.0) * std::pow(1.0 - d * t, -a);
    };
    QuadratureResult l = integrate(left, 0.0, 1.0, 1e-12);
    QuadratureResult r = integrate(right, 0.0, 1.0, 1e-12);
    if (!l.converged || !r.converged)
        throw numerical_error("hyp2f1: Euler integral did not converge");
    const double lg = log_gamma_fn(c) - log_gamma_fn(b) - log_gamma_fn(cb);
    return std::exp(lg) * (l.value + r.value);
}

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer");
    return std::tgamma(x);
}

double log_gamma_fn(double x) {
    if (x <= 0.0) throw std::domain_error("log_gamma_fn: requires x > 0");
    return std::lgamma(x);
}

double upper_incomplete_gamma(double a, double x) {
    if (x < 0.0) throw std::domain_error("upper_incomplete_gamma: x < 0");
    if (x == 0.0) {
        if (a <= 0.0) throw std::domain_error("upper_incomplete_gamma: divergent at x=0 for a<=0");
        return gamma_fn(a);
    }
    // Lift negative a with Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a; safe
    // for small x where the power term dominates. For larger x the continued
    // fraction below handles negative a directly (no cancellation).
    if (a < 0.0 && x <= 1.0) {
        const double up = upper_incomplete_gamma(a + 1.0, x);
        return (up - std::pow(x, a) * std::exp(-x)) / a;
    }
    if (a == 0.0 && x <= 1.0) {
        // Gamma(0, x) = E1(x), alternating series near the origin
        const double euler_gamma = 0.5772156649015328606;
        double sum = 0.0, term = -1.0;
        for (int n = 1; n < 60; ++n) {
            term *= -x / n;
            sum += term / n;
            if (std::fabs(term) < 1e-18) break;
        }
        return -euler_gamma - std::log(x) + sum;
    }
    if (a < 0.0 || x > a + 1.0) {
        // Lentz continued fraction for Gamma(a, x), valid for x > 0
        const double tiny = 1e-300;
        double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
        for (int i = 1; i <= 500; ++i) {
            const double an = -i * (i - a);
            b += 2.0;
            d = an * d + b;
            if (std::fabs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::fabs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const double delta = d * c;
            h *= delta;
            if (std::fabs(delta - 1.0) < 1e-16) break;
        }
        return std::exp(-x + a * std::log(x)) * h;
    }
    // small x, a > 0: series for the lower incomplete gamma
    double sum = 1.0 / a, term = sum;
    for (int n = 1; n < 1000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    const double lower = sum * std::exp(-x + a * std::log(x));
    return gamma_fn(a) - lower;
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("incomplete_beta: a, b must be positive");
    if (x < 0.0 || x > 1.0) throw std::domain_error("incomplete_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    // continued fraction (Lentz); use the symmetry for x past the mean
    if (x > (a + 1.0) / (a + b + 2.0))
        return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
    const double lfront =
        a * std::log(x) + b * std::log1p(-x) - std::log(a) -
        (log_gamma_fn(a) + log_gamma_fn(b) - log_gamma_fn(a + b));
    const double tiny = 1e-300;
    double c = 1.0, d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(lfront) * h;
}

double hyp2f1(double a, double b, double c, double d) {
    if (is_nonpositive_integer(c))
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    if (d == 0.0) return 1.0;
    if (a == 0.0 || b == 0.0) return 1.0;
    if (d > 0.0) {
        if (d >= 1.0) throw std::domain_error("hyp2f1: d >= 1 unsupported");
        return gauss_series(a, b, c, d);
    }
    const double s = d / (d - 1.0);  // Pfaff map, s in (0, 1) for d < 0
    if (s <= 0.85) {
        // transformed series converges quickly
        const double viaA = std::pow(1.0 - d, -a);
        return viaA * gauss_series(a, c - b, c, s);
    }
    const double w = -d;
    // structural fast paths for c = b + 1 (and the symmetric c = a + 1)
    if (std::fabs(c - (b + 1.0)) < 1e-12 && b > 0.0) {
        if (a - b > 0.0) return hyp2f1_cbp1(a, b, w);
        if (std::fabs(a - 1.0) < 1e-14 && b < 2.0) return hyp2f1_a1(b, w);
    }
    if (std::fabs(c - (a + 1.0)) < 1e-12 && a > 0.0) {
        if (b - a > 0.0) return hyp2f1_cbp1(b, a, w);
        if (std::fabs(b - 1.0) < 1e-14 && a < 2.0) return hyp2f1_a1(a, w);
    }
    if (c > b && b > 0.0) return hyp2f1_euler(a, b, c, d);
    if (c > a && a > 0.0) return hyp2f1_euler(b, a, c, d);
    throw numerical_error("hyp2f1: no convergent path for these parameters");
}

}  // namespace denseplan
