// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace denseplan {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod 15(7) over [a, b]. Splits the worst interval until the
/// summed error estimate drops below max(tol, rel_tol*|value|) or the interval
/// budget runs out. Throws numerical_error if the integrand returns NaN.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-8, int max_intervals = 4000);

/// Integral over (0, inf) via the substitution x = t/(1-t).
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double tol = 1e-8, int max_intervals = 4000);

}  // namespace denseplan
