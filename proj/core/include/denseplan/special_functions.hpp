// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace denseplan {

/// Gamma function. Throws std::domain_error at the poles (non-positive integers).
double gamma_fn(double x);

/// log|Gamma(x)| for x > 0.
double log_gamma_fn(double x);

/// Upper incomplete gamma Gamma(a, x) for x >= 0, including negative non-integer a.
/// Throws std::domain_error for x < 0 (and for x = 0 when a <= 0, where the
/// integral diverges).
double upper_incomplete_gamma(double a, double x);

/// Regularized incomplete beta I_x(a, b), a > 0, b > 0, 0 <= x <= 1.
double regularized_incomplete_beta(double a, double b, double x);

/// Gauss hypergeometric 2F1(a, b; c; d) for d <= 0 (plus |d| < 1 by series).
/// Handles unboundedly negative d for the parameter shapes that arise from
/// interference statistics (c = b + 1, or c > b > 0 via the Euler integral).
/// Throws std::domain_error if c is a non-positive integer, numerical_error if
/// no evaluation path converges.
double hyp2f1(double a, double b, double c, double d);

}  // namespace denseplan
