// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace denseplan {

/// Brent's method on [lo, hi]; requires f(lo)*f(hi) <= 0 (throws std::domain_error
/// otherwise). Returns a root with bracket width <= tol.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-12, int max_iter = 200);

/// Expands [lo, hi] geometrically (halving lo, doubling hi) until f changes sign.
/// Returns the bracket, or throws infeasible_error once hi exceeds cap.
std::pair<double, double> expand_bracket(const std::function<double(double)>& f, double lo,
                                         double hi, double cap = 1e6);

struct PolynomialRealRoots {
    std::vector<double> coefficients;        // ascending degree
    std::vector<double> positive_real_roots; // sorted ascending
};

/// Horner evaluation, coefficients in ascending degree.
double polynomial_eval(const std::vector<double>& coeffs, double x);

/// All strictly positive real roots of the polynomial, via companion-matrix
/// eigenvalues, each polished by brent_root where a sign-change bracket exists.
/// Throws std::domain_error for an all-zero polynomial.
PolynomialRealRoots positive_real_roots(const std::vector<double>& coefficients);

}  // namespace denseplan
