// SPDX-License-Identifier: Apache-2.0
#include "denseplan/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "denseplan/errors.hpp"

namespace denseplan {

double brent_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                  int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::domain_error("brent_root: no sign change on bracket");
    double c = a, fc = fa, d = b - a, e = d;
    const double eps = 2.2204460492503131e-16;
    for (int it = 0; it < max_iter; ++it) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {  // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {       // inverse quadratic
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

std::pair<double, double> expand_bracket(const std::function<double(double)>& f, double lo,
                                         double hi, double cap) {
    double flo = f(lo), fhi = f(hi);
    int guard = 0;
    while (flo * fhi > 0.0) {
        if (hi >= cap || ++guard > 200)
            throw infeasible_error("expand_bracket: no sign change up to cap");
        lo = std::max(lo * 0.5, 1e-12);
        hi = std::min(hi * 2.0, cap);
        flo = f(lo);
        fhi = f(hi);
    }
    return {lo, hi};
}

double polynomial_eval(const std::vector<double>& coeffs, double x) {
    double v = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

PolynomialRealRoots positive_real_roots(const std::vector<double>& coefficients) {
    std::vector<double> c = coefficients;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() < 2) throw std::domain_error("positive_real_roots: degenerate polynomial");
    const int n = static_cast<int>(c.size()) - 1;  // degree

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);

    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::fabs(v));

    PolynomialRealRoots out;
    out.coefficients = coefficients;
    auto poly = [&c](double x) { return polynomial_eval(c, x); };
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = solver.eigenvalues()[i];
        if (std::fabs(z.imag()) > 1e-8 * (1.0 + std::fabs(z.real()))) continue;
        double r = z.real();
        if (r <= 0.0) continue;
        // polish: try a sign-change bracket around the eigenvalue estimate
        for (double delta = 1e-8 * (1.0 + r); delta < 0.3 * (1.0 + r); delta *= 4.0) {
            const double a = std::max(r - delta, 1e-300), b = r + delta;
            if (poly(a) * poly(b) <= 0.0) {
                r = brent_root(poly, a, b, 1e-14 * (1.0 + r));
                break;
            }
        }
        if (std::fabs(poly(r)) > 1e-8 * (1.0 + cmax)) continue;  // spurious eigenvalue
        out.positive_real_roots.push_back(r);
    }
    std::sort(out.positive_real_roots.begin(), out.positive_real_roots.end());
    // dedupe clustered estimates
    auto last = std::unique(out.positive_real_roots.begin(), out.positive_real_roots.end(),
                            [](double x, double y) { return std::fabs(x - y) <= 1e-9 * (1.0 + std::fabs(x)); });
    out.positive_real_roots.erase(last, out.positive_real_roots.end());
    return out;
}

}  // namespace denseplan
