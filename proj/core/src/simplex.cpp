// SPDX-License-Identifier: Apache-2.0
#include "denseplan/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <future>
#include <random>
#include <stdexcept>

namespace denseplan {
namespace {

struct Penalized {
    const std::function<double(const std::vector<double>&)>& objective;
    const std::function<double(const std::vector<double>&)>& constraint;
    const std::vector<double>& lb;
    double mu;
    long* evals;

    double operator()(const std::vector<double>& x) const {
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] < lb[i]) return std::numeric_limits<double>::infinity();
        ++*evals;
        const double g = constraint(x);
        const double viol = g < 0.0 ? -g : 0.0;
        return objective(x) + mu * viol * viol;
    }
};

// one classic Nelder-Mead run; returns best vertex
std::vector<double> nm_run(const Penalized& f, std::vector<double> x0, int max_iter,
                           double xtol, double ftol, bool* exhausted) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fx(n + 1);
    for (size_t i = 0; i < n; ++i) {
        double step = 0.25 * std::fabs(x0[i]);
        if (step == 0.0) step = 0.1;
        simplex[i + 1][i] += step;
    }
    for (size_t i = 0; i <= n; ++i) fx[i] = f(simplex[i]);

    auto order = [&]() {
        std::vector<size_t> idx(n + 1);
        for (size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fx[a] < fx[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (size_t i = 0; i <= n; ++i) {
            s2.push_back(simplex[idx[i]]);
            f2.push_back(fx[idx[i]]);
        }
        simplex.swap(s2);
        fx.swap(f2);
    };

    *exhausted = true;
    for (int it = 0; it < max_iter; ++it) {
        order();
        // convergence on simplex size and spread
        double sz = 0.0;
        for (size_t i = 0; i < n; ++i)
            sz = std::max(sz, std::fabs(simplex[n][i] - simplex[0][i]) /
                                  (1.0 + std::fabs(simplex[0][i])));
        if (sz < xtol && std::fabs(fx[n] - fx[0]) < ftol * (1.0 + std::fabs(fx[0]))) {
            *exhausted = false;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
        }
        for (size_t j = 0; j < n; ++j) centroid[j] /= static_cast<double>(n);

        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (size_t j = 0; j < n; ++j)
                p[j] = centroid[j] + coef * (simplex[n][j] - centroid[j]);
            return p;
        };
        std::vector<double> xr = blend(-1.0);
        const double fr = f(xr);
        if (fr < fx[0]) {
            std::vector<double> xe = blend(-2.0);
            const double fe = f(xe);
            if (fe < fr) { simplex[n] = xe; fx[n] = fe; }
            else         { simplex[n] = xr; fx[n] = fr; }
        } else if (fr < fx[n - 1]) {
            simplex[n] = xr;
            fx[n] = fr;
        } else {
            std::vector<double> xc = blend(fr < fx[n] ? -0.5 : 0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, fx[n])) {
                simplex[n] = xc;
                fx[n] = fc;
            } else {  // shrink toward the best vertex
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j)
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    fx[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return simplex[0];
}

}  // namespace

SimplexResult nelder_mead_penalized(const std::function<double(const std::vector<double>&)>& objective,
                                    const std::function<double(const std::vector<double>&)>& constraint,
                                    const std::vector<double>& start,
                                    const SimplexOptions& options) {
    const size_t n = start.size();
    if (n == 0) throw std::domain_error("nelder_mead_penalized: empty start point");
    std::vector<double> lb = options.lower_bounds;
    if (lb.empty()) lb.assign(n, 1e-9);
    if (lb.size() != n) throw std::domain_error("nelder_mead_penalized: lower_bounds size mismatch");
    for (size_t i = 0; i < n; ++i)
        if (start[i] <= lb[i]) throw std::domain_error("nelder_mead_penalized: start not strictly inside box");

    std::vector<double> rlo = options.restart_lo, rhi = options.restart_hi;
    if (rlo.size() != n || rhi.size() != n) {
        rlo.assign(n, 0.0);
        rhi.assign(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            rlo[i] = std::max(lb[i] * 2.0, start[i] / 100.0);
            rhi[i] = start[i] * 100.0;
        }
    }

    const int restarts = std::max(1, options.restarts);
    std::vector<SimplexResult> cands(restarts);
    // restarts are mutually independent; run them concurrently with per-restart
    // substreams so the outcome is invariant to scheduling
    std::vector<std::future<void>> jobs;
    for (int r = 0; r < restarts; ++r) {
        jobs.push_back(std::async(std::launch::async, [&, r]() {
            std::vector<double> x0(n);
            if (r == 0) {
                x0 = start;
            } else {
                std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ull + r);
                for (size_t i = 0; i < n; ++i) {
                    std::uniform_real_distribution<double> u(std::log(rlo[i]), std::log(rhi[i]));
                    x0[i] = std::exp(u(rng));
                }
            }
            const double mu = options.penalty0 * std::pow(options.penalty_growth, r);
            long evals = 0;
            Penalized pf{objective, constraint, lb, mu, &evals};
            bool exhausted = false;
            std::vector<double> x =
                nm_run(pf, x0, options.max_iter, options.xtol, options.ftol, &exhausted);
            SimplexResult& cand = cands[r];
            cand.x = x;
            cand.objective = objective(x);
            cand.constraint = constraint(x);
            cand.feasible = cand.constraint >= -options.feas_tol;
            cand.budget_exhausted = exhausted;
            cand.evaluations = evals;
        }));
    }
    for (auto& j : jobs) j.get();

    SimplexResult best;
    best.objective = std::numeric_limits<double>::infinity();
    SimplexResult best_any = best;  // least constraint violation, if nothing feasible
    best_any.constraint = -std::numeric_limits<double>::infinity();
    long total_evals = 0;
    std::vector<SimplexTraceEntry> trace;
    auto better = [](const SimplexResult& a, const SimplexResult& b) {
        if (a.objective != b.objective) return a.objective < b.objective;
        return a.x[0] < b.x[0];  // deterministic tie-break
    };
    for (int r = 0; r < restarts; ++r) {
        const SimplexResult& cand = cands[r];
        total_evals += cand.evaluations;
        trace.push_back({r, options.max_iter, cand.objective, cand.constraint});
        if (cand.feasible && (!best.feasible || better(cand, best))) best = cand;
        if (cand.constraint > best_any.constraint) best_any = cand;
    }
    SimplexResult out = best.feasible ? best : best_any;  // caller inspects .feasible
    out.evaluations = total_evals;
    out.trace = trace;
    return out;
}

}  // namespace denseplan
