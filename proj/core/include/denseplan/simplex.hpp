// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace denseplan {

struct SimplexOptions {
    int max_iter = 300;           // per restart
    int restarts = 5;             // perturbed restarts, penalty escalated each time
    double feas_tol = 1e-3;       // constraint(x) >= -feas_tol counts as feasible
    double xtol = 1e-6;
    double ftol = 1e-10;
    double penalty0 = 1e4;
    double penalty_growth = 10.0;
    std::uint64_t seed = 42;
    std::vector<double> lower_bounds;  // positivity box; empty = 1e-9 everywhere
    std::vector<double> restart_lo;    // log-uniform restart window per coordinate
    std::vector<double> restart_hi;
};

struct SimplexTraceEntry {
    int restart;
    int iteration;
    double objective;
    double constraint;
};

struct SimplexResult {
    std::vector<double> x;
    double objective = 0.0;
    double constraint = 0.0;
    bool feasible = false;
    bool budget_exhausted = false;
    long evaluations = 0;
    std::vector<SimplexTraceEntry> trace;
};

/// Downhill simplex on objective(x) + mu * max(0, -constraint(x))^2 with a
/// positivity box. Runs `restarts` perturbed starts (log-uniform in
/// [restart_lo, restart_hi], first start = `start`), escalating mu each
/// restart, and returns the best feasible point (lowest objective, ties broken
/// by lowest first coordinate).
SimplexResult nelder_mead_penalized(const std::function<double(const std::vector<double>&)>& objective,
                                    const std::function<double(const std::vector<double>&)>& constraint,
                                    const std::vector<double>& start,
                                    const SimplexOptions& options = {});

}  // namespace denseplan
