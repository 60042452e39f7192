// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "denseplan/rate.hpp"
#include "denseplan/scenario.hpp"
#include "denseplan/simplex.hpp"

namespace denseplan {

enum class SolverKind { brent, simplex, closed_lower, closed_upper };

struct DeploymentSolution {
    std::vector<double> densities;   // BSs/km^2 per tier
    double objective = 0.0;          // W/km^2
    double achieved_rate = 0.0;      // b/s/Hz
    SolverKind solver = SolverKind::brent;
    bool feasible = false;
    bool boundary = false;           // requirement already met as density -> 0
    bool degenerate_ridge = false;   // objective flat along a tier exchange
    std::vector<SimplexTraceEntry> trace;
};

struct OptimizeOptions {
    double rate_tol = 1e-4;      // |rate(lambda*) - r0| target for the scalar path
    double feas_tol = 1e-3;
    double density_cap = 1e6;    // BSs/km^2 search ceiling
    int restarts = 5;
    std::uint64_t seed = 42;
    RateOptions rate{1e-4, false};  // solver-internal rate tolerance; final
                                    // figures are re-evaluated more tightly
};

/// Minimum single-tier density meeting the rate floor, by bracketed scalar
/// root-finding on rate(lambda) - r0 (rate is strictly increasing in lambda).
/// Throws infeasible_error when the rate saturates below r0 up to the cap.
DeploymentSolution optimize_single_tier(const NetworkScenario& scenario_template, double r0,
                                        const OptimizeOptions& options = {});

/// Multi-tier minimum-cost deployment via penalized downhill simplex with
/// perturbed restarts; deterministic given the seed.
DeploymentSolution optimize_multi_tier(const NetworkScenario& scenario_template, double r0,
                                       const OptimizeOptions& options = {});

/// Closed-form density bracket for the interference-limited Rayleigh
/// pathloss-4 regime: worst case from the closed-form lower rate bound, best
/// case from the upper one. Density recovered by inverting the load-aware
/// activity relation; the activity root is the largest positive real root in
/// (0,1) of a polynomial in x = sqrt(activity).
struct DensityBounds {
    double upper = 0.0;            // deploying this always meets r0
    double lower = 0.0;            // no valid deployment below this
    bool upper_boundary = false;   // r0 met at full load: bound degenerates to 0
    bool lower_boundary = false;
    double upper_activity = 1.0;   // recovered activity at each bound
    double lower_activity = 1.0;
};
DensityBounds closed_form_density_bounds(double ue_density, double shadow_moment, double r0);

/// Coefficient vectors (ascending degree) of the activity polynomials behind
/// closed_form_density_bounds, in x = sqrt(activity). Exposed so the root can
/// be cross-checked independently.
std::vector<double> worst_case_activity_polynomial(double r0);
std::vector<double> best_case_activity_polynomial(double r0);

/// Equal-parameter multi-tier reduction: solves the single-tier problem and
/// returns the uniform split (total density is what matters; flagged as a
/// degenerate ridge).
DeploymentSolution multi_tier_equal_params_reduction(const NetworkScenario& scenario, double r0,
                                                     const OptimizeOptions& options = {});

}  // namespace denseplan
