// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "denseplan/scenario.hpp"

namespace denseplan {

enum class RateMethod { general, homogeneous_integral, closed_lower, closed_upper };

struct RateResult {
    double rate = 0.0;                      // b/s/Hz
    std::vector<double> per_tier;           // contributions, sum == rate
    RateMethod method = RateMethod::general;
    double quad_error = 0.0;
    long evaluations = 0;
    bool converged = true;
    bool interference_free = false;         // sentinel: no interference and no noise
};

struct RateOptions {
    double tol = 1e-6;              // outer-integral absolute tolerance (b/s/Hz scale)
    bool force_full_load = false;   // evaluate with every tier at activity 1
};

/// Sentinel returned when the SIR is unbounded (no noise, no active interferer).
inline constexpr double kRateCap = 1e6;

/// Average rate of the typical UE: per serving tier, the conditional MGF-based
/// z-integral averaged over the serving-distance pdf, weighted by the tier
/// connection probability.
RateResult average_rate(const NetworkScenario& scenario, const RateOptions& options = {});

/// Interference-limited homogeneous reduction (single tier, Rayleigh fading,
/// zero noise): single integral for general pathloss; for alpha = 4 both
/// algebraic forms are evaluated and must agree to 1e-8.
/// Throws std::domain_error if the preconditions are not met.
RateResult homogeneous_rate(const NetworkScenario& scenario, const RateOptions& options = {});

/// Same reduction parameterized directly by the activity probability.
double homogeneous_rate_integral(double activity, double alpha = 4.0);

/// Closed-form lower/upper bounds of the interference-limited homogeneous
/// rate at pathloss 4 (Rayleigh). Requires activity in (0, 1].
struct RateBounds {
    double lower = 0.0;
    double upper = 0.0;
};
RateBounds closed_form_rate_bounds(double activity);

/// True iff the rate strictly increases along the density grid. The evaluator
/// defaults to the analytic engine; tests may inject stubs.
bool rate_is_monotone_check(const NetworkScenario& scenario, const std::vector<double>& density_grid,
                            const std::function<double(double)>& rate_of_density = {});

}  // namespace denseplan
