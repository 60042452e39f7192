// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "denseplan/optimizer.hpp"
#include "denseplan/scenario.hpp"

namespace denseplan {

/// Area power (W/km^2) for per-tier active and sleeping densities.
/// Throws std::domain_error on negative densities.
double area_power(const std::vector<TierConfig>& tiers, const std::vector<double>& active,
                  const std::vector<double>& sleeping);

/// Sleep-mode savings (W/km^2) between the always-on deployment and the
/// partial-load one: sum_t (full_t - partial_t) * (active_cost_t - sleep_t).
/// Requires partial <= full per tier.
double savings_per_area(const std::vector<double>& full_densities,
                        const std::vector<double>& partial_densities,
                        const std::vector<TierConfig>& tiers);

struct SavingsHour {
    std::string label;            // "16-22"
    int hours = 1;                // slot length
    double relative_load = 1.0;
    std::vector<double> active_densities;
    double consumption_with_sleep = 0.0;  // W/km^2
    double consumption_full = 0.0;        // W/km^2, all deployed BSs transmitting
    double savings = 0.0;
    double relative_saving = 0.0;
};

struct SavingsReport {
    std::vector<double> deployed_densities;  // sized at the peak load
    std::vector<SavingsHour> hours;
    double daily_relative_saving = 0.0;      // time-weighted
    bool all_hours_feasible = true;
};

/// Sizes the deployment at the peak profile load, then re-optimizes the active
/// density per hour; non-serving BSs sleep. Propagates optimizer infeasibility
/// per hour (the report keeps going, the flag clears).
SavingsReport daily_savings(const NetworkScenario& scenario_template,
                            const TrafficProfile& profile, double r0,
                            const OptimizeOptions& options = {});

}  // namespace denseplan
