// SPDX-License-Identifier: Apache-2.0
#include "denseplan/power.hpp"

#include <cmath>
#include <stdexcept>

#include "denseplan/errors.hpp"

namespace denseplan {
namespace {

DeploymentSolution solve(const NetworkScenario& scn, double r0, const OptimizeOptions& opt) {
    if (scn.tiers.size() == 1) return optimize_single_tier(scn, r0, opt);
    return optimize_multi_tier(scn, r0, opt);
}

std::string slot_label(const TrafficSlot& s) {
    return std::to_string(s.hour_begin) + "-" + std::to_string(s.hour_end);
}

}  // namespace

double area_power(const std::vector<TierConfig>& tiers, const std::vector<double>& active,
                  const std::vector<double>& sleeping) {
    if (active.size() != tiers.size() || sleeping.size() != tiers.size())
        throw std::domain_error("area_power: density vectors must match tier count");
    double total = 0.0;
    for (size_t i = 0; i < tiers.size(); ++i) {
        if (active[i] < 0.0 || sleeping[i] < 0.0)
            throw std::domain_error("area_power: negative density");
        total += active[i] * active_cost(tiers[i]) + sleeping[i] * tiers[i].power.sleep_w;
    }
    return total;
}

double savings_per_area(const std::vector<double>& full_densities,
                        const std::vector<double>& partial_densities,
                        const std::vector<TierConfig>& tiers) {
    if (full_densities.size() != tiers.size() || partial_densities.size() != tiers.size())
        throw std::domain_error("savings_per_area: density vectors must match tier count");
    double s = 0.0;
    for (size_t i = 0; i < tiers.size(); ++i) {
        const double gap = full_densities[i] - partial_densities[i];
        if (gap < -1e-12) throw std::domain_error("savings_per_area: partial exceeds full");
        s += std::max(gap, 0.0) * (active_cost(tiers[i]) - tiers[i].power.sleep_w);
    }
    return s;
}

SavingsReport daily_savings(const NetworkScenario& scenario_template,
                            const TrafficProfile& profile, double r0,
                            const OptimizeOptions& options) {
    validate(profile);
    const double peak = profile.peak_load();

    SavingsReport report;
    DeploymentSolution full = solve(scaled_load(scenario_template, peak), r0, options);
    if (!full.feasible) throw infeasible_error("daily_savings: peak load has no feasible deployment");
    report.deployed_densities = full.densities;
    const double full_power = area_power(scenario_template.tiers, full.densities,
                                         std::vector<double>(full.densities.size(), 0.0));

    double saved_hours = 0.0, full_hours = 0.0;
    for (const TrafficSlot& slot : profile.slots) {
        SavingsHour h;
        h.label = slot_label(slot);
        h.hours = slot.hour_end - slot.hour_begin;
        h.relative_load = slot.relative_load;
        h.consumption_full = full_power;
        try {
            DeploymentSolution part =
                solve(scaled_load(scenario_template, slot.relative_load), r0, options);
            if (!part.feasible) throw infeasible_error("hour infeasible");
            // sizing is capped by the deployment; sleep the rest
            std::vector<double> active(part.densities.size());
            std::vector<double> sleeping(part.densities.size());
            for (size_t i = 0; i < active.size(); ++i) {
                active[i] = std::min(part.densities[i], full.densities[i]);
                sleeping[i] = full.densities[i] - active[i];
            }
            h.active_densities = active;
            h.consumption_with_sleep = area_power(scenario_template.tiers, active, sleeping);
            h.savings = savings_per_area(full.densities, active, scenario_template.tiers);
            h.relative_saving = full_power > 0.0 ? h.savings / full_power : 0.0;
        } catch (const infeasible_error&) {
            report.all_hours_feasible = false;
            h.active_densities = full.densities;
            h.consumption_with_sleep = full_power;
        }
        report.hours.push_back(h);
        saved_hours += h.savings * h.hours;
        full_hours += h.consumption_full * h.hours;
    }
    report.daily_relative_saving = full_hours > 0.0 ? saved_hours / full_hours : 0.0;
    return report;
}

}  // namespace denseplan
