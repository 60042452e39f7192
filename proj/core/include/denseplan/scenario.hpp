// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace denseplan {

/// Two-state linear BS power model: active cost amp_slope*P_tx + circuit_w,
/// sleeping cost sleep_w.
struct PowerModel {
    double amp_slope = 1.0;   // reciprocal of the PA drain efficiency, >= 1
    double circuit_w = 0.0;   // W
    double sleep_w = 0.0;     // W
};

struct TierConfig {
    std::string name;          // optional label for reports
    double density = 0.0;      // BSs/km^2
    double tx_power_w = 1.0;   // W
    double bias_linear = 1.0;  // cell-selection weight (parsed from dB)
    double pathloss = 4.0;     // alpha, > 2
    double nakagami_m = 1.0;   // >= 0.5
    double shadow_mean_db = 0.0;
    double shadow_std_db = 0.0;
    PowerModel power;
};

struct NetworkScenario {
    std::vector<TierConfig> tiers;
    double ue_density = 0.0;    // UEs/km^2
    double noise_w = 0.0;       // W, at the 1 km reference
    double sinr_gap_linear = 1.0;
};

struct TrafficSlot {
    int hour_begin = 0;        // [hour_begin, hour_end), 24h clock
    int hour_end = 0;
    double relative_load = 1.0;  // fraction of the reference UE density
};

struct TrafficProfile {
    std::vector<TrafficSlot> slots;

    bool empty() const { return slots.empty(); }
    double peak_load() const;
    int total_hours() const;
};

struct RateRequirement {
    double r0 = 0.0;  // b/s/Hz, > 0
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// E{chi^(2/alpha)} for log-normal shadowing given in dB; equals 1 for
/// degenerate shadowing. Requires alpha > 2 so the moment is finite.
double shadow_fractional_moment(const TierConfig& tier);

/// Tier density rescaled by the shadowing displacement moment.
double displaced_density(const TierConfig& tier);

/// Power drawn by one BS of this tier in transmit mode (W).
double active_cost(const TierConfig& tier);

/// Throws std::domain_error when an invariant is violated.
void validate(const NetworkScenario& scenario);
void validate(const TrafficProfile& profile);

/// Built-in dense-urban 24 h profile: loads from the 20..140% grid, trough at
/// 4-6 am, sustained 140% peak 4-10 pm, time-weighted mean exactly 100%.
TrafficProfile default_traffic_profile();

/// Copy of the scenario with the UE density scaled by `relative_load`.
NetworkScenario scaled_load(const NetworkScenario& scenario, double relative_load);

}  // namespace denseplan
