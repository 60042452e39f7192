// SPDX-License-Identifier: Apache-2.0
#include "denseplan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace denseplan {

namespace {
constexpr double kDbLn = 0.23025850929940457;  // ln(10)/10
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double shadow_fractional_moment(const TierConfig& tier) {
    if (tier.pathloss <= 2.0)
        throw std::domain_error("shadow_fractional_moment: pathloss must exceed 2");
    const double s = 2.0 / tier.pathloss;
    return std::exp(s * tier.shadow_mean_db * kDbLn +
                    0.5 * s * s * tier.shadow_std_db * tier.shadow_std_db * kDbLn * kDbLn);
}

double displaced_density(const TierConfig& tier) {
    return tier.density * shadow_fractional_moment(tier);
}

double active_cost(const TierConfig& tier) {
    return tier.power.amp_slope * tier.tx_power_w + tier.power.circuit_w;
}

void validate(const NetworkScenario& scenario) {
    if (scenario.tiers.empty()) throw std::domain_error("scenario: needs at least one tier");
    if (scenario.ue_density < 0.0) throw std::domain_error("scenario: negative UE density");
    if (scenario.noise_w < 0.0) throw std::domain_error("scenario: negative noise power");
    if (scenario.sinr_gap_linear < 1.0)
        throw std::domain_error("scenario: SINR gap below 1 (0 dB)");
    for (const TierConfig& t : scenario.tiers) {
        if (t.density < 0.0) throw std::domain_error("tier: negative density");
        if (t.tx_power_w <= 0.0) throw std::domain_error("tier: non-positive tx power");
        if (t.bias_linear <= 0.0) throw std::domain_error("tier: non-positive bias");
        if (t.pathloss <= 2.0) throw std::domain_error("tier: pathloss must exceed 2");
        if (t.nakagami_m < 0.5) throw std::domain_error("tier: nakagami m below 0.5");
        if (t.power.amp_slope < 1.0) throw std::domain_error("tier: amp slope below 1");
        if (t.power.circuit_w < t.power.sleep_w || t.power.sleep_w < 0.0)
            throw std::domain_error("tier: requires circuit_w >= sleep_w >= 0");
    }
}

void validate(const TrafficProfile& profile) {
    if (profile.slots.empty()) throw std::domain_error("traffic profile: empty");
    for (const TrafficSlot& s : profile.slots) {
        if (s.hour_begin < 0 || s.hour_end > 24 || s.hour_end <= s.hour_begin)
            throw std::domain_error("traffic profile: bad hour range");
        if (s.relative_load <= 0.0)
            throw std::domain_error("traffic profile: non-positive load");
    }
}

double TrafficProfile::peak_load() const {
    double p = 0.0;
    for (const TrafficSlot& s : slots) p = std::max(p, s.relative_load);
    return p;
}

int TrafficProfile::total_hours() const {
    int h = 0;
    for (const TrafficSlot& s : slots) h += s.hour_end - s.hour_begin;
    return h;
}

TrafficProfile default_traffic_profile() {
    // 24 h grid, mean load exactly 100%
    TrafficProfile p;
    const int begin[] = {0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12, 16, 22, 23};
    const int end[]   = {1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12, 16, 22, 23, 24};
    const double pct[] = {90, 60, 40, 30, 20, 60, 70, 90, 100, 110, 120, 130, 140, 120, 110};
    for (size_t i = 0; i < sizeof(pct) / sizeof(pct[0]); ++i)
        p.slots.push_back({begin[i], end[i], pct[i] / 100.0});
    return p;
}

NetworkScenario scaled_load(const NetworkScenario& scenario, double relative_load) {
    NetworkScenario s = scenario;
    s.ue_density = scenario.ue_density * relative_load;
    return s;
}

}  // namespace denseplan
