// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "denseplan/scenario.hpp"

namespace denseplan {

struct SimulationConfig {
    NetworkScenario scenario;
    double region_radius = 0.0;        // km; 0 = auto (>=500 expected BSs in the
                                       // sparsest tier, never below 5 km)
    long trials = 10000;
    std::uint64_t seed = 1;
    bool full_load_override = false;   // every deployed BS transmits
    int association_candidates = 64;   // shadowed argmax restricted to the
                                       // strongest unshadowed candidates
};

struct TrialOutcome {
    double sinr = 0.0;                 // linear
    int serving_tier = -1;
    double serving_distance = 0.0;     // km
    double serving_gain = 1.0;         // fade * shadow product on the serving link
    std::vector<int> bs_counts;        // drawn BSs per tier
    std::vector<int> active_counts;    // BSs serving >= 1 drawn UE, per tier
    std::vector<int> interior_bs_counts;      // same, restricted to the inner
    std::vector<int> interior_active_counts;  // 75% disk (edge-bias-free)
    double rate_bps_hz = 0.0;          // log2(1 + sinr / gap)
    int resamples = 0;                 // empty-deployment redraws
};

/// One independent trial. Trial i is a pure function of (config, trial_index):
/// identical regardless of execution order or thread count.
TrialOutcome run_trial(const SimulationConfig& config, long trial_index);

struct RateEstimate {
    double mean = 0.0;
    double ci_halfwidth = 0.0;  // 95%, normal approximation
    long trials = 0;
};

/// Mean UE rate across trials (multithreaded, deterministic reduction).
RateEstimate estimate_rate(const SimulationConfig& config);

struct AssociationSample {
    std::vector<long> tier_counts;       // reference UE association frequency
    std::vector<double> distances;       // serving distance per trial (km)
};

/// Reference-UE association statistics only (no load/interference work).
AssociationSample association_statistics(const SimulationConfig& config);

struct ActivityEstimate {
    std::vector<double> fraction;  // per tier: mean fraction of BSs serving >=1 UE
    long trials = 0;
};

ActivityEstimate activity_statistics(const SimulationConfig& config);

/// Per-trial CSV rows: trial,tier,distance_km,sinr_db,rate_bps_hz,active_counts...
void write_trials_csv(std::ostream& out, const SimulationConfig& config, long trials);

double auto_region_radius(const NetworkScenario& scenario);

namespace detail {
struct World {
    std::vector<double> x, y;   // km
    std::vector<int> tier;
};
TrialOutcome evaluate_world(const SimulationConfig& config, const World& world,
                            std::uint64_t trial_seed);
}  // namespace detail

}  // namespace denseplan
