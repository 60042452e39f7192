// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "denseplan/scenario.hpp"

namespace denseplan {

struct AssociationStats {
    std::vector<double> connect_prob;   // per tier, sums to 1
    std::vector<double> activity_prob;  // per tier, in [0,1]
    std::vector<double> shadow_moment;  // per tier
};

/// Probability that the typical UE is served by `tier_index` under
/// max-biased-received-power selection. Closed form when all tiers share the
/// path-loss exponent, semi-infinite quadrature otherwise.
double tier_connect_prob(const NetworkScenario& scenario, int tier_index);

/// Probability that a tier BS serves at least one UE (load-aware activity).
double activity_prob(const NetworkScenario& scenario, int tier_index);

/// pdf of the serving distance R (km) conditioned on association with
/// `serving_tier`. Integrates to 1 over (0, inf).
double serving_distance_pdf(const NetworkScenario& scenario, int serving_tier, double R);

/// All association statistics in one pass (shared by the rate engines).
AssociationStats association_stats(const NetworkScenario& scenario);

/// Upper limit for serving-distance integrals: the pdf tail mass beyond the
/// returned radius is below `tail_mass`.
double serving_distance_cutoff(const NetworkScenario& scenario, int serving_tier,
                               double tail_mass = 1e-10);

}  // namespace denseplan
