// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "denseplan/geometry.hpp"
#include "denseplan/scenario.hpp"

namespace denseplan {

/// Inputs for the conditional signal/interference MGFs: serving tier, serving
/// distance, and precomputed association statistics. Immutable after
/// construction.
struct MgfContext {
    const NetworkScenario* scenario = nullptr;
    int serving_tier = 0;
    double serving_distance = 0.0;          // km, > 0
    std::vector<double> activity;           // per tier, may be overridden to 1
    std::vector<double> shadow_moment;      // per tier

    // per-tier constants fixed by (scenario, serving tier)
    struct TierConst {
        double m = 1.0;
        double q = 1.5;             // m + 2/alpha
        double inv_alpha2 = 0.5;    // 2/alpha
        double gamma_head = 1.0;    // Gamma(1-2/a)Gamma(m+2/a)/Gamma(m)
        double ln_beta_norm = 0.0;  // ln B(q, 1-2/a) with B against Gamma(m+1)
        double excl_base = 1.0;     // exclusion distance = base * R^excl_exp
        double excl_exp = 1.0;
    };
    std::vector<TierConst> tier_consts;
};

MgfContext make_mgf_context(const NetworkScenario& scenario, const AssociationStats& stats,
                            int serving_tier, double serving_distance,
                            bool full_load_override = false);

/// Conditional MGF of the received signal power, (1 + z P R^-alpha / m)^-m.
/// The SINR gap divides the effective signal power.
double signal_mgf(const MgfContext& ctx, double z);

/// Per-tier exponent term of the aggregate interference MGF (the radial
/// integral of 1 - MGF of one interferer's contribution beyond the exclusion
/// distance). Nakagami general form; dispatches to the Rayleigh closed form at
/// m=1 and to the arctan form at m=1, alpha=4.
double interference_A(const MgfContext& ctx, int tier, double z);

/// exp(-pi sum_t lambda_t E_t A_t(z)); equals 1 at z = 0, decays to 0.
double interference_mgf(const MgfContext& ctx, double z);

namespace detail {
// Raw exponent-term variants, exposed so the reduction chain between them can
// be checked directly. w = z * activity * tx_power, D = exclusion distance.
double interference_A_nakagami(double w, double D, double alpha, double m);
double interference_A_rayleigh(double w, double D, double alpha);
double interference_A_rayleigh4(double w, double D);
}  // namespace detail

}  // namespace denseplan
