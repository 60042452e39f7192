// SPDX-License-Identifier: Apache-2.0
#include "denseplan/mgf.hpp"

#include <cmath>
#include <stdexcept>

#include "denseplan/special_functions.hpp"

namespace denseplan {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kActivityFloor = 1e-12;   // below this a tier contributes nothing
constexpr double kMgfFloor = 37.0;         // exp(-37) < 1e-16, truncate the tail

// 2F1(m+1, q; q+1; -X) for X >= 0 with per-tier constants precomputed:
// series after the Pfaff map for moderate X, incomplete-beta form otherwise.
double hyp_interference(double m, double q, double lnB, double X) {
    if (X <= 0.0) return 1.0;
    const double s = X / (1.0 + X);
    if (s <= 0.85) {
        const double a = m + 1.0;
        double term = 1.0, sum = 1.0;
        for (int n = 0; n < 4000; ++n) {
            term *= (a + n) * (1.0 + n) / ((q + 1.0 + n) * (n + 1.0)) * s;
            sum += term;
            if (std::fabs(term) <= 1e-15 * std::fabs(sum)) break;
        }
        return std::pow(1.0 + X, -a) * sum;
    }
    return q * std::exp(-q * std::log(X) + lnB) *
           regularized_incomplete_beta(q, m + 1.0 - q, s);
}

}  // namespace

namespace detail {

// general Nakagami-m exponent term; w = z*phi*P, D = exclusion distance
double interference_A_nakagami(double w, double D, double alpha, double m) {
    if (w <= 0.0) return 0.0;
    const double ia = 2.0 / alpha;
    const double b = w * std::pow(D, -alpha);
    const double head = std::exp(log_gamma_fn(1.0 - ia) + log_gamma_fn(m + ia) -
                                 log_gamma_fn(m)) *
                        std::pow(w / m, ia);
    const double mid = D * D * (std::exp(-m * std::log1p(b / m)) - 1.0);
    const double tail = D * D * (m / (m + ia)) * std::pow(m / b, m) *
                        hyp2f1(m + 1.0, m + ia, m + ia + 1.0, -m / b);
    return head + mid - tail;
}

// Rayleigh reduction (m = 1)
double interference_A_rayleigh(double w, double D, double alpha) {
    if (w <= 0.0) return 0.0;
    const double ia = 2.0 / alpha;
    const double b = w * std::pow(D, -alpha);
    const double head = std::exp(log_gamma_fn(1.0 - ia) + log_gamma_fn(1.0 + ia)) *
                        std::pow(w, ia);
    const double mid = D * D / (1.0 + 1.0 / b);
    const double tail = D * D / ((1.0 + ia) * b) * hyp2f1(2.0, 1.0 + ia, 2.0 + ia, -1.0 / b);
    return head - mid - tail;
}

// Rayleigh, alpha = 4 arctan form (sign chosen so A >= 0)
double interference_A_rayleigh4(double w, double D) {
    if (w <= 0.0) return 0.0;
    const double sw = std::sqrt(w);
    return sw * std::atan(sw / (D * D));
}

}  // namespace detail

MgfContext make_mgf_context(const NetworkScenario& scenario, const AssociationStats& stats,
                            int serving_tier, double serving_distance,
                            bool full_load_override) {
    if (serving_distance <= 0.0)
        throw std::domain_error("make_mgf_context: serving distance must be positive");
    MgfContext ctx;
    ctx.scenario = &scenario;
    ctx.serving_tier = serving_tier;
    ctx.serving_distance = serving_distance;
    ctx.shadow_moment = stats.shadow_moment;
    ctx.activity = stats.activity_prob;
    if (full_load_override)
        for (double& a : ctx.activity) a = 1.0;

    const TierConfig& s = scenario.tiers.at(serving_tier);
    ctx.tier_consts.resize(scenario.tiers.size());
    for (size_t t = 0; t < scenario.tiers.size(); ++t) {
        const TierConfig& tc = scenario.tiers[t];
        MgfContext::TierConst& c = ctx.tier_consts[t];
        const double ia = 2.0 / tc.pathloss;
        c.inv_alpha2 = ia;
        c.m = tc.nakagami_m;
        c.q = tc.nakagami_m + ia;
        c.gamma_head = std::exp(log_gamma_fn(1.0 - ia) + log_gamma_fn(tc.nakagami_m + ia) -
                                log_gamma_fn(tc.nakagami_m));
        c.ln_beta_norm = log_gamma_fn(c.q) + log_gamma_fn(1.0 - ia) -
                         log_gamma_fn(tc.nakagami_m + 1.0);
        const double ratio = tc.bias_linear * tc.tx_power_w / (s.bias_linear * s.tx_power_w);
        c.excl_base = std::pow(ratio, 1.0 / tc.pathloss);
        c.excl_exp = s.pathloss / tc.pathloss;
    }
    return ctx;
}

double signal_mgf(const MgfContext& ctx, double z) {
    if (z < 0.0) throw std::domain_error("signal_mgf: z < 0");
    const TierConfig& s = ctx.scenario->tiers[ctx.serving_tier];
    const double p_eff = s.tx_power_w / ctx.scenario->sinr_gap_linear;
    const double x = z * p_eff * std::pow(ctx.serving_distance, -s.pathloss) / s.nakagami_m;
    return std::exp(-s.nakagami_m * std::log1p(x));
}

double interference_A(const MgfContext& ctx, int tier, double z) {
    const TierConfig& t = ctx.scenario->tiers.at(tier);
    const double phi = ctx.activity.at(tier);
    if (phi < kActivityFloor || z <= 0.0) return 0.0;
    const double w = z * phi * t.tx_power_w;
    const MgfContext::TierConst& c = ctx.tier_consts[tier];
    const double D = c.excl_base * std::pow(ctx.serving_distance, c.excl_exp);
    if (t.nakagami_m == 1.0 && t.pathloss == 4.0)
        return detail::interference_A_rayleigh4(w, D);

    const double m = c.m;
    const double b = w * std::pow(D, -t.pathloss);
    const double head = c.gamma_head * std::pow(w / m, c.inv_alpha2);
    const double mid = D * D * (std::exp(-m * std::log1p(b / m)) - 1.0);
    const double tail = D * D * (m / c.q) * std::pow(m / b, m) *
                        hyp_interference(m, c.q, c.ln_beta_norm, m / b);
    return head + mid - tail;
}

double interference_mgf(const MgfContext& ctx, double z) {
    if (z < 0.0) throw std::domain_error("interference_mgf: z < 0");
    if (z == 0.0) return 1.0;
    double expo = 0.0;
    const auto& tiers = ctx.scenario->tiers;
    for (size_t t = 0; t < tiers.size(); ++t) {
        expo += tiers[t].density * ctx.shadow_moment[t] *
                interference_A(ctx, static_cast<int>(t), z);
    }
    expo *= kPi;
    if (expo > kMgfFloor) return 0.0;
    return std::exp(-expo);
}

}  // namespace denseplan
