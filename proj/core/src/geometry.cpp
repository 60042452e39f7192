// SPDX-License-Identifier: Apache-2.0
#include "denseplan/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "denseplan/quadrature.hpp"

namespace denseplan {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool equal_pathloss(const NetworkScenario& s) {
    for (const TierConfig& t : s.tiers)
        if (t.pathloss != s.tiers.front().pathloss) return false;
    return true;
}

// sum_t lambda_t E_t (beta_t P_t / (beta_s P_s))^{2/alpha_t} R^{2 alpha_s/alpha_t},
// the exponent of the joint void probability seen from the serving tier.
double association_exponent(const NetworkScenario& s, int serving, double R) {
    const TierConfig& ts = s.tiers[serving];
    const double ref = ts.bias_linear * ts.tx_power_w;
    double sum = 0.0;
    for (const TierConfig& t : s.tiers) {
        const double ratio = t.bias_linear * t.tx_power_w / ref;
        sum += t.density * shadow_fractional_moment(t) * std::pow(ratio, 2.0 / t.pathloss) *
               std::pow(R, 2.0 * ts.pathloss / t.pathloss);
    }
    return kPi * sum;
}

}  // namespace

double tier_connect_prob(const NetworkScenario& scenario, int tier_index) {
    validate(scenario);
    const TierConfig& ts = scenario.tiers.at(tier_index);
    const double lam_s = displaced_density(ts);
    if (lam_s == 0.0) return 0.0;
    if (equal_pathloss(scenario)) {
        const double ref = ts.bias_linear * ts.tx_power_w;
        double denom = 0.0;
        for (const TierConfig& t : scenario.tiers)
            denom += displaced_density(t) *
                     std::pow(t.bias_linear * t.tx_power_w / ref, 2.0 / t.pathloss);
        return lam_s / denom;
    }
    auto integrand = [&](double r) {
        return r * std::exp(-association_exponent(scenario, tier_index, r));
    };
    QuadratureResult q = integrate_semi_infinite(integrand, 1e-10);
    return 2.0 * kPi * lam_s * q.value;
}

double activity_prob(const NetworkScenario& scenario, int tier_index) {
    const TierConfig& t = scenario.tiers.at(tier_index);
    const double lam_s = displaced_density(t);
    if (lam_s <= 0.0) throw std::domain_error("activity_prob: zero-density tier");
    if (scenario.ue_density == 0.0) return 0.0;
    const double conn = tier_connect_prob(scenario, tier_index);
    return 1.0 - std::exp(-scenario.ue_density * conn / lam_s);
}

double serving_distance_pdf(const NetworkScenario& scenario, int serving_tier, double R) {
    if (R < 0.0) throw std::domain_error("serving_distance_pdf: negative distance");
    const TierConfig& ts = scenario.tiers.at(serving_tier);
    const double lam_s = displaced_density(ts);
    if (lam_s == 0.0) throw std::domain_error("serving_distance_pdf: zero-density serving tier");
    if (R == 0.0) return 0.0;
    const double conn = tier_connect_prob(scenario, serving_tier);
    return 2.0 * kPi * R * lam_s / conn * std::exp(-association_exponent(scenario, serving_tier, R));
}

AssociationStats association_stats(const NetworkScenario& scenario) {
    AssociationStats st;
    const int n = static_cast<int>(scenario.tiers.size());
    st.connect_prob.resize(n);
    st.activity_prob.resize(n);
    st.shadow_moment.resize(n);
    for (int i = 0; i < n; ++i) {
        st.shadow_moment[i] = shadow_fractional_moment(scenario.tiers[i]);
        st.connect_prob[i] = tier_connect_prob(scenario, i);
        const double lam_s = scenario.tiers[i].density * st.shadow_moment[i];
        st.activity_prob[i] =
            (lam_s > 0.0 && scenario.ue_density > 0.0)
                ? 1.0 - std::exp(-scenario.ue_density * st.connect_prob[i] / lam_s)
                : 0.0;
    }
    return st;
}

double serving_distance_cutoff(const NetworkScenario& scenario, int serving_tier,
                               double tail_mass) {
    // tail mass of the pdf beyond R is exp(-G(R)) for equal exponents and is
    // bounded by it in general; push G(R) past |ln tail| + margin
    const double target = -std::log(tail_mass) + 6.0;
    double lo = 1e-6, hi = 1.0;
    while (association_exponent(scenario, serving_tier, hi) < target && hi < 1e8) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (association_exponent(scenario, serving_tier, mid) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-9 * hi) break;
    }
    return hi;
}

}  // namespace denseplan
