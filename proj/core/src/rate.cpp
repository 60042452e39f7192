// SPDX-License-Identifier: Apache-2.0
#include "denseplan/rate.hpp"

#include <cmath>
#include <stdexcept>

#include "denseplan/errors.hpp"
#include "denseplan/geometry.hpp"
#include "denseplan/mgf.hpp"
#include "denseplan/quadrature.hpp"
#include "denseplan/special_functions.hpp"

namespace denseplan {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kLog2e = 1.4426950408889634074;

// z-integral of M_I(z) (1 - M_S(z)) e^{-z eta} / z at a fixed serving distance.
// z is rescaled by the signal turn-on point R^alpha / P so the mapped
// integrand keeps O(1) support at any density (the origin limit is exactly 1).
double conditional_nat_rate(const MgfContext& ctx, double eta, double tol, long* evals) {
    const TierConfig& s = ctx.scenario->tiers[ctx.serving_tier];
    const double p_eff = s.tx_power_w / ctx.scenario->sinr_gap_linear;
    const double z_scale = std::pow(ctx.serving_distance, s.pathloss) / p_eff;
    auto g = [&](double y) {
        if (y <= 0.0) return 1.0;
        const double z = z_scale * y;
        const double mi = interference_mgf(ctx, z);
        if (mi == 0.0) return 0.0;
        const double ms = signal_mgf(ctx, z);
        return mi * (1.0 - ms) * std::exp(-z * eta) / y;
    };
    QuadratureResult q = integrate_semi_infinite(g, tol);
    if (evals) *evals += q.evaluations;
    return q.value;
}

bool has_interference(const NetworkScenario& s, const AssociationStats& st, bool full_load) {
    for (size_t t = 0; t < s.tiers.size(); ++t) {
        const double phi = full_load ? 1.0 : st.activity_prob[t];
        if (s.tiers[t].density > 0.0 && phi > 1e-12) return true;
    }
    return false;
}

}  // namespace

RateResult average_rate(const NetworkScenario& scenario, const RateOptions& options) {
    validate(scenario);
    bool any_positive = false;
    for (const TierConfig& t : scenario.tiers) any_positive |= t.density > 0.0;
    if (!any_positive) throw std::domain_error("average_rate: no tier with positive density");

    AssociationStats stats = association_stats(scenario);
    RateResult res;
    res.method = RateMethod::general;
    res.per_tier.assign(scenario.tiers.size(), 0.0);

    if (scenario.noise_w <= 0.0 &&
        !has_interference(scenario, stats, options.force_full_load)) {
        res.rate = kRateCap;
        res.interference_free = true;
        return res;
    }

    for (size_t t = 0; t < scenario.tiers.size(); ++t) {
        if (scenario.tiers[t].density <= 0.0 || stats.connect_prob[t] <= 0.0) continue;
        const double Rmax = serving_distance_cutoff(scenario, static_cast<int>(t));
        auto outer = [&](double R) {
            if (R <= 0.0) return 0.0;
            MgfContext ctx = make_mgf_context(scenario, stats, static_cast<int>(t), R,
                                              options.force_full_load);
            const double inner =
                conditional_nat_rate(ctx, scenario.noise_w, options.tol / 10.0, &res.evaluations);
            return serving_distance_pdf(scenario, static_cast<int>(t), R) * inner;
        };
        QuadratureResult q = integrate(outer, 0.0, Rmax, options.tol);
        res.quad_error += q.abs_error_estimate;
        res.converged = res.converged && q.converged;
        res.per_tier[t] = kLog2e * stats.connect_prob[t] * q.value;
        res.rate += res.per_tier[t];
    }
    return res;
}

double homogeneous_rate_integral(double activity, double alpha) {
    if (activity < 0.0 || activity > 1.0)
        throw std::domain_error("homogeneous_rate_integral: activity outside [0,1]");
    if (activity == 0.0) return kRateCap;
    if (alpha == 4.0) {
        auto f = [&](double s) {
            return 4.0 / ((1.0 + activity * s * s) * (2.0 * s - 2.0 * std::atan(s) + kPi));
        };
        return kLog2e * integrate_semi_infinite(f, 1e-10).value;
    }
    // general pathloss: angular single integral; the csc(2pi/alpha) constant in
    // the interferer exponent equals Gamma(1-2/alpha)Gamma(1+2/alpha)*alpha/(2pi)
    const double csc = 1.0 / std::sin(2.0 * kPi / alpha);
    auto f = [&](double t) {
        const double sn = std::sin(t), cs = std::cos(t);
        if (cs <= 0.0 || sn <= 0.0) return 0.0;
        const double tn = sn / cs;
        const double F = hyp2f1(1.0, 1.0 + 2.0 / alpha, 2.0 + 2.0 / alpha, -std::pow(tn, alpha));
        const double num = alpha * alpha * (alpha + 2.0) * sn * std::pow(cs, 2.0 * alpha - 1.0);
        const double den = 2.0 * (activity * std::pow(sn, alpha) + std::pow(cs, alpha)) *
                           (alpha * std::pow(sn, alpha + 2.0) * F +
                            kPi * (alpha + 2.0) * csc * std::pow(cs, alpha + 2.0));
        return num / den;
    };
    return kLog2e * integrate(f, 0.0, kPi / 2.0, 1e-10).value;
}

RateResult homogeneous_rate(const NetworkScenario& scenario, const RateOptions& options) {
    validate(scenario);
    if (scenario.tiers.size() != 1)
        throw std::domain_error("homogeneous_rate: single-tier scenarios only");
    const TierConfig& t = scenario.tiers.front();
    if (t.nakagami_m != 1.0) throw std::domain_error("homogeneous_rate: requires Rayleigh fading");
    if (scenario.noise_w != 0.0)
        throw std::domain_error("homogeneous_rate: interference-limited form, noise must be 0");

    const double phi = options.force_full_load ? 1.0 : activity_prob(scenario, 0);
    RateResult res;
    res.method = RateMethod::homogeneous_integral;
    res.per_tier.assign(1, 0.0);
    if (phi < 1e-12) {
        res.rate = kRateCap;
        res.interference_free = true;
        res.per_tier[0] = res.rate;
        return res;
    }
    res.rate = homogeneous_rate_integral(phi, t.pathloss);
    if (t.pathloss == 4.0) {
        // alternate algebraic form of the same integral, kept as a cross-check
        auto alt = [&](double s) {
            const double atn = (s > 0.0) ? std::atan(1.0 / s) : kPi / 2.0;
            return 4.0 / (2.0 * (1.0 + phi * s * s) * (s + atn));
        };
        const double alt_rate = kLog2e * integrate_semi_infinite(alt, 1e-10).value;
        if (std::fabs(alt_rate - res.rate) > 1e-8)
            throw numerical_error("homogeneous_rate: algebraic forms disagree");
    }
    res.per_tier[0] = res.rate;
    return res;
}

RateBounds closed_form_rate_bounds(double activity) {
    if (activity <= 0.0 || activity > 1.0)
        throw std::domain_error("closed_form_rate_bounds: activity must lie in (0,1]");
    const double p = activity;
    const double sq = std::sqrt(kPi * (8.0 - kPi));
    const double j = kPi - 2.0 * std::atan(std::sqrt(kPi / (8.0 - kPi)));
    RateBounds b;
    {
        const double num = kPi * kPi * std::pow(p, 1.5) + (kPi - 2.0) * kPi * std::sqrt(p) -
                           2.0 * std::log(kPi * p) + std::log(4.0) -
                           (2.0 * kPi * p + kPi - 4.0) * 2.0 * j / sq;
        const double den = kPi * kPi * p * p + (kPi - 4.0) * kPi * p + 4.0;
        b.lower = 2.0 * kLog2e * num / den;
    }
    {
        const double num = kPi * std::pow(p, 1.5) +
                           2.0 * kPi / (3.0 * std::sqrt(3.0)) * (1.0 - 2.0 * p) - std::log(p);
        const double den = p * p - p + 1.0;
        b.upper = kLog2e * num / den;
    }
    return b;
}

bool rate_is_monotone_check(const NetworkScenario& scenario,
                            const std::vector<double>& density_grid,
                            const std::function<double(double)>& rate_of_density) {
    if (scenario.tiers.size() != 1)
        throw std::domain_error("rate_is_monotone_check: single-tier scenarios only");
    std::function<double(double)> eval = rate_of_density;
    if (!eval) {
        eval = [&scenario](double lambda) {
            NetworkScenario s = scenario;
            s.tiers[0].density = lambda;
            return average_rate(s).rate;
        };
    }
    double prev = -1.0;
    bool first = true;
    for (double lambda : density_grid) {
        const double r = eval(lambda);
        if (!first && r <= prev) return false;
        prev = r;
        first = false;
    }
    return true;
}

}  // namespace denseplan
