// SPDX-License-Identifier: Apache-2.0
#include "denseplan/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "denseplan/errors.hpp"
#include "denseplan/geometry.hpp"
#include "denseplan/roots.hpp"

namespace denseplan {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kLn2 = 0.69314718055994530942;
constexpr int kSeriesTerms = 16;  // -ln(phi) >= sum_{n<=K} (1-phi)^n/n truncation

double total_cost(const NetworkScenario& s, const std::vector<double>& densities) {
    double c = 0.0;
    for (size_t i = 0; i < s.tiers.size(); ++i) c += active_cost(s.tiers[i]) * densities[i];
    return c;
}

NetworkScenario with_densities(const NetworkScenario& s, const std::vector<double>& densities) {
    NetworkScenario out = s;
    for (size_t i = 0; i < out.tiers.size(); ++i) out.tiers[i].density = densities[i];
    return out;
}

std::vector<double> polymul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

void axpy(std::vector<double>& acc, double scale, const std::vector<double>& p) {
    if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
    for (size_t i = 0; i < p.size(); ++i) acc[i] += scale * p[i];
}

}  // namespace

// worst-case equation (from the closed-form lower rate bound): polynomial in
// x = sqrt(activity), with -ln(activity) replaced by its truncated series
// lower bound so the bound direction is preserved
std::vector<double> worst_case_activity_polynomial(double r0) {
    const double j = kPi - 2.0 * std::atan(std::sqrt(kPi / (8.0 - kPi)));
    const double c2js = 2.0 * j / std::sqrt(kPi * (8.0 - kPi));
    std::vector<double> p(5, 0.0);
    p[3] += 2.0 * kPi * kPi;
    p[1] += 2.0 * (kPi - 2.0) * kPi;
    p[0] += 2.0 * (-2.0 * std::log(kPi) + std::log(4.0));
    p[2] += -2.0 * 2.0 * kPi * c2js;
    p[0] += -2.0 * (kPi - 4.0) * c2js;
    // + 4 sum_{n<=K} (1-x^2)^n / n
    std::vector<double> u{1.0, 0.0, -1.0}, cur{1.0};
    for (int n = 1; n <= kSeriesTerms; ++n) {
        cur = polymul(cur, u);
        axpy(p, 4.0 / n, cur);
    }
    const double l = kLn2 * r0;
    axpy(p, -l, {4.0, 0.0, (kPi - 4.0) * kPi, 0.0, kPi * kPi});
    return p;
}

// best-case equation (from the closed-form upper rate bound): multiplied
// through by activity so -ln(activity) <= (1-activity)/activity stays polynomial
std::vector<double> best_case_activity_polynomial(double r0) {
    const double k = 2.0 * kPi / (3.0 * std::sqrt(3.0));
    const double l = kLn2 * r0;
    std::vector<double> p(7, 0.0);
    p[5] += kPi;
    p[2] += k;
    p[4] += -2.0 * k;
    p[0] += 1.0;
    p[2] += -1.0;
    p[6] += -l;
    p[4] += l;
    p[2] += -l;
    return p;
}

namespace {

// largest root strictly inside (0,1), or a negative value when none exists
double largest_unit_interval_root(const std::vector<double>& poly) {
    PolynomialRealRoots roots = positive_real_roots(poly);
    double best = -1.0;
    for (double r : roots.positive_real_roots)
        if (r < 1.0 - 1e-10) best = std::max(best, r);
    return best;
}

}  // namespace

DeploymentSolution optimize_single_tier(const NetworkScenario& scenario_template, double r0,
                                        const OptimizeOptions& options) {
    if (scenario_template.tiers.size() != 1)
        throw std::domain_error("optimize_single_tier: exactly one tier expected");
    if (r0 <= 0.0) throw std::domain_error("optimize_single_tier: r0 must be positive");

    RateOptions ropt = options.rate;
    ropt.tol = std::min(ropt.tol, 1e-5);  // the scalar path promises 1e-4 on the rate
    auto rate_at = [&](double lambda) {
        NetworkScenario s = scenario_template;
        s.tiers[0].density = lambda;
        return average_rate(s, ropt).rate;
    };
    auto f = [&](double lambda) { return rate_at(lambda) - r0; };

    DeploymentSolution sol;
    sol.solver = SolverKind::brent;
    const double seed = scenario_template.ue_density > 0.0 ? scenario_template.ue_density : 1.0;
    double lo = seed / 10.0, hi = 10.0 * seed;
    double flo = f(lo), fhi = f(hi);
    while (flo * fhi > 0.0) {
        if (flo > 0.0) {  // rate already above target: walk down
            // below ~1e-5 BSs/km^2 the interference-limited rate is density
            // invariant, so the requirement is met all the way to zero
            if (lo <= 1e-5) {
                sol.densities = {0.0};
                sol.boundary = true;
                sol.feasible = true;
                sol.achieved_rate = rate_at(lo);
                sol.objective = 0.0;
                return sol;
            }
            hi = lo;
            fhi = flo;
            lo *= 0.25;
            flo = f(lo);
        } else {          // rate below target: walk up
            if (hi >= options.density_cap)
                throw infeasible_error("optimize_single_tier: rate saturates below target");
            lo = hi;
            flo = fhi;
            hi = std::min(hi * 4.0, options.density_cap);
            fhi = f(hi);
        }
    }
    const double lambda = brent_root(f, lo, hi, 1e-7 * hi);
    sol.densities = {lambda};
    sol.achieved_rate = rate_at(lambda);
    sol.objective = total_cost(scenario_template, sol.densities);
    sol.feasible = sol.achieved_rate >= r0 - options.rate_tol;
    return sol;
}

DeploymentSolution optimize_multi_tier(const NetworkScenario& scenario_template, double r0,
                                       const OptimizeOptions& options) {
    const size_t n = scenario_template.tiers.size();
    if (n < 2) throw std::domain_error("optimize_multi_tier: needs at least two tiers");
    if (r0 <= 0.0) throw std::domain_error("optimize_multi_tier: r0 must be positive");

    auto objective = [&](const std::vector<double>& x) { return total_cost(scenario_template, x); };
    auto constraint = [&](const std::vector<double>& x) {
        return average_rate(with_densities(scenario_template, x), options.rate).rate - r0;
    };

    const double seed = scenario_template.ue_density > 0.0 ? scenario_template.ue_density : 1.0;
    SimplexOptions so;
    so.restarts = options.restarts;
    so.seed = options.seed;
    so.feas_tol = options.feas_tol;
    so.lower_bounds.assign(n, 1e-6);
    so.restart_lo.assign(n, seed / 100.0);
    so.restart_hi.assign(n, 10.0 * seed);
    std::vector<double> start(n, std::max(seed / static_cast<double>(n), 1e-3));

    SimplexResult r = nelder_mead_penalized(objective, constraint, start, so);

    DeploymentSolution sol;
    sol.solver = SolverKind::simplex;
    sol.densities = r.x;
    sol.objective = r.objective;
    RateOptions tight = options.rate;
    tight.tol = std::min(tight.tol, 1e-5);
    sol.achieved_rate = average_rate(with_densities(scenario_template, r.x), tight).rate;
    sol.feasible = r.feasible;
    sol.trace = r.trace;
    // identical tiers make the objective flat along density exchanges
    for (size_t i = 0; i < n && !sol.degenerate_ridge; ++i)
        for (size_t k = i + 1; k < n; ++k) {
            const TierConfig &a = scenario_template.tiers[i], &b = scenario_template.tiers[k];
            if (active_cost(a) == active_cost(b) && a.tx_power_w == b.tx_power_w &&
                a.bias_linear == b.bias_linear && a.pathloss == b.pathloss &&
                a.nakagami_m == b.nakagami_m && a.shadow_std_db == b.shadow_std_db &&
                a.shadow_mean_db == b.shadow_mean_db) {
                sol.degenerate_ridge = true;
                break;
            }
        }
    return sol;
}

DensityBounds closed_form_density_bounds(double ue_density, double shadow_moment, double r0) {
    if (r0 <= 0.0) throw std::domain_error("closed_form_density_bounds: r0 must be positive");
    if (ue_density < 0.0 || shadow_moment <= 0.0)
        throw std::domain_error("closed_form_density_bounds: bad scenario parameters");
    DensityBounds out;
    const RateBounds at_full = closed_form_rate_bounds(1.0);

    if (r0 <= at_full.lower) {
        out.upper_boundary = true;  // requirement met at full load: any density works
        out.upper = 0.0;
        out.upper_activity = 1.0;
    } else {
        const double x = largest_unit_interval_root(worst_case_activity_polynomial(r0));
        if (x <= 0.0)
            throw infeasible_error("closed_form_density_bounds: no activity root in (0,1)");
        out.upper_activity = x * x;
        out.upper = ue_density / (shadow_moment * (-std::log1p(-out.upper_activity)));
    }
    if (r0 <= at_full.upper) {
        out.lower_boundary = true;
        out.lower = 0.0;
        out.lower_activity = 1.0;
    } else {
        const double x = largest_unit_interval_root(best_case_activity_polynomial(r0));
        if (x <= 0.0)
            throw infeasible_error("closed_form_density_bounds: no activity root in (0,1)");
        out.lower_activity = x * x;
        out.lower = ue_density / (shadow_moment * (-std::log1p(-out.lower_activity)));
    }
    return out;
}

DeploymentSolution multi_tier_equal_params_reduction(const NetworkScenario& scenario, double r0,
                                                     const OptimizeOptions& options) {
    const size_t n = scenario.tiers.size();
    if (n == 0) throw std::domain_error("multi_tier_equal_params_reduction: no tiers");
    const TierConfig& t0 = scenario.tiers.at(0);
    for (const TierConfig& t : scenario.tiers) {
        if (active_cost(t) != active_cost(t0) || t.tx_power_w != t0.tx_power_w ||
            t.bias_linear != t0.bias_linear || t.pathloss != t0.pathloss ||
            t.nakagami_m != t0.nakagami_m || t.shadow_mean_db != t0.shadow_mean_db ||
            t.shadow_std_db != t0.shadow_std_db)
            throw std::domain_error("multi_tier_equal_params_reduction: tiers differ");
    }
    NetworkScenario single = scenario;
    single.tiers.resize(1);
    DeploymentSolution base = optimize_single_tier(single, r0, options);
    DeploymentSolution sol = base;
    sol.densities.assign(n, base.densities[0] / static_cast<double>(n));
    sol.degenerate_ridge = n > 1;  // any split with the same total is optimal
    sol.objective = total_cost(scenario, sol.densities);
    return sol;
}

}  // namespace denseplan
