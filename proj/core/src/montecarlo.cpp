// SPDX-License-Identifier: Apache-2.0
#include "denseplan/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace denseplan {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kDbLn10 = 0.23025850929940457;  // ln(10)/10

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed_of(std::uint64_t master, long trial) {
    return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(trial) + 1));
}

// received-power pathloss kernel; alpha = 4 avoids pow entirely
inline double distance_gain(double d2, double alpha) {
    if (alpha == 4.0) return 1.0 / (d2 * d2);
    return std::exp(-0.5 * alpha * std::log(d2));
}

bool any_shadowing(const NetworkScenario& s) {
    for (const TierConfig& t : s.tiers)
        if (t.shadow_std_db != 0.0 || t.shadow_mean_db != 0.0) return true;
    return false;
}

// partial reduction with pairwise summation for an order-independent total
double pairwise_sum(const double* v, size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

void parallel_trials(long trials, const std::function<void(long)>& body) {
    unsigned nthreads = std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = std::min<unsigned>(nthreads, 16);
    if (trials < 64 || nthreads == 1) {
        for (long i = 0; i < trials; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                const long chunk = 64;
                const long begin = next.fetch_add(chunk);
                if (begin >= trials) return;
                const long end = std::min(begin + chunk, trials);
                for (long i = begin; i < end; ++i) body(i);
            }
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace

double auto_region_radius(const NetworkScenario& scenario) {
    double sparsest = 0.0;
    for (const TierConfig& t : scenario.tiers)
        if (t.density > 0.0) sparsest = sparsest == 0.0 ? t.density : std::min(sparsest, t.density);
    if (sparsest == 0.0) throw std::domain_error("auto_region_radius: no deployed tier");
    return std::max(5.0, std::sqrt(500.0 / (kPi * sparsest)));
}

namespace detail {

TrialOutcome evaluate_world(const SimulationConfig& config, const World& world,
                            std::uint64_t trial_seed) {
    const NetworkScenario& scn = config.scenario;
    const int ntiers = static_cast<int>(scn.tiers.size());
    const size_t nb = world.x.size();
    std::mt19937_64 rng(trial_seed);

    TrialOutcome out;
    out.bs_counts.assign(ntiers, 0);
    out.active_counts.assign(ntiers, 0);
    out.interior_bs_counts.assign(ntiers, 0);
    out.interior_active_counts.assign(ntiers, 0);
    const double interior2 = 0.5625 * config.region_radius * config.region_radius;
    for (size_t i = 0; i < nb; ++i) out.bs_counts[world.tier[i]]++;

    // reference-link shadowing for every BS; biased selection ignores fading
    std::vector<double> d2(nb), chi_ref(nb), gain_ref(nb);
    std::normal_distribution<double> snorm(0.0, 1.0);
    double best = -1.0;
    size_t best_i = 0;
    for (size_t i = 0; i < nb; ++i) {
        const TierConfig& t = scn.tiers[world.tier[i]];
        d2[i] = world.x[i] * world.x[i] + world.y[i] * world.y[i];
        double chi = 1.0;
        if (t.shadow_std_db != 0.0 || t.shadow_mean_db != 0.0)
            chi = std::exp(kDbLn10 * (t.shadow_mean_db + t.shadow_std_db * snorm(rng)));
        chi_ref[i] = chi;
        gain_ref[i] = t.tx_power_w * chi * distance_gain(d2[i], t.pathloss);
        const double biased = t.bias_linear * gain_ref[i];
        if (biased > best) {
            best = biased;
            best_i = i;
        }
    }
    out.serving_tier = world.tier[best_i];
    out.serving_distance = std::sqrt(d2[best_i]);

    // load: associate every drawn UE, mark its server active
    std::vector<char> active(nb, config.full_load_override ? 1 : 0);
    if (!config.full_load_override && scn.ue_density > 0.0 && nb > 0) {
        const double area = kPi * config.region_radius * config.region_radius;
        std::poisson_distribution<long> pois_u(scn.ue_density * area);
        const long nu = pois_u(rng);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        const bool shadowed = any_shadowing(scn);
        const int K = static_cast<int>(
            std::min(static_cast<size_t>(config.association_candidates), nb));
        std::vector<double> px(nb);
        std::vector<int> idx(nb);
        for (long u = 0; u < nu; ++u) {
            const double r = config.region_radius * std::sqrt(uni(rng));
            const double th = 2.0 * kPi * uni(rng);
            const double ux = r * std::cos(th), uy = r * std::sin(th);
            for (size_t i = 0; i < nb; ++i) {
                const TierConfig& t = scn.tiers[world.tier[i]];
                const double dx = world.x[i] - ux, dy = world.y[i] - uy;
                px[i] = t.bias_linear * t.tx_power_w *
                        distance_gain(dx * dx + dy * dy, t.pathloss);
            }
            size_t win;
            if (!shadowed) {
                win = std::max_element(px.begin(), px.end()) - px.begin();
            } else {
                std::iota(idx.begin(), idx.end(), 0);
                if (static_cast<int>(nb) > K)
                    std::nth_element(idx.begin(), idx.begin() + K, idx.end(),
                                     [&px](int a, int b) { return px[a] > px[b]; });
                double wbest = -1.0;
                win = idx[0];
                for (int c = 0; c < K; ++c) {
                    const int i = idx[c];
                    const TierConfig& t = scn.tiers[world.tier[i]];
                    const double chi =
                        std::exp(kDbLn10 * (t.shadow_mean_db + t.shadow_std_db * snorm(rng)));
                    const double val = px[i] * chi;
                    if (val > wbest) {
                        wbest = val;
                        win = i;
                    }
                }
            }
            active[win] = 1;
        }
    }
    for (size_t i = 0; i < nb; ++i) {
        if (active[i]) out.active_counts[world.tier[i]]++;
        if (d2[i] <= interior2) {
            out.interior_bs_counts[world.tier[i]]++;
            if (active[i]) out.interior_active_counts[world.tier[i]]++;
        }
    }

    // fading and the SINR at the reference UE
    double interference = 0.0;
    double serving_power = 0.0;
    for (size_t i = 0; i < nb; ++i) {
        const bool is_serving = i == best_i;
        if (!is_serving && !active[i]) continue;
        const TierConfig& t = scn.tiers[world.tier[i]];
        std::gamma_distribution<double> gam(t.nakagami_m, 1.0 / t.nakagami_m);
        const double h = gam(rng);
        const double p = h * gain_ref[i];
        if (is_serving) {
            serving_power = p;
            out.serving_gain = h * chi_ref[i];
        } else {
            interference += p;
        }
    }
    out.sinr = serving_power / (scn.noise_w + interference);
    out.rate_bps_hz = std::log2(1.0 + out.sinr / scn.sinr_gap_linear);
    return out;
}

}  // namespace detail

TrialOutcome run_trial(const SimulationConfig& config, long trial_index) {
    validate(config.scenario);
    SimulationConfig cfg = config;
    if (cfg.region_radius <= 0.0) cfg.region_radius = auto_region_radius(cfg.scenario);
    const double area = kPi * cfg.region_radius * cfg.region_radius;

    std::uint64_t seed = trial_seed_of(cfg.seed, trial_index);
    int resamples = 0;
    for (;;) {
        std::mt19937_64 rng(splitmix64(seed));
        detail::World world;
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (size_t t = 0; t < cfg.scenario.tiers.size(); ++t) {
            const double lam = cfg.scenario.tiers[t].density;
            if (lam <= 0.0) continue;
            std::poisson_distribution<long> pois(lam * area);
            const long n = pois(rng);
            for (long i = 0; i < n; ++i) {
                const double r = cfg.region_radius * std::sqrt(uni(rng));
                const double th = 2.0 * kPi * uni(rng);
                world.x.push_back(r * std::cos(th));
                world.y.push_back(r * std::sin(th));
                world.tier.push_back(static_cast<int>(t));
            }
        }
        if (!world.x.empty()) {
            TrialOutcome out = detail::evaluate_world(cfg, world, splitmix64(seed + 1));
            out.resamples = resamples;
            return out;
        }
        ++resamples;  // empty deployment: redraw with a follow-on substream
        seed = splitmix64(seed + 0x5851F42D4C957F2Dull);
    }
}

RateEstimate estimate_rate(const SimulationConfig& config) {
    if (config.trials < 100) throw std::domain_error("estimate_rate: needs at least 100 trials");
    std::vector<double> samples(config.trials);
    parallel_trials(config.trials,
                    [&](long i) { samples[i] = run_trial(config, i).rate_bps_hz; });
    RateEstimate est;
    est.trials = config.trials;
    est.mean = pairwise_sum(samples.data(), samples.size()) / static_cast<double>(config.trials);
    std::vector<double> sq(config.trials);
    for (long i = 0; i < config.trials; ++i) {
        const double d = samples[i] - est.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq.data(), sq.size()) / static_cast<double>(config.trials - 1);
    est.ci_halfwidth = 1.959963984540054 * std::sqrt(var / static_cast<double>(config.trials));
    return est;
}

AssociationSample association_statistics(const SimulationConfig& config) {
    SimulationConfig cfg = config;
    cfg.scenario.ue_density = 0.0;  // association of the reference UE only
    cfg.full_load_override = false;
    AssociationSample s;
    s.tier_counts.assign(config.scenario.tiers.size(), 0);
    s.distances.resize(config.trials);
    std::vector<int> tiers(config.trials);
    parallel_trials(config.trials, [&](long i) {
        TrialOutcome o = run_trial(cfg, i);
        tiers[i] = o.serving_tier;
        s.distances[i] = o.serving_distance;
    });
    for (long i = 0; i < config.trials; ++i) s.tier_counts[tiers[i]]++;
    return s;
}

ActivityEstimate activity_statistics(const SimulationConfig& config) {
    const size_t n = config.scenario.tiers.size();
    std::vector<double> frac(config.trials * n, 0.0);
    parallel_trials(config.trials, [&](long i) {
        TrialOutcome o = run_trial(config, i);
        for (size_t t = 0; t < n; ++t)
            frac[i * n + t] =
                o.interior_bs_counts[t] > 0
                    ? static_cast<double>(o.interior_active_counts[t]) / o.interior_bs_counts[t]
                    : 0.0;
    });
    ActivityEstimate est;
    est.trials = config.trials;
    est.fraction.assign(n, 0.0);
    std::vector<double> col(config.trials);
    for (size_t t = 0; t < n; ++t) {
        for (long i = 0; i < config.trials; ++i) col[i] = frac[i * n + t];
        est.fraction[t] = pairwise_sum(col.data(), col.size()) / static_cast<double>(config.trials);
    }
    return est;
}

void write_trials_csv(std::ostream& out, const SimulationConfig& config, long trials) {
    out << "trial,tier,distance_km,sinr_db,rate_bps_hz";
    for (size_t t = 0; t < config.scenario.tiers.size(); ++t) out << ",active_" << t;
    out << "\n";
    std::vector<TrialOutcome> res(trials);
    parallel_trials(trials, [&](long i) { res[i] = run_trial(config, i); });
    out.precision(9);
    for (long i = 0; i < trials; ++i) {
        const TrialOutcome& o = res[i];
        out << i << ',' << o.serving_tier << ',' << o.serving_distance << ','
            << 10.0 * std::log10(o.sinr) << ',' << o.rate_bps_hz;
        for (int c : o.active_counts) out << ',' << c;
        out << "\n";
    }
}

}  // namespace denseplan
