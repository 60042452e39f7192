// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "denseplan/scenario.hpp"
#include "denseplan/scenario_io.hpp"

using namespace denseplan;

namespace {

TierConfig tier(double density, double power) {
    TierConfig t;
    t.density = density;
    t.tx_power_w = power;
    return t;
}

// sampling oracle for the log-normal fractional moment
double moment_oracle(double mu_db, double sigma_db, double alpha, long n) {
    std::mt19937_64 rng(20240811);
    std::normal_distribution<double> g(mu_db, sigma_db);
    double sum = 0.0;
    const double e = 2.0 / alpha;
    for (long i = 0; i < n; ++i) sum += std::pow(std::pow(10.0, g(rng) / 10.0), e);
    return sum / static_cast<double>(n);
}

}  // namespace

TEST_CASE("shadow fractional moment") {
    TierConfig t = tier(1.0, 1.0);
    t.pathloss = 4.0;
    CHECK(shadow_fractional_moment(t) == 1.0);

    t.shadow_std_db = 6.0;
    CHECK(shadow_fractional_moment(t) == doctest::Approx(1.2694521).epsilon(1e-6));
    CHECK(shadow_fractional_moment(t) == doctest::Approx(moment_oracle(0, 6, 4, 2000000)).epsilon(4e-3));

    t.shadow_std_db = 1.0;
    CHECK(shadow_fractional_moment(t) == doctest::Approx(1.0066494).epsilon(1e-6));
    CHECK(shadow_fractional_moment(t) == doctest::Approx(moment_oracle(0, 1, 4, 500000)).epsilon(1e-3));
}

TEST_CASE("shadow moment is increasing in the spread") {
    TierConfig t = tier(1.0, 1.0);
    double prev = 0.0;
    for (double sd = 0.0; sd <= 12.0; sd += 1.5) {
        t.shadow_std_db = sd;
        const double m = shadow_fractional_moment(t);
        CHECK(m > prev);
        prev = m;
    }
}

TEST_CASE("displaced density") {
    TierConfig t = tier(2.0, 1.0);
    CHECK(displaced_density(t) == 2.0);
    t.shadow_std_db = 6.0;
    CHECK(displaced_density(t) == doctest::Approx(2.0 * 1.2694521).epsilon(1e-6));
    t.density = 0.0;
    CHECK(displaced_density(t) == 0.0);
}

TEST_CASE("active cost of the reference hardware classes") {
    TierConfig pico = tier(1.0, 0.13);
    pico.power = {4.0, 6.8, 4.3};
    CHECK(active_cost(pico) == doctest::Approx(7.32).epsilon(1e-12));

    TierConfig macro = tier(1.0, 20.0);
    macro.power = {5.32, 118.7, 93.0};
    CHECK(active_cost(macro) == doctest::Approx(225.1).epsilon(1e-12));
    CHECK(active_cost(macro) / active_cost(pico) == doctest::Approx(30.7514).epsilon(0.01 / 30.7514));

    TierConfig flat = tier(1.0, 0.0);
    flat.power = {1.0, 5.0, 0.0};
    CHECK(active_cost(flat) == 5.0);
}

TEST_CASE("scenario validation catches broken inputs") {
    NetworkScenario s;
    CHECK_THROWS_AS(validate(s), std::domain_error);
    s.tiers.push_back(tier(1.0, 1.0));
    CHECK_NOTHROW(validate(s));
    s.tiers[0].pathloss = 2.0;
    CHECK_THROWS_AS(validate(s), std::domain_error);
    s.tiers[0].pathloss = 4.0;
    s.tiers[0].nakagami_m = 0.3;
    CHECK_THROWS_AS(validate(s), std::domain_error);
    s.tiers[0].nakagami_m = 1.0;
    s.tiers[0].power = {1.0, 1.0, 2.0};  // sleep above circuit
    CHECK_THROWS_AS(validate(s), std::domain_error);
}

TEST_CASE("scenario JSON round trip is field-identical") {
    ScenarioFile f;
    NetworkScenario& s = f.scenario;
    TierConfig a = tier(0.3, 6.3);
    a.name = "micro";
    a.bias_linear = db_to_linear(3.0);
    a.nakagami_m = 2.0;
    a.shadow_std_db = 6.0;
    a.power = {3.1, 53.0, 39.0};
    TierConfig b = tier(0.7, 0.13);
    b.name = "pico";
    b.pathloss = 3.7;
    b.power = {4.0, 6.8, 4.3};
    s.tiers = {a, b};
    s.ue_density = 84.87;
    s.noise_w = 6.3e-6;
    s.sinr_gap_linear = db_to_linear(1.0);
    f.profile = default_traffic_profile();

    std::istringstream in(serialize_scenario(f));
    ScenarioFile g = parse_scenario(in);
    REQUIRE(g.scenario.tiers.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        const TierConfig &x = s.tiers[i], &y = g.scenario.tiers[i];
        CHECK(y.name == x.name);
        CHECK(y.density == doctest::Approx(x.density).epsilon(1e-12));
        CHECK(y.tx_power_w == doctest::Approx(x.tx_power_w).epsilon(1e-12));
        CHECK(y.bias_linear == doctest::Approx(x.bias_linear).epsilon(1e-12));
        CHECK(y.pathloss == doctest::Approx(x.pathloss).epsilon(1e-12));
        CHECK(y.nakagami_m == doctest::Approx(x.nakagami_m).epsilon(1e-12));
        CHECK(y.shadow_std_db == doctest::Approx(x.shadow_std_db).epsilon(1e-12));
        CHECK(y.power.amp_slope == doctest::Approx(x.power.amp_slope).epsilon(1e-12));
        CHECK(y.power.circuit_w == doctest::Approx(x.power.circuit_w).epsilon(1e-12));
        CHECK(y.power.sleep_w == doctest::Approx(x.power.sleep_w).epsilon(1e-12));
    }
    CHECK(g.scenario.ue_density == doctest::Approx(s.ue_density).epsilon(1e-12));
    CHECK(g.scenario.noise_w == doctest::Approx(s.noise_w).epsilon(1e-12));
    CHECK(g.scenario.sinr_gap_linear == doctest::Approx(s.sinr_gap_linear).epsilon(1e-12));
    REQUIRE(g.profile.has_value());
    CHECK(g.profile->slots.size() == f.profile->slots.size());
}

TEST_CASE("SNR noise convention references the first tier at 1 km") {
    std::istringstream in(R"({
      "tiers": [{"density": 0.3, "tx_power_w": 6.3}, {"density": 0.7, "tx_power_w": 0.13}],
      "ue_density": 10.0,
      "noise_from_snr_db": 60.0
    })");
    ScenarioFile f = parse_scenario(in);
    CHECK(f.scenario.noise_w == doctest::Approx(6.3e-6).epsilon(1e-12));
}

TEST_CASE("profile CSV parsing") {
    std::istringstream in("hour_start,hour_end,relative_load_percent\n4,6,20\n16,22,140\n");
    TrafficProfile p = parse_profile_csv(in);
    REQUIRE(p.slots.size() == 2);
    CHECK(p.slots[0].relative_load == doctest::Approx(0.2));
    CHECK(p.slots[1].hour_end == 22);
    CHECK(p.peak_load() == doctest::Approx(1.4));
}

TEST_CASE("default profile covers the day with unit mean load") {
    TrafficProfile p = default_traffic_profile();
    validate(p);
    CHECK(p.total_hours() == 24);
    double weighted = 0.0;
    double lo = 10.0, hi = 0.0;
    bool trough_at_dawn = false;
    for (const TrafficSlot& s : p.slots) {
        weighted += s.relative_load * (s.hour_end - s.hour_begin);
        lo = std::min(lo, s.relative_load);
        hi = std::max(hi, s.relative_load);
        if (s.hour_begin == 4 && s.relative_load == 0.2) trough_at_dawn = true;
    }
    CHECK(weighted / 24.0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lo == doctest::Approx(0.2));
    CHECK(hi == doctest::Approx(1.4));
    CHECK(trough_at_dawn);
}

TEST_CASE("bad scenario files raise parse errors") {
    std::istringstream bad("{ nope");
    CHECK_THROWS_AS(parse_scenario(bad), std::domain_error);
    std::istringstream both(R"({"tiers":[{"density":1,"tx_power_w":1}],
        "ue_density":1, "noise_w":0, "noise_from_snr_db": 20})");
    CHECK_THROWS_AS(parse_scenario(both), std::domain_error);
}
