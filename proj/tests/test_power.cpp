// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "denseplan/errors.hpp"
#include "denseplan/power.hpp"

using namespace denseplan;

namespace {

TierConfig macro_tier() {
    TierConfig t;
    t.name = "macro";
    t.density = 1.0;
    t.tx_power_w = 20.0;
    t.power = {5.32, 118.7, 93.0};
    return t;
}
TierConfig micro_tier() {
    TierConfig t;
    t.name = "micro";
    t.density = 1.0;
    t.tx_power_w = 6.3;
    t.power = {3.1, 53.0, 39.0};
    return t;
}
TierConfig pico_tier() {
    TierConfig t;
    t.name = "pico";
    t.density = 1.0;
    t.tx_power_w = 0.13;
    t.power = {4.0, 6.8, 4.3};
    return t;
}

}  // namespace

TEST_CASE("area power composition") {
    std::vector<TierConfig> tiers{macro_tier(), pico_tier()};
    CHECK(area_power(tiers, {0.0, 0.0}, {2.0, 3.0}) ==
          doctest::Approx(2.0 * 93.0 + 3.0 * 4.3).epsilon(1e-12));
    CHECK(area_power(tiers, {1.0, 0.0}, {0.0, 0.0}) == doctest::Approx(225.1).epsilon(1e-12));
    CHECK(area_power(tiers, {0.0, 0.0}, {0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(area_power(tiers, {-1.0, 0.0}, {0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(area_power(tiers, {1.0}, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("per-class switched-off savings") {
    std::vector<TierConfig> m{macro_tier()}, mi{micro_tier()}, p{pico_tier()};
    CHECK(savings_per_area({1.0}, {0.0}, m) == doctest::Approx(132.1).epsilon(1e-12));
    CHECK(savings_per_area({1.0}, {0.0}, mi) == doctest::Approx(33.53).epsilon(1e-12));
    CHECK(savings_per_area({1.0}, {0.0}, p) == doctest::Approx(3.02).epsilon(1e-12));
    CHECK(savings_per_area({1.0}, {1.0}, p) == 0.0);
    CHECK_THROWS_AS(savings_per_area({1.0}, {2.0}, p), std::domain_error);
}

TEST_CASE("savings are linear in the density gap") {
    std::vector<TierConfig> tiers{macro_tier(), pico_tier()};
    const double s1 = savings_per_area({2.0, 10.0}, {1.5, 6.0}, tiers);
    const double s2 = savings_per_area({3.0, 18.0}, {2.0, 10.0}, tiers);
    CHECK(s1 == doctest::Approx(0.5 * 132.1 + 4.0 * 3.02).epsilon(1e-12));
    CHECK(s2 == doctest::Approx(2.0 * s1).epsilon(1e-12));
}

TEST_CASE("flat profiles produce zero savings") {
    NetworkScenario s;
    s.tiers = {pico_tier()};
    s.ue_density = 1.0;
    TrafficProfile flat;
    flat.slots = {{0, 12, 1.0}, {12, 24, 1.0}};
    SavingsReport rep = daily_savings(s, flat, 2.4);
    REQUIRE(rep.hours.size() == 2);
    for (const SavingsHour& h : rep.hours) {
        CHECK(h.savings == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(h.consumption_with_sleep ==
              doctest::Approx(h.consumption_full).epsilon(1e-9));
    }
    CHECK(rep.daily_relative_saving == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("two-level profile saves only at the trough") {
    NetworkScenario s;
    s.tiers = {pico_tier()};
    s.ue_density = 1.0;
    TrafficProfile p;
    p.slots = {{0, 12, 0.2}, {12, 24, 1.4}};
    SavingsReport rep = daily_savings(s, p, 2.4);
    REQUIRE(rep.hours.size() == 2);
    CHECK(rep.hours[0].savings > 0.0);
    CHECK(rep.hours[1].savings == doctest::Approx(0.0).epsilon(1e-6));
    // interference-limited regime: optimal density tracks the load linearly
    CHECK(rep.hours[0].active_densities[0] / rep.deployed_densities[0] ==
          doctest::Approx(0.2 / 1.4).epsilon(0.02));
    CHECK(rep.hours[0].relative_saving ==
          doctest::Approx((1.0 - 0.2 / 1.4) * (1.0 - 4.3 / 7.32)).epsilon(0.02));
}

TEST_CASE("default profile peaks its relative saving at the dawn trough") {
    NetworkScenario s;
    s.tiers = {pico_tier()};
    s.ue_density = 1.0;
    SavingsReport rep = daily_savings(s, default_traffic_profile(), 2.4);
    double best = -1.0;
    std::string best_label;
    for (const SavingsHour& h : rep.hours)
        if (h.relative_saving > best) {
            best = h.relative_saving;
            best_label = h.label;
        }
    CHECK(best_label == "4-6");
    CHECK(rep.all_hours_feasible);
    // daily mean load is 100% of reference, peak 140%
    CHECK(rep.daily_relative_saving ==
          doctest::Approx((1.0 - 100.0 / 140.0) * (1.0 - 4.3 / 7.32)).epsilon(0.03));
}

TEST_CASE("peak-load infeasibility propagates") {
    NetworkScenario s;
    s.tiers = {pico_tier()};
    s.ue_density = 1.0;
    s.noise_w = 1e9;
    OptimizeOptions opt;
    opt.density_cap = 100.0;
    TrafficProfile p;
    p.slots = {{0, 24, 1.0}};
    CHECK_THROWS_AS(daily_savings(s, p, 20.0, opt), infeasible_error);
}
