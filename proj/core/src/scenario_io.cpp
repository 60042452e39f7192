// SPDX-License-Identifier: Apache-2.0
#include "denseplan/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace denseplan {

using nlohmann::json;

namespace {

TierConfig tier_from_json(const json& jt) {
    TierConfig t;
    t.name = jt.value("name", std::string{});
    t.density = jt.at("density").get<double>();
    t.tx_power_w = jt.at("tx_power_w").get<double>();
    t.bias_linear = db_to_linear(jt.value("bias_db", 0.0));
    t.pathloss = jt.value("pathloss_alpha", 4.0);
    t.nakagami_m = jt.value("nakagami_m", 1.0);
    t.shadow_mean_db = jt.value("shadow_mean_db", 0.0);
    t.shadow_std_db = jt.value("shadow_std_db", 0.0);
    if (jt.contains("power")) {
        const json& jp = jt.at("power");
        t.power.amp_slope = jp.value("amp_slope", 1.0);
        t.power.circuit_w = jp.value("circuit_w", 0.0);
        t.power.sleep_w = jp.value("sleep_w", 0.0);
    }
    return t;
}

json tier_to_json(const TierConfig& t) {
    json jt;
    if (!t.name.empty()) jt["name"] = t.name;
    jt["density"] = t.density;
    jt["tx_power_w"] = t.tx_power_w;
    jt["bias_db"] = linear_to_db(t.bias_linear);
    jt["pathloss_alpha"] = t.pathloss;
    jt["nakagami_m"] = t.nakagami_m;
    jt["shadow_mean_db"] = t.shadow_mean_db;
    jt["shadow_std_db"] = t.shadow_std_db;
    jt["power"] = {{"amp_slope", t.power.amp_slope},
                   {"circuit_w", t.power.circuit_w},
                   {"sleep_w", t.power.sleep_w}};
    return jt;
}

TrafficSlot slot_from_json(const json& js) {
    TrafficSlot s;
    if (js.contains("hours")) {
        // "4-6" style range label
        const std::string label = js.at("hours").get<std::string>();
        const auto dash = label.find('-');
        if (dash == std::string::npos)
            throw std::domain_error("traffic slot: hours label must be \"H1-H2\"");
        s.hour_begin = std::stoi(label.substr(0, dash));
        s.hour_end = std::stoi(label.substr(dash + 1));
    } else {
        s.hour_begin = js.at("hour_begin").get<int>();
        s.hour_end = js.at("hour_end").get<int>();
    }
    if (js.contains("relative_load_percent"))
        s.relative_load = js.at("relative_load_percent").get<double>() / 100.0;
    else
        s.relative_load = js.at("relative_load").get<double>();
    return s;
}

}  // namespace

ScenarioFile parse_scenario(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::domain_error(std::string("scenario: JSON parse failure: ") + e.what());
    }
    ScenarioFile out;
    try {
        for (const json& jt : j.at("tiers")) out.scenario.tiers.push_back(tier_from_json(jt));
        out.scenario.ue_density = j.at("ue_density").get<double>();
        if (j.contains("noise_w") && j.contains("noise_from_snr_db"))
            throw std::domain_error("scenario: give either noise_w or noise_from_snr_db");
        if (j.contains("noise_w")) {
            out.scenario.noise_w = j.at("noise_w").get<double>();
        } else if (j.contains("noise_from_snr_db")) {
            if (out.scenario.tiers.empty())
                throw std::domain_error("scenario: SNR noise needs a first tier");
            const double snr = db_to_linear(j.at("noise_from_snr_db").get<double>());
            out.scenario.noise_w = out.scenario.tiers.front().tx_power_w / snr;
        }
        out.scenario.sinr_gap_linear = db_to_linear(j.value("sinr_gap_db", 0.0));
        if (j.contains("traffic_profile")) {
            TrafficProfile p;
            for (const json& js : j.at("traffic_profile")) p.slots.push_back(slot_from_json(js));
            validate(p);
            out.profile = p;
        }
    } catch (const json::exception& e) {
        throw std::domain_error(std::string("scenario: ") + e.what());
    }
    validate(out.scenario);
    return out;
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("scenario: cannot open " + path);
    return parse_scenario(in);
}

std::string serialize_scenario(const ScenarioFile& file) {
    json j;
    j["tiers"] = json::array();
    for (const TierConfig& t : file.scenario.tiers) j["tiers"].push_back(tier_to_json(t));
    j["ue_density"] = file.scenario.ue_density;
    j["noise_w"] = file.scenario.noise_w;
    j["sinr_gap_db"] = linear_to_db(file.scenario.sinr_gap_linear);
    if (file.profile) {
        j["traffic_profile"] = json::array();
        for (const TrafficSlot& s : file.profile->slots)
            j["traffic_profile"].push_back({{"hour_begin", s.hour_begin},
                                            {"hour_end", s.hour_end},
                                            {"relative_load", s.relative_load}});
    }
    return j.dump(2) + "\n";
}

TrafficProfile parse_profile_csv(std::istream& in) {
    TrafficProfile p;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {  // header row
            first = false;
            continue;
        }
        std::istringstream row(line);
        std::string a, b, c;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c))
            throw std::domain_error("profile csv: expected hour_start,hour_end,relative_load_percent");
        TrafficSlot s;
        s.hour_begin = std::stoi(a);
        s.hour_end = std::stoi(b);
        s.relative_load = std::stod(c) / 100.0;
        p.slots.push_back(s);
    }
    validate(p);
    return p;
}

TrafficProfile load_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("profile csv: cannot open " + path);
    return parse_profile_csv(in);
}

}  // namespace denseplan
