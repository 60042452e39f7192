// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "denseplan/scenario.hpp"

namespace denseplan {

struct ScenarioFile {
    NetworkScenario scenario;
    std::optional<TrafficProfile> profile;  // inline profile, if present
};

/// JSON scenario document. Densities in BSs/km^2 and UEs/km^2, powers in W,
/// bias and shadowing in dB. Noise is either noise_w or noise_from_snr_db
/// (SNR referenced to the first tier's transmit power at 1 km).
ScenarioFile parse_scenario(std::istream& in);
ScenarioFile load_scenario(const std::string& path);

std::string serialize_scenario(const ScenarioFile& file);

/// CSV traffic profile: header then rows hour_start,hour_end,relative_load_percent.
TrafficProfile parse_profile_csv(std::istream& in);
TrafficProfile load_profile_csv(const std::string& path);

}  // namespace denseplan
