#pragma once

#include <string>
#include <string_view>

#include "spectra/model.hpp"

namespace spectra {

// Scenario files are JSON documents. Field names follow ScenarioConfig with
// the unit in the suffix:
//
//   {
//     "path_loss_exponent": 5,
//     "noise_power_dbm": -120,
//     "region_radius_m": 500,
//     "intensity_disk_radius_m": 500,       // optional, defaults to region
//     "power_cap_dbm": 40,                  // optional
//     "sellers": [{"bs_intensity_per_disk": 8, "ue_intensity_per_disk": 50,
//                  "num_subbands": 1, "tx_power_dbm": 10,
//                  "interference_threshold_dbm": -100}],
//     "buyers":  [{"bs_intensity_per_disk": 8, "ue_intensity_per_disk": 50}],
//     "sharing_groups": [{"seller": 0, "band": 0, "buyers": [0]}]
//   }
//
// Intensities may instead be given as `bs_intensity_per_m2`. Unknown keys are
// rejected. Parsing does not validate; call validate() on the result.

ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::string& path);

/// JSON rendering using `_per_m2` intensities; parse_config round-trips it.
std::string dump_config(const ScenarioConfig& config);

}  // namespace spectra
