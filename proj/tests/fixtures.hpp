#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "spectra/model.hpp"

namespace fixtures {

inline double per_disk(double count) {
  return count / (std::numbers::pi * 500.0 * 500.0);
}

// One seller, one buyer sharing its single band; alpha 5, 10 dBm seller
// power, zeta -100 dBm, noise -120 dBm, 500 m region.
inline spectra::ScenarioConfig base(double buyer_bs = 8, double seller_ue = 50) {
  spectra::ScenarioConfig c;
  c.sellers.push_back({per_disk(8), per_disk(seller_ue), 1, 10.0, -100.0});
  c.buyers.push_back({per_disk(buyer_bs), per_disk(50)});
  c.sharing_groups[{0, 0}] = {0};
  c.path_loss_exponent = 5.0;
  c.noise_power_dbm = -120.0;
  c.region_radius_m = 500.0;
  return c;
}

inline std::string source_dir() { return SPECTRA_SOURCE_DIR; }

}  // namespace fixtures
