#include "spectra/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InvalidConfig: return "invalid config";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::NotConverged: return "quadrature did not converge";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

std::string to_string(OperatorId id) {
  return (id.is_seller() ? "seller" : "buyer") + std::to_string(id.index);
}

std::string to_string(SubBandId id) {
  return "s" + std::to_string(id.seller) + "b" + std::to_string(id.band);
}

double ScenarioConfig::bs_intensity(OperatorId id) const {
  return id.is_seller() ? seller(id.index).bs_intensity
                        : buyer(id.index).bs_intensity;
}

double ScenarioConfig::ue_intensity(OperatorId id) const {
  return id.is_seller() ? seller(id.index).ue_intensity
                        : buyer(id.index).ue_intensity;
}

const std::vector<unsigned>& ScenarioConfig::group(SubBandId band) const {
  auto it = sharing_groups.find(band);
  if (it == sharing_groups.end()) {
    fail(ErrorCode::InvalidArgument, "unknown sub-band " + to_string(band));
  }
  return it->second;
}

bool ScenarioConfig::band_exists(SubBandId band) const {
  return band.seller < sellers.size() &&
         static_cast<int>(band.band) < sellers[band.seller].num_subbands;
}

std::vector<SubBandId> ScenarioConfig::leased_bands(unsigned buyer) const {
  std::vector<SubBandId> out;
  for (const auto& [band, members] : sharing_groups) {
    if (std::find(members.begin(), members.end(), buyer) != members.end()) {
      out.push_back(band);
    }
  }
  return out;
}

std::vector<SubBandId> ScenarioConfig::own_bands(unsigned s) const {
  std::vector<SubBandId> out;
  const int n = seller(s).num_subbands;
  for (int l = 0; l < n; ++l) out.push_back({s, static_cast<unsigned>(l)});
  return out;
}

namespace {

void check_finite(std::vector<Violation>& out, const std::string& what,
                  double v) {
  if (!std::isfinite(v)) {
    out.push_back({"non_finite", what + " must be finite"});
  }
}

void check_intensity(std::vector<Violation>& out, const std::string& what,
                     double v) {
  check_finite(out, what, v);
  if (v < 0.0) {
    out.push_back({"negative_intensity", what + " must be non-negative"});
  }
}

}  // namespace

std::vector<Violation> validate(const ScenarioConfig& c) {
  std::vector<Violation> out;

  check_finite(out, "path_loss_exponent", c.path_loss_exponent);
  if (!(c.path_loss_exponent > 2.0)) {
    out.push_back({"alpha_not_above_2", "path-loss exponent must exceed 2"});
  }
  check_finite(out, "noise_power_dbm", c.noise_power_dbm);
  check_finite(out, "power_cap_dbm", c.power_cap_dbm);
  if (!(c.region_radius_m > 0.0) || !std::isfinite(c.region_radius_m)) {
    out.push_back({"region_radius_nonpositive",
                   "region_radius_m must be positive and finite"});
  }

  for (std::size_t i = 0; i < c.sellers.size(); ++i) {
    const auto& s = c.sellers[i];
    const std::string tag = "sellers[" + std::to_string(i) + "]";
    check_intensity(out, tag + ".bs_intensity", s.bs_intensity);
    check_intensity(out, tag + ".ue_intensity", s.ue_intensity);
    check_finite(out, tag + ".tx_power_dbm", s.tx_power_dbm);
    check_finite(out, tag + ".interference_threshold_dbm",
                 s.interference_threshold_dbm);
    if (s.num_subbands < 1) {
      out.push_back({"num_subbands_nonpositive",
                     tag + ".num_subbands must be a positive integer"});
    }
  }
  for (std::size_t i = 0; i < c.buyers.size(); ++i) {
    const std::string tag = "buyers[" + std::to_string(i) + "]";
    check_intensity(out, tag + ".bs_intensity", c.buyers[i].bs_intensity);
    check_intensity(out, tag + ".ue_intensity", c.buyers[i].ue_intensity);
  }

  for (const auto& [band, members] : c.sharing_groups) {
    if (!c.band_exists(band)) {
      out.push_back({"unknown_band", "sharing group for unknown sub-band " +
                                         to_string(band)});
    }
    std::set<unsigned> seen;
    for (unsigned b : members) {
      if (b >= c.buyers.size()) {
        out.push_back({"unknown_buyer", "unknown buyer " + std::to_string(b) +
                                            " in sharing group " +
                                            to_string(band)});
      }
      if (!seen.insert(b).second) {
        out.push_back({"duplicate_buyer", "buyer " + std::to_string(b) +
                                              " listed twice in " +
                                              to_string(band)});
      }
    }
  }
  for (std::size_t s = 0; s < c.sellers.size(); ++s) {
    for (int l = 0; l < c.sellers[s].num_subbands; ++l) {
      const SubBandId band{static_cast<unsigned>(s), static_cast<unsigned>(l)};
      if (!c.sharing_groups.contains(band)) {
        out.push_back({"missing_sharing_group",
                       "sub-band " + to_string(band) + " has no sharing group"});
      }
    }
  }
  return out;
}

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }

double linear_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double per_disk_to_intensity(double count, double r) {
  return count / (std::numbers::pi * r * r);
}

double intensity_to_per_disk(double intensity, double r) {
  return intensity * std::numbers::pi * r * r;
}

SubBandContext derive_context(const ScenarioConfig& config, SubBandId band,
                              OperatorId evaluated) {
  if (!config.band_exists(band)) {
    fail(ErrorCode::InvalidArgument, "unknown sub-band " + to_string(band));
  }
  const auto& members = config.group(band);
  const auto& seller = config.seller(band.seller);

  if (evaluated.is_seller() && evaluated.index != band.seller) {
    fail(ErrorCode::InvalidArgument,
         to_string(evaluated) + " does not own sub-band " + to_string(band));
  }
  if (evaluated.is_buyer() &&
      std::find(members.begin(), members.end(), evaluated.index) ==
          members.end()) {
    fail(ErrorCode::InvalidArgument, to_string(evaluated) +
                                         " is not in the sharing group of " +
                                         to_string(band));
  }

  SubBandContext ctx;
  ctx.alpha = config.path_loss_exponent;
  ctx.noise_linear = dbm_to_linear(config.noise_power_dbm);
  ctx.seller_bs_intensity = seller.bs_intensity;
  ctx.seller_ue_intensity = seller.ue_intensity;
  ctx.seller_power_linear = dbm_to_linear(seller.tx_power_dbm);
  ctx.threshold_linear = dbm_to_linear(seller.interference_threshold_dbm);

  // Ascending buyer index; members are kept sorted by the config loader.
  std::vector<unsigned> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  double cross = 0.0;
  for (unsigned b : sorted) {
    const double lam = config.buyer(b).bs_intensity;
    total += lam;
    if (!(evaluated.is_buyer() && evaluated.index == b)) cross += lam;
  }
  ctx.total_buyer_intensity = total;
  ctx.cross_buyer_intensity = cross;
  ctx.buyer_intensity =
      evaluated.is_buyer() ? config.buyer(evaluated.index).bs_intensity : 0.0;
  return ctx;
}

std::string canonical_text(const ScenarioConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=" << c.path_loss_exponent << ";noise=" << c.noise_power_dbm
     << ";radius=" << c.region_radius_m << ";cap=" << c.power_cap_dbm << ";";
  for (const auto& s : c.sellers) {
    os << "S(" << s.bs_intensity << ',' << s.ue_intensity << ','
       << s.num_subbands << ',' << s.tx_power_dbm << ','
       << s.interference_threshold_dbm << ");";
  }
  for (const auto& b : c.buyers) {
    os << "B(" << b.bs_intensity << ',' << b.ue_intensity << ");";
  }
  for (const auto& [band, members] : c.sharing_groups) {
    os << "Q" << to_string(band) << '[';
    for (unsigned m : members) os << m << ',';
    os << "];";
  }
  return os.str();
}

std::uint64_t config_hash(const ScenarioConfig& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical_text(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace spectra
