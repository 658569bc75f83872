#include "spectra/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spectra/error.hpp"

namespace spectra {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      fail(ErrorCode::Parse, "unknown key '" + key + "' in " + where);
    }
  }
}

double number(const json& obj, const std::string& key,
              const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(ErrorCode::Parse, "missing '" + key + "' in " + where);
  }
  if (!it->is_number()) {
    fail(ErrorCode::Parse, "'" + key + "' in " + where + " must be a number");
  }
  return it->get<double>();
}

double intensity(const json& obj, const std::string& stem, double disk_radius,
                 const std::string& where) {
  const bool per_disk = obj.contains(stem + "_per_disk");
  const bool per_m2 = obj.contains(stem + "_per_m2");
  if (per_disk == per_m2) {
    fail(ErrorCode::Parse, where + " needs exactly one of '" + stem +
                               "_per_disk' or '" + stem + "_per_m2'");
  }
  if (per_m2) return number(obj, stem + "_per_m2", where);
  return per_disk_to_intensity(number(obj, stem + "_per_disk", where),
                               disk_radius);
}

unsigned index_field(const json& obj, const std::string& key,
                     const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer() ||
      it->get<long long>() < 0) {
    fail(ErrorCode::Parse,
         "'" + key + "' in " + where + " must be a non-negative integer");
  }
  return static_cast<unsigned>(it->get<long long>());
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::Parse, "scenario must be an object");
  reject_unknown(doc,
                 {"path_loss_exponent", "noise_power_dbm", "region_radius_m",
                  "intensity_disk_radius_m", "power_cap_dbm", "sellers",
                  "buyers", "sharing_groups"},
                 "scenario");

  ScenarioConfig c;
  c.path_loss_exponent = number(doc, "path_loss_exponent", "scenario");
  c.noise_power_dbm = number(doc, "noise_power_dbm", "scenario");
  c.region_radius_m = number(doc, "region_radius_m", "scenario");
  if (doc.contains("power_cap_dbm")) {
    c.power_cap_dbm = number(doc, "power_cap_dbm", "scenario");
  }
  const double disk = doc.contains("intensity_disk_radius_m")
                          ? number(doc, "intensity_disk_radius_m", "scenario")
                          : c.region_radius_m;

  const auto sellers = doc.value("sellers", json::array());
  const auto buyers = doc.value("buyers", json::array());
  const auto groups = doc.value("sharing_groups", json::array());
  if (!sellers.is_array() || !buyers.is_array() || !groups.is_array()) {
    fail(ErrorCode::Parse, "sellers, buyers and sharing_groups must be arrays");
  }

  for (std::size_t i = 0; i < sellers.size(); ++i) {
    const auto& s = sellers[i];
    const std::string where = "sellers[" + std::to_string(i) + "]";
    if (!s.is_object()) fail(ErrorCode::Parse, where + " must be an object");
    reject_unknown(s,
                   {"bs_intensity_per_disk", "bs_intensity_per_m2",
                    "ue_intensity_per_disk", "ue_intensity_per_m2",
                    "num_subbands", "tx_power_dbm",
                    "interference_threshold_dbm"},
                   where);
    SellerSpec spec;
    spec.bs_intensity = intensity(s, "bs_intensity", disk, where);
    spec.ue_intensity = intensity(s, "ue_intensity", disk, where);
    if (!s.contains("num_subbands") || !s["num_subbands"].is_number_integer()) {
      fail(ErrorCode::Parse, "'num_subbands' in " + where +
                                 " must be an integer");
    }
    spec.num_subbands = s["num_subbands"].get<int>();
    spec.tx_power_dbm = number(s, "tx_power_dbm", where);
    spec.interference_threshold_dbm =
        number(s, "interference_threshold_dbm", where);
    c.sellers.push_back(spec);
  }

  for (std::size_t i = 0; i < buyers.size(); ++i) {
    const auto& b = buyers[i];
    const std::string where = "buyers[" + std::to_string(i) + "]";
    if (!b.is_object()) fail(ErrorCode::Parse, where + " must be an object");
    reject_unknown(b,
                   {"bs_intensity_per_disk", "bs_intensity_per_m2",
                    "ue_intensity_per_disk", "ue_intensity_per_m2"},
                   where);
    c.buyers.push_back({intensity(b, "bs_intensity", disk, where),
                        intensity(b, "ue_intensity", disk, where)});
  }

  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    const std::string where = "sharing_groups[" + std::to_string(i) + "]";
    if (!g.is_object()) fail(ErrorCode::Parse, where + " must be an object");
    reject_unknown(g, {"seller", "band", "buyers"}, where);
    const SubBandId band{index_field(g, "seller", where),
                         index_field(g, "band", where)};
    if (c.sharing_groups.contains(band)) {
      fail(ErrorCode::Parse, "duplicate sharing group for " + to_string(band));
    }
    std::vector<unsigned> members;
    const auto list = g.value("buyers", json::array());
    if (!list.is_array()) fail(ErrorCode::Parse, where + ".buyers must be an array");
    for (const auto& m : list) {
      if (!m.is_number_integer() || m.get<long long>() < 0) {
        fail(ErrorCode::Parse, where + ".buyers entries must be indices");
      }
      members.push_back(static_cast<unsigned>(m.get<long long>()));
    }
    std::sort(members.begin(), members.end());
    c.sharing_groups.emplace(band, std::move(members));
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const ScenarioConfig& c) {
  json doc;
  doc["path_loss_exponent"] = c.path_loss_exponent;
  doc["noise_power_dbm"] = c.noise_power_dbm;
  doc["region_radius_m"] = c.region_radius_m;
  doc["power_cap_dbm"] = c.power_cap_dbm;
  doc["sellers"] = json::array();
  for (const auto& s : c.sellers) {
    doc["sellers"].push_back({{"bs_intensity_per_m2", s.bs_intensity},
                              {"ue_intensity_per_m2", s.ue_intensity},
                              {"num_subbands", s.num_subbands},
                              {"tx_power_dbm", s.tx_power_dbm},
                              {"interference_threshold_dbm",
                               s.interference_threshold_dbm}});
  }
  doc["buyers"] = json::array();
  for (const auto& b : c.buyers) {
    doc["buyers"].push_back({{"bs_intensity_per_m2", b.bs_intensity},
                             {"ue_intensity_per_m2", b.ue_intensity}});
  }
  doc["sharing_groups"] = json::array();
  for (const auto& [band, members] : c.sharing_groups) {
    doc["sharing_groups"].push_back(
        {{"seller", band.seller}, {"band", band.band}, {"buyers", members}});
  }
  return doc.dump(2);
}

}  // namespace spectra
