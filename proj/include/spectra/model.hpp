#pragma once

// Scenario data model: operators, sub-bands, sharing groups, and the
// per-sub-band inputs consumed by the analytic engine.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spectra {

enum class OperatorKind { Seller, Buyer };

struct OperatorId {
  OperatorKind kind = OperatorKind::Seller;
  unsigned index = 0;

  static OperatorId seller(unsigned i) { return {OperatorKind::Seller, i}; }
  static OperatorId buyer(unsigned i) { return {OperatorKind::Buyer, i}; }

  bool is_seller() const { return kind == OperatorKind::Seller; }
  bool is_buyer() const { return kind == OperatorKind::Buyer; }

  auto operator<=>(const OperatorId&) const = default;
};

/// "seller0", "buyer3"; also the CSV column prefix.
std::string to_string(OperatorId id);

struct SubBandId {
  unsigned seller = 0;
  unsigned band = 0;

  auto operator<=>(const SubBandId&) const = default;
};

std::string to_string(SubBandId id);

struct SellerSpec {
  double bs_intensity = 0.0;  // per m^2
  double ue_intensity = 0.0;  // per m^2
  int num_subbands = 1;
  double tx_power_dbm = 0.0;
  double interference_threshold_dbm = 0.0;
};

struct BuyerSpec {
  double bs_intensity = 0.0;  // per m^2
  double ue_intensity = 0.0;  // per m^2
};

struct ScenarioConfig {
  std::vector<SellerSpec> sellers;
  std::vector<BuyerSpec> buyers;
  // Buyers leasing each sub-band; the owning seller is implicit.
  std::map<SubBandId, std::vector<unsigned>> sharing_groups;
  double path_loss_exponent = 4.0;
  double noise_power_dbm = -120.0;
  double region_radius_m = 500.0;
  // Transmit power used by a buyer BS when no seller UE constrains it.
  double power_cap_dbm = 40.0;

  const SellerSpec& seller(unsigned i) const { return sellers.at(i); }
  const BuyerSpec& buyer(unsigned i) const { return buyers.at(i); }

  double bs_intensity(OperatorId id) const;
  double ue_intensity(OperatorId id) const;

  /// Sorted buyer indices sharing `band`; throws if the band is unknown.
  const std::vector<unsigned>& group(SubBandId band) const;
  bool band_exists(SubBandId band) const;

  /// Bands a buyer leases, ascending.
  std::vector<SubBandId> leased_bands(unsigned buyer) const;
  /// All sub-bands of a seller, ascending.
  std::vector<SubBandId> own_bands(unsigned seller) const;
};

struct Violation {
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Every invariant violation in `config`; empty when valid.
std::vector<Violation> validate(const ScenarioConfig& config);

double dbm_to_linear(double dbm);
double linear_to_dbm(double milliwatts);

/// Converts a Table-I style "count over a disk of radius r" to points per m^2.
double per_disk_to_intensity(double count, double disk_radius_m);
double intensity_to_per_disk(double intensity, double disk_radius_m);

struct SubBandContext {
  double alpha = 4.0;
  double noise_linear = 0.0;           // mW
  double seller_bs_intensity = 0.0;
  double seller_ue_intensity = 0.0;
  double seller_power_linear = 1.0;    // mW
  double threshold_linear = 1.0;       // mW
  // Evaluated buyer's BS intensity; zero when the seller is evaluated.
  double buyer_intensity = 0.0;
  // Other buyers on the band (excluding the evaluated one).
  double cross_buyer_intensity = 0.0;
  // All buyers on the band.
  double total_buyer_intensity = 0.0;
};

SubBandContext derive_context(const ScenarioConfig& config, SubBandId band,
                              OperatorId evaluated);

/// 64-bit FNV-1a over a canonical text rendering of every field.
std::uint64_t config_hash(const ScenarioConfig& config);

/// Canonical text rendering (17 significant digits) used by config_hash.
std::string canonical_text(const ScenarioConfig& config);

}  // namespace spectra
