#pragma once

// Monte Carlo engine. Every trial samples the full multi-operator network
// inside a disk centred on the typical UE, applies buyer power control per
// sub-band, and evaluates the SINR (or interference) seen at the origin.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spectra/model.hpp"
#include "spectra/rng.hpp"

namespace spectra::sim {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point2D a, Point2D b);

/// fading * d^-alpha; the single place link gains are computed, so power
/// assignment and constraint checks see bit-identical values.
double path_gain(double fading, double d, double alpha);

enum class PowerControl {
  // zeta / H with H the largest gain to any seller UE (the adopted rule).
  MaxAllowable,
  // Powers drawn i.i.d. from the analytic P law, ignoring geometry.
  IndependentMarks,
  // zeta * d_min^alpha: unit-fading reconstruction of a nearest-UE rule.
  NearestDistance,
};

const char* to_string(PowerControl p);

struct SimOptions {
  PowerControl power = PowerControl::MaxAllowable;
};

/// Fading from the typical UE at the origin to every transmitting BS.
struct ProbeFading {
  std::vector<double> seller;               // [seller BS]
  std::vector<std::vector<double>> buyers;  // [buyer slot][BS]
};

struct BandRealization {
  SubBandId id;
  std::vector<unsigned> buyers;  // sharing group, ascending
  // [buyer slot][f * n_seller_ue + i]: fading from BS f to seller UE i.
  std::vector<std::vector<double>> constraint_fading;
  std::vector<std::vector<double>> buyer_power;  // [buyer slot][BS], mW
  ProbeFading seller_probe;
  std::vector<ProbeFading> buyer_probe;  // [buyer slot]
  std::uint64_t capped_bs = 0;           // BSs without a seller UE to protect

  std::size_t slot_of(unsigned buyer) const;
};

struct NetworkRealization {
  std::vector<std::vector<Point2D>> seller_bs;
  std::vector<std::vector<Point2D>> seller_ue;
  std::vector<std::vector<Point2D>> buyer_bs;
  std::vector<BandRealization> bands;

  const BandRealization& band(SubBandId id) const;
  BandRealization& band(SubBandId id);
};

/// Homogeneous PPP on the disk of radius `radius` centred at the origin.
std::vector<Point2D> sample_ppp(double intensity, double radius, Rng& rng);

/// max_i fading_i * |bs - ue_i|^-alpha; nullopt when there are no UEs.
std::optional<double> max_interference_gain(Point2D bs,
                                            std::span<const Point2D> ues,
                                            std::span<const double> fading,
                                            double alpha);

/// argmax_f powers_f * |ue - bs_f|^-alpha, lowest index on ties; nullopt
/// when there is no BS.
std::optional<std::size_t> associate(Point2D ue, std::span<const Point2D> bss,
                                     std::span<const double> powers,
                                     double alpha);

/// Samples every operator's BSs and every seller's UEs.
NetworkRealization sample_network(const ScenarioConfig& config, Rng& rng);

/// Draws all fading for `band` (power-control links and origin probes) and
/// appends it to the realization with zero buyer powers.
void draw_band(NetworkRealization& net, const ScenarioConfig& config,
               SubBandId band, Rng& rng);

/// zeta / H per buyer BS on every drawn band; BSs with no seller UE get the
/// configured cap. Guarantees power * gain <= zeta for every seller UE.
void assign_powers(NetworkRealization& net, const ScenarioConfig& config);

/// zeta * d_min^alpha per buyer BS (cap when there is no seller UE).
void baseline_distance_power(NetworkRealization& net,
                             const ScenarioConfig& config);

/// Independent draws from the analytic power law.
void assign_independent_powers(NetworkRealization& net,
                               const ScenarioConfig& config, Rng& rng);

/// Recomputes every (buyer BS, seller UE) interference on every drawn band
/// and counts the pairs exceeding zeta.
std::uint64_t count_constraint_violations(const NetworkRealization& net,
                                          const ScenarioConfig& config);

/// SINR at the typical seller UE; nullopt without a serving BS.
std::optional<double> sinr_seller(const NetworkRealization& net,
                                  const ScenarioConfig& config, SubBandId band);
/// SINR at the typical UE of `buyer`; nullopt without a serving BS.
std::optional<double> sinr_buyer(const NetworkRealization& net,
                                 const ScenarioConfig& config, SubBandId band,
                                 unsigned buyer);

/// Interference at the typical UE of `op`. Own-operator BSs count only when
/// their mean received power is below `own_power_limit`; every other
/// operator on the band counts in full.
double probe_interference(const NetworkRealization& net,
                          const ScenarioConfig& config, SubBandId band,
                          OperatorId op, double own_power_limit);

struct MetricEstimate {
  double mean = 0.0;
  double half_width_95 = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t resamples = 0;       // realizations redrawn for lack of a server
  std::uint64_t capped_power = 0;    // buyer BSs that fell back to the cap
  PowerControl power = PowerControl::MaxAllowable;

  bool operator==(const MetricEstimate&) const = default;
};

MetricEstimate estimate_coverage(const ScenarioConfig& config, SubBandId band,
                                 OperatorId op, double beta,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const SimOptions& opts = {});

/// Same realizations for every threshold, so the curve is monotone.
std::vector<MetricEstimate> estimate_coverage_curve(
    const ScenarioConfig& config, SubBandId band, OperatorId op,
    std::span<const double> betas, std::uint64_t trials, std::uint64_t seed,
    const SimOptions& opts = {});

/// Mean over realizations of sum over the operator's bands of ln(1 + SINR).
MetricEstimate estimate_rate(const ScenarioConfig& config, OperatorId op,
                             std::uint64_t trials, std::uint64_t seed,
                             const SimOptions& opts = {});

/// sum_k mu_k * rate_k with independent per-operator estimates.
MetricEstimate estimate_sum_rate(const ScenarioConfig& config,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const SimOptions& opts = {});

/// Mean of exp(-kappa * I). Own-operator BSs closer (in mean received
/// power) than the serving radius implied by kappa = beta * z^(alpha/2) are
/// excluded, matching the conditioning of the analytic transform.
MetricEstimate estimate_laplace(const ScenarioConfig& config, SubBandId band,
                                OperatorId op, double kappa, double beta,
                                std::uint64_t trials, std::uint64_t seed,
                                const SimOptions& opts = {});

struct ConstraintReport {
  std::uint64_t realizations = 0;
  std::uint64_t violating_realizations = 0;
  std::uint64_t violating_pairs = 0;
  std::uint64_t checked_pairs = 0;

  double realization_rate() const;
};

/// Runs `realizations` networks under `opts.power` and audits the per-BS
/// interference constraint on every band.
ConstraintReport audit_constraint(const ScenarioConfig& config,
                                  std::uint64_t realizations,
                                  std::uint64_t seed,
                                  const SimOptions& opts = {});

/// Draws of H for a buyer BS at the centre of a disk of seller UEs.
std::vector<double> sample_max_gain(double ue_intensity, double alpha,
                                    double radius, std::size_t samples,
                                    std::uint64_t seed);

}  // namespace spectra::sim
