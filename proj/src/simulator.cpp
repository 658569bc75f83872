#include "spectra/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spectra/error.hpp"
#include "spectra/parallel.hpp"
#include "spectra/special.hpp"

namespace spectra::sim {

namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::uint64_t kMaxResamples = 1'000'000;

enum class StreamKind : std::uint64_t {
  Coverage = 1,
  Rate = 2,
  Laplace = 3,
  Audit = 4,
  MaxGain = 5,
};

std::uint64_t stream_id(StreamKind kind, OperatorId op, SubBandId band) {
  std::uint64_t s = static_cast<std::uint64_t>(kind);
  s = splitmix64(s ^ (op.is_buyer() ? 0x100000000ull : 0ull) ^ op.index);
  s = splitmix64(s ^ (static_cast<std::uint64_t>(band.seller) << 32) ^ band.band);
  return s;
}

bool has_server(const NetworkRealization& net, OperatorId op) {
  return op.is_seller() ? !net.seller_bs[op.index].empty()
                        : !net.buyer_bs[op.index].empty();
}

void require_operator(const ScenarioConfig& config, OperatorId op) {
  const std::size_t n = op.is_seller() ? config.sellers.size() : config.buyers.size();
  if (op.index >= n) fail(ErrorCode::InvalidArgument, "unknown " + to_string(op));
}

void require_server_possible(const ScenarioConfig& config, OperatorId op) {
  require_operator(config, op);
  if (!(config.bs_intensity(op) > 0.0)) {
    fail(ErrorCode::Domain, to_string(op) + " has no BSs to serve its typical UE");
  }
}

// Samples until the evaluated operator has at least one BS.
NetworkRealization sample_served(const ScenarioConfig& config, OperatorId op,
                                 Rng& rng, std::uint64_t& resamples) {
  for (;;) {
    NetworkRealization net = sample_network(config, rng);
    if (has_server(net, op)) return net;
    if (++resamples > kMaxResamples) {
      fail(ErrorCode::Domain, "no serving BS after repeated resampling");
    }
  }
}

void apply_power_control(NetworkRealization& net, const ScenarioConfig& config,
                         const SimOptions& opts, Rng& rng) {
  switch (opts.power) {
    case PowerControl::MaxAllowable: assign_powers(net, config); break;
    case PowerControl::NearestDistance: baseline_distance_power(net, config); break;
    case PowerControl::IndependentMarks: assign_independent_powers(net, config, rng); break;
  }
}

std::uint64_t capped(const NetworkRealization& net) {
  std::uint64_t n = 0;
  for (const auto& b : net.bands) n += b.capped_bs;
  return n;
}

std::vector<double> draw_exponentials(std::size_t n, Rng& rng) {
  std::vector<double> out(n);
  for (auto& v : out) v = rng.exponential();
  return out;
}

ProbeFading draw_probe(const NetworkRealization& net, const BandRealization& br,
                       Rng& rng) {
  ProbeFading p;
  p.seller = draw_exponentials(net.seller_bs[br.id.seller].size(), rng);
  for (unsigned b : br.buyers) {
    p.buyers.push_back(draw_exponentials(net.buyer_bs[b].size(), rng));
  }
  return p;
}

// Sum of power * fading * d^-alpha from a BS set to the origin, skipping
// index `skip` and any BS whose mean received power reaches `limit`.
double interference_from(std::span<const Point2D> bss,
                         std::span<const double> powers,
                         std::span<const double> fading, double alpha,
                         std::size_t skip, double limit) {
  double sum = 0.0;
  const Point2D origin{};
  for (std::size_t f = 0; f < bss.size(); ++f) {
    if (f == skip) continue;
    const double d = distance(bss[f], origin);
    if (!(powers[f] * path_gain(1.0, d, alpha) < limit)) continue;
    sum += powers[f] * path_gain(fading[f], d, alpha);
  }
  return sum;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

MetricEstimate mean_estimate(std::span<const double> values, std::uint64_t seed) {
  Moments m;
  for (double v : values) {
    m.sum += v;
    m.sum_sq += v * v;
  }
  MetricEstimate e;
  const double n = static_cast<double>(values.size());
  e.trials = values.size();
  e.seed = seed;
  e.mean = m.sum / n;
  if (values.size() > 1) {
    const double var = std::max(0.0, (m.sum_sq - n * e.mean * e.mean) / (n - 1.0));
    e.half_width_95 = kZ95 * std::sqrt(var / n);
  }
  return e;
}

}  // namespace

const char* to_string(PowerControl p) {
  switch (p) {
    case PowerControl::MaxAllowable: return "max_allowable";
    case PowerControl::IndependentMarks: return "independent_marks";
    case PowerControl::NearestDistance: return "nearest_distance";
  }
  return "unknown";
}

double distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

double path_gain(double fading, double d, double alpha) {
  return fading * std::pow(d, -alpha);
}

std::size_t BandRealization::slot_of(unsigned buyer) const {
  const auto it = std::find(buyers.begin(), buyers.end(), buyer);
  if (it == buyers.end()) {
    fail(ErrorCode::InvalidArgument, "buyer " + std::to_string(buyer) +
                                         " does not share " + to_string(id));
  }
  return static_cast<std::size_t>(it - buyers.begin());
}

const BandRealization& NetworkRealization::band(SubBandId id) const {
  for (const auto& b : bands) {
    if (b.id == id) return b;
  }
  fail(ErrorCode::InvalidArgument, "sub-band " + to_string(id) + " not drawn");
}

BandRealization& NetworkRealization::band(SubBandId id) {
  for (auto& b : bands) {
    if (b.id == id) return b;
  }
  fail(ErrorCode::InvalidArgument, "sub-band " + to_string(id) + " not drawn");
}

std::vector<Point2D> sample_ppp(double intensity, double radius, Rng& rng) {
  const double mean = intensity * std::numbers::pi * radius * radius;
  const std::uint64_t n = rng.poisson(mean);
  std::vector<Point2D> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(rng.uniform_open());
    const double theta = 2.0 * std::numbers::pi * rng.uniform_open();
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return pts;
}

std::optional<double> max_interference_gain(Point2D bs,
                                            std::span<const Point2D> ues,
                                            std::span<const double> fading,
                                            double alpha) {
  if (ues.empty()) return std::nullopt;
  double best = 0.0;
  for (std::size_t i = 0; i < ues.size(); ++i) {
    best = std::max(best, path_gain(fading[i], distance(bs, ues[i]), alpha));
  }
  return best;
}

std::optional<std::size_t> associate(Point2D ue, std::span<const Point2D> bss,
                                     std::span<const double> powers,
                                     double alpha) {
  if (bss.empty()) return std::nullopt;
  std::size_t best = 0;
  double best_power = -1.0;
  for (std::size_t f = 0; f < bss.size(); ++f) {
    const double p = powers[f] * path_gain(1.0, distance(ue, bss[f]), alpha);
    if (p > best_power) {
      best_power = p;
      best = f;
    }
  }
  return best;
}

NetworkRealization sample_network(const ScenarioConfig& config, Rng& rng) {
  NetworkRealization net;
  const double r = config.region_radius_m;
  for (const auto& s : config.sellers) {
    net.seller_bs.push_back(sample_ppp(s.bs_intensity, r, rng));
    net.seller_ue.push_back(sample_ppp(s.ue_intensity, r, rng));
  }
  for (const auto& b : config.buyers) {
    net.buyer_bs.push_back(sample_ppp(b.bs_intensity, r, rng));
  }
  return net;
}

void draw_band(NetworkRealization& net, const ScenarioConfig& config,
               SubBandId band, Rng& rng) {
  BandRealization br;
  br.id = band;
  br.buyers = config.group(band);
  const std::size_t n_ue = net.seller_ue.at(band.seller).size();
  for (unsigned b : br.buyers) {
    br.constraint_fading.push_back(
        draw_exponentials(net.buyer_bs.at(b).size() * n_ue, rng));
    br.buyer_power.emplace_back(net.buyer_bs[b].size(), 0.0);
  }
  br.seller_probe = draw_probe(net, br, rng);
  for (std::size_t k = 0; k < br.buyers.size(); ++k) {
    br.buyer_probe.push_back(draw_probe(net, br, rng));
  }
  net.bands.push_back(std::move(br));
}

void assign_powers(NetworkRealization& net, const ScenarioConfig& config) {
  const double alpha = config.path_loss_exponent;
  const double cap = dbm_to_linear(config.power_cap_dbm);
  for (auto& br : net.bands) {
    const double zeta =
        dbm_to_linear(config.seller(br.id.seller).interference_threshold_dbm);
    const auto& ues = net.seller_ue[br.id.seller];
    br.capped_bs = 0;
    for (std::size_t k = 0; k < br.buyers.size(); ++k) {
      const auto& bss = net.buyer_bs[br.buyers[k]];
      for (std::size_t f = 0; f < bss.size(); ++f) {
        const std::span<const double> row(
            br.constraint_fading[k].data() + f * ues.size(), ues.size());
        const auto h = max_interference_gain(bss[f], ues, row, alpha);
        if (!h) {
          br.buyer_power[k][f] = cap;
          ++br.capped_bs;
          continue;
        }
        double p = zeta / *h;
        // Rounding may leave p * H a hair above zeta; step down to the bound.
        while (p * *h > zeta) p = std::nextafter(p, 0.0);
        br.buyer_power[k][f] = p;
      }
    }
  }
}

void baseline_distance_power(NetworkRealization& net,
                             const ScenarioConfig& config) {
  const double alpha = config.path_loss_exponent;
  const double cap = dbm_to_linear(config.power_cap_dbm);
  for (auto& br : net.bands) {
    const double zeta =
        dbm_to_linear(config.seller(br.id.seller).interference_threshold_dbm);
    const auto& ues = net.seller_ue[br.id.seller];
    br.capped_bs = 0;
    for (std::size_t k = 0; k < br.buyers.size(); ++k) {
      const auto& bss = net.buyer_bs[br.buyers[k]];
      for (std::size_t f = 0; f < bss.size(); ++f) {
        if (ues.empty()) {
          br.buyer_power[k][f] = cap;
          ++br.capped_bs;
          continue;
        }
        double d_min = std::numeric_limits<double>::infinity();
        for (const auto& ue : ues) d_min = std::min(d_min, distance(bss[f], ue));
        br.buyer_power[k][f] = zeta * std::pow(d_min, alpha);
      }
    }
  }
}

void assign_independent_powers(NetworkRealization& net,
                               const ScenarioConfig& config, Rng& rng) {
  const double alpha = config.path_loss_exponent;
  const double cap = dbm_to_linear(config.power_cap_dbm);
  const double g = gamma_fn(1.0 + 2.0 / alpha);
  for (auto& br : net.bands) {
    const auto& seller = config.seller(br.id.seller);
    const double zeta = dbm_to_linear(seller.interference_threshold_dbm);
    const double rate = std::numbers::pi * seller.ue_intensity * g;
    br.capped_bs = 0;
    for (auto& powers : br.buyer_power) {
      for (auto& p : powers) {
        if (!(rate > 0.0)) {
          p = cap;
          ++br.capped_bs;
          continue;
        }
        // (P / zeta)^(2/alpha) is exponential with the H-law rate.
        p = zeta * std::pow(rng.exponential() / rate, 0.5 * alpha);
      }
    }
  }
}

std::uint64_t count_constraint_violations(const NetworkRealization& net,
                                          const ScenarioConfig& config) {
  const double alpha = config.path_loss_exponent;
  std::uint64_t violations = 0;
  for (const auto& br : net.bands) {
    const double zeta =
        dbm_to_linear(config.seller(br.id.seller).interference_threshold_dbm);
    const auto& ues = net.seller_ue[br.id.seller];
    for (std::size_t k = 0; k < br.buyers.size(); ++k) {
      const auto& bss = net.buyer_bs[br.buyers[k]];
      for (std::size_t f = 0; f < bss.size(); ++f) {
        for (std::size_t i = 0; i < ues.size(); ++i) {
          const double h = br.constraint_fading[k][f * ues.size() + i];
          const double received =
              br.buyer_power[k][f] * path_gain(h, distance(bss[f], ues[i]), alpha);
          if (received > zeta) ++violations;
        }
      }
    }
  }
  return violations;
}

std::optional<double> sinr_seller(const NetworkRealization& net,
                                  const ScenarioConfig& config, SubBandId band) {
  const auto& br = net.band(band);
  const double alpha = config.path_loss_exponent;
  const auto& seller = config.seller(band.seller);
  const double ps = dbm_to_linear(seller.tx_power_dbm);
  const auto& bss = net.seller_bs[band.seller];
  const std::vector<double> powers(bss.size(), ps);

  const auto serving = associate({}, bss, powers, alpha);
  if (!serving) return std::nullopt;
  const double signal =
      ps * path_gain(br.seller_probe.seller[*serving],
                     distance(bss[*serving], {}), alpha);

  const double inf = std::numeric_limits<double>::infinity();
  double interference = interference_from(bss, powers, br.seller_probe.seller,
                                          alpha, *serving, inf);
  for (std::size_t k = 0; k < br.buyers.size(); ++k) {
    interference += interference_from(net.buyer_bs[br.buyers[k]], br.buyer_power[k],
                                      br.seller_probe.buyers[k], alpha,
                                      std::numeric_limits<std::size_t>::max(), inf);
  }
  return signal / (interference + dbm_to_linear(config.noise_power_dbm));
}

std::optional<double> sinr_buyer(const NetworkRealization& net,
                                 const ScenarioConfig& config, SubBandId band,
                                 unsigned buyer) {
  const auto& br = net.band(band);
  const std::size_t slot = br.slot_of(buyer);
  const double alpha = config.path_loss_exponent;
  const auto& own = net.buyer_bs[buyer];
  const auto& probe = br.buyer_probe[slot];

  const auto serving = associate({}, own, br.buyer_power[slot], alpha);
  if (!serving) return std::nullopt;
  const double signal =
      br.buyer_power[slot][*serving] *
      path_gain(probe.buyers[slot][*serving], distance(own[*serving], {}), alpha);

  const double inf = std::numeric_limits<double>::infinity();
  const auto& sbs = net.seller_bs[band.seller];
  const std::vector<double> ps(
      sbs.size(), dbm_to_linear(config.seller(band.seller).tx_power_dbm));
  double interference = interference_from(sbs, ps, probe.seller, alpha,
                                          std::numeric_limits<std::size_t>::max(), inf);
  for (std::size_t k = 0; k < br.buyers.size(); ++k) {
    interference += interference_from(
        net.buyer_bs[br.buyers[k]], br.buyer_power[k], probe.buyers[k], alpha,
        k == slot ? *serving : std::numeric_limits<std::size_t>::max(), inf);
  }
  return signal / (interference + dbm_to_linear(config.noise_power_dbm));
}

double probe_interference(const NetworkRealization& net,
                          const ScenarioConfig& config, SubBandId band,
                          OperatorId op, double own_power_limit) {
  const auto& br = net.band(band);
  const double alpha = config.path_loss_exponent;
  const double inf = std::numeric_limits<double>::infinity();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const auto& sbs = net.seller_bs[band.seller];
  const std::vector<double> ps(
      sbs.size(), dbm_to_linear(config.seller(band.seller).tx_power_dbm));

  const bool seller_probe = op.is_seller();
  const std::size_t slot = seller_probe ? none : br.slot_of(op.index);
  const ProbeFading& probe = seller_probe ? br.seller_probe : br.buyer_probe[slot];

  double sum = interference_from(sbs, ps, probe.seller, alpha, none,
                                 seller_probe ? own_power_limit : inf);
  for (std::size_t k = 0; k < br.buyers.size(); ++k) {
    sum += interference_from(net.buyer_bs[br.buyers[k]], br.buyer_power[k],
                             probe.buyers[k], alpha, none,
                             k == slot ? own_power_limit : inf);
  }
  return sum;
}

namespace {

struct SinrTrial {
  double sinr = 0.0;
  std::uint64_t resamples = 0;
  std::uint64_t capped = 0;
};

SinrTrial coverage_trial(const ScenarioConfig& config, SubBandId band,
                         OperatorId op, std::uint64_t seed, std::uint64_t trial,
                         const SimOptions& opts) {
  Rng rng(seed, stream_id(StreamKind::Coverage, op, band), trial);
  SinrTrial out;
  NetworkRealization net = sample_served(config, op, rng, out.resamples);
  draw_band(net, config, band, rng);
  apply_power_control(net, config, opts, rng);
  out.capped = capped(net);
  const auto sinr = op.is_seller() ? sinr_seller(net, config, band)
                                   : sinr_buyer(net, config, band, op.index);
  if (!sinr) fail(ErrorCode::Internal, "served realization without a server");
  out.sinr = *sinr;
  return out;
}

void require_band_member(const ScenarioConfig& config, SubBandId band,
                         OperatorId op) {
  if (!config.band_exists(band)) {
    fail(ErrorCode::InvalidArgument, "unknown sub-band " + to_string(band));
  }
  require_operator(config, op);
  if (op.is_seller() && op.index != band.seller) {
    fail(ErrorCode::InvalidArgument, to_string(op) + " does not own " + to_string(band));
  }
  if (op.is_buyer()) {
    const auto& g = config.group(band);
    if (std::find(g.begin(), g.end(), op.index) == g.end()) {
      fail(ErrorCode::InvalidArgument, to_string(op) + " does not share " + to_string(band));
    }
  }
}

void require_trials(std::uint64_t trials) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
}

}  // namespace

std::vector<MetricEstimate> estimate_coverage_curve(
    const ScenarioConfig& config, SubBandId band, OperatorId op,
    std::span<const double> betas, std::uint64_t trials, std::uint64_t seed,
    const SimOptions& opts) {
  require_trials(trials);
  require_band_member(config, band, op);
  require_server_possible(config, op);

  std::vector<SinrTrial> results(trials);
  parallel_for(trials, [&](std::size_t t) {
    results[t] = coverage_trial(config, band, op, seed, t, opts);
  });

  std::uint64_t resamples = 0;
  std::uint64_t capped_total = 0;
  for (const auto& r : results) {
    resamples += r.resamples;
    capped_total += r.capped;
  }
  std::vector<MetricEstimate> out;
  const double n = static_cast<double>(trials);
  for (double beta : betas) {
    std::uint64_t covered = 0;
    for (const auto& r : results) covered += r.sinr > beta ? 1 : 0;
    MetricEstimate e;
    e.mean = static_cast<double>(covered) / n;
    e.half_width_95 = kZ95 * std::sqrt(e.mean * (1.0 - e.mean) / n);
    e.trials = trials;
    e.seed = seed;
    e.resamples = resamples;
    e.capped_power = capped_total;
    e.power = opts.power;
    out.push_back(e);
  }
  return out;
}

MetricEstimate estimate_coverage(const ScenarioConfig& config, SubBandId band,
                                 OperatorId op, double beta,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const SimOptions& opts) {
  const double betas[] = {beta};
  return estimate_coverage_curve(config, band, op, betas, trials, seed, opts).front();
}

MetricEstimate estimate_rate(const ScenarioConfig& config, OperatorId op,
                             std::uint64_t trials, std::uint64_t seed,
                             const SimOptions& opts) {
  require_trials(trials);
  require_operator(config, op);
  const auto bands =
      op.is_seller() ? config.own_bands(op.index) : config.leased_bands(op.index);
  if (bands.empty()) {
    MetricEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.power = opts.power;
    return e;
  }
  require_server_possible(config, op);

  std::vector<double> values(trials);
  std::vector<SinrTrial> meta(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(seed, stream_id(StreamKind::Rate, op, {}), t);
    NetworkRealization net = sample_served(config, op, rng, meta[t].resamples);
    for (const auto band : bands) draw_band(net, config, band, rng);
    apply_power_control(net, config, opts, rng);
    meta[t].capped = capped(net);
    double sum = 0.0;
    for (const auto band : bands) {
      const auto sinr = op.is_seller() ? sinr_seller(net, config, band)
                                       : sinr_buyer(net, config, band, op.index);
      sum += std::log1p(*sinr);
    }
    values[t] = sum;
  });

  MetricEstimate e = mean_estimate(values, seed);
  for (const auto& m : meta) {
    e.resamples += m.resamples;
    e.capped_power += m.capped;
  }
  e.power = opts.power;
  return e;
}

MetricEstimate estimate_sum_rate(const ScenarioConfig& config,
                                 std::uint64_t trials, std::uint64_t seed,
                                 const SimOptions& opts) {
  MetricEstimate total;
  total.trials = trials;
  total.seed = seed;
  total.power = opts.power;
  double var = 0.0;
  auto add = [&](OperatorId op, double mu) {
    if (!(mu > 0.0) || !(config.bs_intensity(op) > 0.0)) return;
    const auto e = estimate_rate(config, op, trials, seed, opts);
    total.mean += mu * e.mean;
    var += (mu * e.half_width_95) * (mu * e.half_width_95);
    total.resamples += e.resamples;
    total.capped_power += e.capped_power;
  };
  for (unsigned s = 0; s < config.sellers.size(); ++s) {
    add(OperatorId::seller(s), config.seller(s).ue_intensity);
  }
  for (unsigned b = 0; b < config.buyers.size(); ++b) {
    add(OperatorId::buyer(b), config.buyer(b).ue_intensity);
  }
  total.half_width_95 = std::sqrt(var);
  return total;
}

MetricEstimate estimate_laplace(const ScenarioConfig& config, SubBandId band,
                                OperatorId op, double kappa, double beta,
                                std::uint64_t trials, std::uint64_t seed,
                                const SimOptions& opts) {
  require_trials(trials);
  require_band_member(config, band, op);
  if (!(kappa >= 0.0)) fail(ErrorCode::Domain, "kappa must be >= 0");
  if (!(beta > 0.0)) fail(ErrorCode::Domain, "beta must be positive");
  // Own BSs beyond effective distance z, kappa = beta z^(alpha/2), are
  // exactly those with mean received power below beta / kappa.
  const double limit =
      kappa == 0.0 ? std::numeric_limits<double>::infinity() : beta / kappa;

  std::vector<double> values(trials);
  std::vector<std::uint64_t> capped_bs(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(seed, stream_id(StreamKind::Laplace, op, band), t);
    NetworkRealization net = sample_network(config, rng);
    draw_band(net, config, band, rng);
    apply_power_control(net, config, opts, rng);
    capped_bs[t] = capped(net);
    values[t] = kappa == 0.0
                    ? 1.0
                    : std::exp(-kappa * probe_interference(net, config, band, op, limit));
  });
  MetricEstimate e = mean_estimate(values, seed);
  for (auto c : capped_bs) e.capped_power += c;
  e.power = opts.power;
  return e;
}

double ConstraintReport::realization_rate() const {
  return realizations == 0 ? 0.0
                           : static_cast<double>(violating_realizations) /
                                 static_cast<double>(realizations);
}

ConstraintReport audit_constraint(const ScenarioConfig& config,
                                  std::uint64_t realizations,
                                  std::uint64_t seed, const SimOptions& opts) {
  struct Audit {
    std::uint64_t violations = 0;
    std::uint64_t pairs = 0;
  };
  std::vector<Audit> audits(realizations);
  parallel_for(realizations, [&](std::size_t t) {
    Rng rng(seed, stream_id(StreamKind::Audit, {}, {}), t);
    NetworkRealization net = sample_network(config, rng);
    for (unsigned s = 0; s < config.sellers.size(); ++s) {
      for (const auto band : config.own_bands(s)) draw_band(net, config, band, rng);
    }
    apply_power_control(net, config, opts, rng);
    audits[t].violations = count_constraint_violations(net, config);
    for (const auto& br : net.bands) {
      for (unsigned b : br.buyers) {
        audits[t].pairs += net.buyer_bs[b].size() * net.seller_ue[br.id.seller].size();
      }
    }
  });
  ConstraintReport r;
  r.realizations = realizations;
  for (const auto& a : audits) {
    r.violating_pairs += a.violations;
    r.checked_pairs += a.pairs;
    r.violating_realizations += a.violations > 0 ? 1 : 0;
  }
  return r;
}

std::vector<double> sample_max_gain(double ue_intensity, double alpha,
                                    double radius, std::size_t samples,
                                    std::uint64_t seed) {
  if (!(ue_intensity > 0.0)) {
    fail(ErrorCode::Domain, "H needs a positive seller UE intensity");
  }
  std::vector<double> out(samples);
  parallel_for(samples, [&](std::size_t i) {
    Rng rng(seed, stream_id(StreamKind::MaxGain, {}, {}), i);
    for (std::uint64_t attempt = 0;; ++attempt) {
      const auto ues = sample_ppp(ue_intensity, radius, rng);
      const auto fading = draw_exponentials(ues.size(), rng);
      if (const auto h = max_interference_gain({}, ues, fading, alpha)) {
        out[i] = *h;
        return;
      }
      if (attempt > kMaxResamples) fail(ErrorCode::Domain, "no seller UEs sampled");
    }
  });
  return out;
}

}  // namespace spectra::sim
