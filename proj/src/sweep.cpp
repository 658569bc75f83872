#include "spectra/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "spectra/error.hpp"
#include "spectra/parallel.hpp"
#include "spectra/rng.hpp"
#include "spectra/simulator.hpp"
#include "spectra/special.hpp"
#include "spectra/stats.hpp"

namespace spectra {

namespace {

constexpr const char* kEngineVersions = "analytic=1 simulator=1";
constexpr const char* kBaselineRule =
    "P = zeta * d_min^alpha (nearest seller UE; unit-fading reconstruction)";

double nan() { return std::nan(""); }

double db_to_ratio(double db) { return std::pow(10.0, db / 10.0); }

std::string hex(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_number(v[i]);
  }
  return out;
}

std::string error_tag(const std::exception& e) {
  if (const auto* se = dynamic_cast<const Error*>(&e)) return to_string(se->code());
  return "internal";
}

void add_flag(std::string& flags, const std::string& what) {
  if (!flags.empty()) flags += ';';
  flags += what;
}

struct SimEngine {
  unsigned bit;
  const char* prefix;
  sim::PowerControl power;
};

constexpr SimEngine kSimEngines[] = {
    {kEngineSimulation, "sim", sim::PowerControl::MaxAllowable},
    {kEngineBaseline, "baseline", sim::PowerControl::NearestDistance},
    {kEngineIndependentMarks, "indep", sim::PowerControl::IndependentMarks},
};

std::vector<OperatorId> band_operators(const ScenarioConfig& config, SubBandId band) {
  std::vector<OperatorId> ops{OperatorId::seller(band.seller)};
  for (unsigned b : config.group(band)) ops.push_back(OperatorId::buyer(b));
  return ops;
}

std::vector<OperatorId> all_operators(const ScenarioConfig& config) {
  std::vector<OperatorId> ops;
  for (unsigned s = 0; s < config.sellers.size(); ++s) ops.push_back(OperatorId::seller(s));
  for (unsigned b = 0; b < config.buyers.size(); ++b) ops.push_back(OperatorId::buyer(b));
  return ops;
}

double analytic_coverage(const ScenarioConfig& config, SubBandId band,
                         OperatorId op, double beta,
                         const analytic::EvalOptions& opts) {
  const auto ctx = derive_context(config, band, op);
  return op.is_seller() ? analytic::coverage_seller(beta, ctx, opts).value
                        : analytic::coverage_buyer(beta, ctx, opts).value;
}

double analytic_rate(const ScenarioConfig& config, OperatorId op,
                     const analytic::EvalOptions& opts) {
  const auto bands =
      op.is_seller() ? config.own_bands(op.index) : config.leased_bands(op.index);
  std::vector<SubBandContext> ctx;
  for (const auto band : bands) ctx.push_back(derive_context(config, band, op));
  return op.is_seller() ? analytic::rate_seller(ctx, opts).value
                        : analytic::rate_buyer(ctx, opts).value;
}

bool counts_toward_sum(const ScenarioConfig& config, OperatorId op) {
  return config.ue_intensity(op) > 0.0 && config.bs_intensity(op) > 0.0;
}

struct SimTotals {
  std::uint64_t resamples = 0;
  std::uint64_t capped = 0;

  void add(const sim::MetricEstimate& e) {
    resamples += e.resamples;
    capped += e.capped_power;
  }
};

}  // namespace

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::SinrThresholdDb: return "sinr_threshold_db";
    case SweepParameter::InterferenceThresholdDbm: return "interference_threshold_dbm";
    case SweepParameter::BuyerBsIntensity: return "buyer_bs_intensity";
    case SweepParameter::SellerUeIntensity: return "seller_ue_intensity";
  }
  return "unknown";
}

std::optional<SweepParameter> parse_parameter(std::string_view name) {
  for (auto p : {SweepParameter::SinrThresholdDb, SweepParameter::InterferenceThresholdDbm,
                 SweepParameter::BuyerBsIntensity, SweepParameter::SellerUeIntensity}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

unsigned parse_engines(std::string_view text) {
  unsigned engines = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto name = text.substr(start, end - start);
    if (name == "analytic") engines |= kEngineAnalytic;
    else if (name == "sim" || name == "simulation") engines |= kEngineSimulation;
    else if (name == "baseline") engines |= kEngineBaseline;
    else if (name == "independent") engines |= kEngineIndependentMarks;
    else fail(ErrorCode::InvalidArgument, "unknown engine '" + std::string(name) + "'");
    start = end + 1;
  }
  return engines;
}

std::string engines_to_string(unsigned engines) {
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if (!(engines & bit)) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(kEngineAnalytic, "analytic");
  add(kEngineSimulation, "sim");
  add(kEngineBaseline, "baseline");
  add(kEngineIndependentMarks, "independent");
  return out;
}

std::vector<double> parse_grid(std::string_view text) {
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      fail(ErrorCode::InvalidArgument, "bad grid value '" + std::string(s) + "'");
    }
    return v;
  };
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) return {number(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
    fail(ErrorCode::InvalidArgument, "grid must be start:stop:count");
  }
  const double a = number(text.substr(0, c1));
  const double b = number(text.substr(c1 + 1, c2 - c1 - 1));
  const double n = number(text.substr(c2 + 1));
  if (n < 1 || n != std::floor(n) || n > 1e6) {
    fail(ErrorCode::InvalidArgument, "grid count must be a positive integer");
  }
  const auto count = static_cast<std::size_t>(n);
  if (count == 1) return {a};
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  grid.back() = b;
  return grid;
}

std::vector<double> default_grid(SweepParameter p) {
  switch (p) {
    case SweepParameter::SinrThresholdDb: return parse_grid("-10:20:13");
    case SweepParameter::InterferenceThresholdDbm: return parse_grid("-130:-70:13");
    case SweepParameter::BuyerBsIntensity: return parse_grid("4:32:8");
    case SweepParameter::SellerUeIntensity: return parse_grid("30:90:7");
  }
  return {};
}

void check(const SweepSpec& spec, const ScenarioConfig& config) {
  if (spec.grid.empty()) fail(ErrorCode::InvalidArgument, "grid is empty");
  for (double v : spec.grid) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "grid values must be finite");
  }
  if (spec.grid.size() > 1) {
    const bool up = spec.grid[1] > spec.grid[0];
    for (std::size_t i = 1; i < spec.grid.size(); ++i) {
      if (up ? !(spec.grid[i] > spec.grid[i - 1]) : !(spec.grid[i] < spec.grid[i - 1])) {
        fail(ErrorCode::InvalidArgument, "grid must be strictly monotone");
      }
    }
  }
  if (spec.engines == 0) fail(ErrorCode::InvalidArgument, "no engine selected");
  if ((spec.engines & ~kEngineAnalytic) && spec.trials == 0) {
    fail(ErrorCode::InvalidArgument, "simulation needs trials > 0");
  }
  if (!config.band_exists(spec.band)) {
    fail(ErrorCode::InvalidArgument, "unknown sub-band " + to_string(spec.band));
  }
  if (!std::isfinite(spec.beta_db)) fail(ErrorCode::InvalidArgument, "beta must be finite");
  if ((spec.parameter == SweepParameter::BuyerBsIntensity ||
       spec.parameter == SweepParameter::SellerUeIntensity)) {
    for (double v : spec.grid) {
      if (v < 0) fail(ErrorCode::InvalidArgument, "intensities must be >= 0");
    }
  }
  quad::check(spec.analytic.quad);
}

ScenarioConfig apply_parameter(const ScenarioConfig& config, SweepParameter p,
                               double value) {
  ScenarioConfig c = config;
  switch (p) {
    case SweepParameter::SinrThresholdDb: break;
    case SweepParameter::InterferenceThresholdDbm:
      for (auto& s : c.sellers) s.interference_threshold_dbm = value;
      break;
    case SweepParameter::BuyerBsIntensity:
      for (auto& b : c.buyers) b.bs_intensity = per_disk_to_intensity(value, c.region_radius_m);
      break;
    case SweepParameter::SellerUeIntensity:
      for (auto& s : c.sellers) s.ue_intensity = per_disk_to_intensity(value, c.region_radius_m);
      break;
  }
  return c;
}

std::uint64_t point_seed(std::uint64_t master, std::size_t index) {
  return derive_seed(master, index);
}

Table run_sweep(const ScenarioConfig& config, const SweepSpec& spec) {
  check(spec, config);
  const bool beta_sweep = spec.parameter == SweepParameter::SinrThresholdDb;
  const auto cov_ops = band_operators(config, spec.band);
  const auto rate_ops = beta_sweep ? std::vector<OperatorId>{} : all_operators(config);
  const bool analytic_on = spec.engines & kEngineAnalytic;

  Table t;
  t.set_meta("parameter", to_string(spec.parameter));
  t.set_meta("grid", join(spec.grid));
  t.set_meta("engines", engines_to_string(spec.engines));
  t.set_meta("engine_versions", kEngineVersions);
  t.set_meta("config_hash", hex(config_hash(config)));
  t.set_meta("band", to_string(spec.band));
  if (!beta_sweep) t.set_meta("sinr_threshold_db", format_number(spec.beta_db));
  t.set_meta("seed", std::to_string(spec.seed));
  if (spec.engines & ~kEngineAnalytic) {
    t.set_meta("trials", std::to_string(spec.trials));
    t.set_meta("sim_seeding", beta_sweep
                                  ? "one realization set shared by every threshold"
                                  : "per point, derived from seed and grid index");
    t.set_meta("power_cap_dbm", format_number(config.power_cap_dbm));
  }
  if (spec.engines & kEngineBaseline) t.set_meta("baseline_rule", kBaselineRule);
  if (analytic_on) t.set_meta("laplace_exponent", spec.analytic.positive_laplace_exponent ? "positive (test hook)" : "negative");
  t.set_meta("rate_unit", "nats");

  t.columns.push_back(to_string(spec.parameter));
  for (const auto op : cov_ops) {
    const auto p = to_string(op);
    if (analytic_on) t.columns.push_back(p + ".coverage");
    for (const auto& e : kSimEngines) {
      if (!(spec.engines & e.bit)) continue;
      t.columns.push_back(p + "." + e.prefix + "_coverage");
      t.columns.push_back(p + "." + e.prefix + "_coverage.ci95");
    }
  }
  for (const auto op : rate_ops) {
    const auto p = to_string(op);
    if (analytic_on) {
      t.columns.push_back(p + ".rate");
      t.columns.push_back(p + ".rate_bits");
    }
    for (const auto& e : kSimEngines) {
      if (!(spec.engines & e.bit)) continue;
      t.columns.push_back(p + "." + e.prefix + "_rate");
      t.columns.push_back(p + "." + e.prefix + "_rate.ci95");
    }
  }
  if (!beta_sweep) {
    if (analytic_on) t.columns.push_back("network0.sum_rate");
    for (const auto& e : kSimEngines) {
      if (!(spec.engines & e.bit)) continue;
      t.columns.push_back(std::string("network0.") + e.prefix + "_sum_rate");
      t.columns.push_back(std::string("network0.") + e.prefix + "_sum_rate.ci95");
    }
  }

  const std::size_t n = spec.grid.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(t.columns.size(), nan()));
  std::vector<std::string> flags(n);
  auto set = [&](std::size_t row, const std::string& col, double v) {
    rows[row][t.column(col)] = v;
  };

  // Analytic values: cheap and independent per point.
  if (analytic_on) {
    parallel_for(n, [&](std::size_t i) {
      const double x = spec.grid[i];
      const ScenarioConfig c = apply_parameter(config, spec.parameter, x);
      const double beta = db_to_ratio(beta_sweep ? x : spec.beta_db);
      for (const auto op : cov_ops) {
        const auto col = to_string(op) + ".coverage";
        try {
          set(i, col, analytic_coverage(c, spec.band, op, beta, spec.analytic));
        } catch (const std::exception& e) {
          add_flag(flags[i], col + ":" + error_tag(e));
        }
      }
      for (const auto op : rate_ops) {
        const auto col = to_string(op) + ".rate";
        try {
          const double r = analytic_rate(c, op, spec.analytic);
          set(i, col, r);
          set(i, to_string(op) + ".rate_bits", r / std::numbers::ln2);
        } catch (const std::exception& e) {
          add_flag(flags[i], col + ":" + error_tag(e));
        }
      }
      if (!beta_sweep) {
        try {
          set(i, "network0.sum_rate", analytic::total_sum_rate(c, spec.analytic).value);
        } catch (const std::exception& e) {
          add_flag(flags[i], std::string("network0.sum_rate:") + error_tag(e));
        }
      }
    });
  }

  // Simulated values: trials run in parallel inside each estimate.
  SimTotals totals;
  for (const auto& eng : kSimEngines) {
    if (!(spec.engines & eng.bit)) continue;
    const sim::SimOptions opts{eng.power};
    const std::string cov = std::string(".") + eng.prefix + "_coverage";
    if (beta_sweep) {
      std::vector<double> betas;
      for (double x : spec.grid) betas.push_back(db_to_ratio(x));
      for (const auto op : cov_ops) {
        const auto col = to_string(op) + cov;
        try {
          const auto curve = sim::estimate_coverage_curve(config, spec.band, op, betas,
                                                          spec.trials, spec.seed, opts);
          totals.add(curve.front());
          for (std::size_t i = 0; i < n; ++i) {
            set(i, col, curve[i].mean);
            set(i, col + ".ci95", curve[i].half_width_95);
          }
        } catch (const std::exception& e) {
          for (std::size_t i = 0; i < n; ++i) add_flag(flags[i], col + ":" + error_tag(e));
        }
      }
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const ScenarioConfig c = apply_parameter(config, spec.parameter, spec.grid[i]);
      const std::uint64_t seed = point_seed(spec.seed, i);
      const double beta = db_to_ratio(spec.beta_db);
      for (const auto op : cov_ops) {
        const auto col = to_string(op) + cov;
        try {
          const auto e = sim::estimate_coverage(c, spec.band, op, beta, spec.trials, seed, opts);
          totals.add(e);
          set(i, col, e.mean);
          set(i, col + ".ci95", e.half_width_95);
        } catch (const std::exception& e) {
          add_flag(flags[i], col + ":" + error_tag(e));
        }
      }
      double sum = 0.0;
      double var = 0.0;
      bool sum_ok = true;
      for (const auto op : rate_ops) {
        const auto col = to_string(op) + "." + eng.prefix + "_rate";
        try {
          const auto e = sim::estimate_rate(c, op, spec.trials, seed, opts);
          totals.add(e);
          set(i, col, e.mean);
          set(i, col + ".ci95", e.half_width_95);
          if (counts_toward_sum(c, op)) {
            const double mu = c.ue_intensity(op);
            sum += mu * e.mean;
            var += (mu * e.half_width_95) * (mu * e.half_width_95);
          }
        } catch (const std::exception& e) {
          add_flag(flags[i], col + ":" + error_tag(e));
          if (counts_toward_sum(c, op)) sum_ok = false;
        }
      }
      if (sum_ok) {
        set(i, std::string("network0.") + eng.prefix + "_sum_rate", sum);
        set(i, std::string("network0.") + eng.prefix + "_sum_rate.ci95", std::sqrt(var));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    rows[i][0] = spec.grid[i];
    t.add_row(std::move(rows[i]), flags[i]);
  }
  if (spec.engines & ~kEngineAnalytic) {
    t.set_meta("sim_resamples", std::to_string(totals.resamples));
    t.set_meta("sim_capped_power_bs", std::to_string(totals.capped));
  }
  if (!beta_sweep) {
    for (const auto& name : {std::string("network0.sum_rate"), std::string("network0.sim_sum_rate"),
                             std::string("network0.baseline_sum_rate")}) {
      if (!t.has_column(name)) continue;
      const auto v = t.values(name);
      const auto k = argmax(v);
      if (k < v.size()) t.set_meta("argmax." + name, format_number(spec.grid[k]));
      t.set_meta("unimodal." + name, is_unimodal(v) ? "yes" : "no");
    }
    if (t.has_column("network0.sim_sum_rate") && t.has_column("network0.baseline_sum_rate")) {
      const auto a = t.values("network0.sim_sum_rate");
      const auto b = t.values("network0.baseline_sum_rate");
      std::size_t wins = 0;
      for (std::size_t i = 0; i < n; ++i) wins += a[i] >= b[i] ? 1 : 0;
      t.set_meta("sim_vs_baseline.points_not_below",
                 std::to_string(wins) + "/" + std::to_string(n));
    }
  }
  return t;
}

EngineReport validate_engines(const ScenarioConfig& config,
                              const ValidationSpec& spec) {
  if (spec.beta_db.empty()) fail(ErrorCode::InvalidArgument, "beta grid is empty");
  if (spec.trials == 0) fail(ErrorCode::InvalidArgument, "trials must be > 0");
  if (!(spec.tolerance >= 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be >= 0");
  if (!config.band_exists(spec.band)) {
    fail(ErrorCode::InvalidArgument, "unknown sub-band " + to_string(spec.band));
  }
  const auto ops = band_operators(config, spec.band);
  const std::size_t n = spec.beta_db.size();
  std::vector<double> betas;
  for (double db : spec.beta_db) betas.push_back(db_to_ratio(db));

  EngineReport report;
  Table& t = report.table;
  t.set_meta("config_hash", hex(config_hash(config)));
  t.set_meta("band", to_string(spec.band));
  t.set_meta("trials", std::to_string(spec.trials));
  t.set_meta("seed", std::to_string(spec.seed));
  t.set_meta("tolerance", format_number(spec.tolerance));
  t.set_meta("engine_versions", kEngineVersions);
  t.set_meta("laplace_exponent",
             spec.analytic.positive_laplace_exponent ? "positive (test hook)" : "negative");
  t.columns.push_back("sinr_threshold_db");
  for (const auto op : ops) {
    const auto p = to_string(op);
    for (const char* m : {".coverage", ".sim_coverage", ".sim_coverage.ci95", ".abs_diff"}) {
      t.columns.push_back(p + m);
    }
  }

  std::vector<std::vector<double>> rows(n, std::vector<double>(t.columns.size(), nan()));
  std::vector<std::string> flags(n);
  struct Worst {
    double excess = -INFINITY;
    std::string text;
  } worst;
  std::size_t passed = 0;
  std::size_t total = 0;

  for (const auto op : ops) {
    const auto p = to_string(op);
    const auto curve =
        sim::estimate_coverage_curve(config, spec.band, op, betas, spec.trials, spec.seed);
    std::vector<double> ana(n, nan());
    std::vector<std::string> errs(n);
    parallel_for(n, [&](std::size_t i) {
      try {
        ana[i] = analytic_coverage(config, spec.band, op, betas[i], spec.analytic);
      } catch (const std::exception& e) {
        errs[i] = error_tag(e);
      }
    });
    for (std::size_t i = 0; i < n; ++i) {
      auto& row = rows[i];
      row[0] = spec.beta_db[i];
      const double diff = std::abs(ana[i] - curve[i].mean);
      const double allowed = std::max(spec.tolerance, curve[i].half_width_95);
      row[t.column(p + ".coverage")] = ana[i];
      row[t.column(p + ".sim_coverage")] = curve[i].mean;
      row[t.column(p + ".sim_coverage.ci95")] = curve[i].half_width_95;
      row[t.column(p + ".abs_diff")] = diff;
      const bool ok = std::isfinite(diff) && diff <= allowed;
      ++total;
      if (ok) ++passed;
      else add_flag(flags[i], "fail:" + p + (errs[i].empty() ? "" : "(" + errs[i] + ")"));
      const double excess = std::isfinite(diff) ? diff - allowed : INFINITY;
      if (excess > worst.excess) {
        std::ostringstream os;
        os.precision(6);
        os << "worst point: " << p << " at " << spec.beta_db[i] << " dB: analytic "
           << ana[i] << (errs[i].empty() ? "" : " (" + errs[i] + ")") << ", sim "
           << curve[i].mean << " +/- " << curve[i].half_width_95 << ", |diff| " << diff
           << ", allowed " << allowed;
        worst = {excess, os.str()};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) t.add_row(std::move(rows[i]), flags[i]);

  report.passed = passed == total;
  std::ostringstream os;
  os << worst.text << '\n'
     << (report.passed ? "PASS" : "FAIL") << ": " << passed << "/" << total
     << " points within max(tolerance, ci95)";
  report.summary = os.str();
  t.set_meta("verdict", report.passed ? "pass" : "fail");
  return report;
}

Table show_distributions(const ScenarioConfig& config,
                         const DistributionSpec& spec) {
  if (!config.band_exists(spec.band)) {
    fail(ErrorCode::InvalidArgument, "unknown sub-band " + to_string(spec.band));
  }
  if (spec.samples == 0) fail(ErrorCode::InvalidArgument, "samples must be > 0");
  if (spec.points < 2) fail(ErrorCode::InvalidArgument, "need at least 2 grid points");
  const auto& seller = config.seller(spec.band.seller);
  const double mu = seller.ue_intensity;
  const double alpha = config.path_loss_exponent;
  const double zeta = dbm_to_linear(seller.interference_threshold_dbm);
  if (!(mu > 0.0)) fail(ErrorCode::Domain, "H is undefined without seller UEs");

  auto h = sim::sample_max_gain(mu, alpha, config.region_radius_m, spec.samples, spec.seed);
  std::vector<double> p;
  for (double x : h) p.push_back(zeta / x);
  const double ks_h = ks_statistic(h, [&](double z) { return analytic::cdf_H(z, mu, alpha); });
  const double ks_p =
      ks_statistic(p, [&](double z) { return analytic::cdf_P(z, mu, alpha, zeta); });
  std::sort(h.begin(), h.end());
  std::sort(p.begin(), p.end());

  // Quantiles of the H law bracket the grid.
  const double c = std::numbers::pi * mu * gamma_fn(1.0 + 2.0 / alpha);
  auto quantile = [&](double u) { return std::pow(c / -std::log(u), alpha / 2.0); };
  const double lo = std::log(quantile(1e-6));
  const double hi = std::log(quantile(1.0 - 1e-12));

  Table t;
  t.set_meta("config_hash", hex(config_hash(config)));
  t.set_meta("band", to_string(spec.band));
  t.set_meta("samples", std::to_string(spec.samples));
  t.set_meta("seed", std::to_string(spec.seed));
  t.set_meta("ks_h", format_number(ks_h));
  t.set_meta("ks_p", format_number(ks_p));
  t.columns = {"h.z", "h.cdf", "h.pdf", "h.empirical_cdf",
               "p.z", "p.cdf", "p.pdf", "p.empirical_cdf"};
  auto ecdf = [](const std::vector<double>& s, double z) {
    return static_cast<double>(std::upper_bound(s.begin(), s.end(), z) - s.begin()) /
           static_cast<double>(s.size());
  };
  const std::size_t m = spec.points;
  for (std::size_t i = 0; i < m; ++i) {
    const double zh = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1));
    const double zp = zeta / std::exp(hi - (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1));
    t.add_row({zh, analytic::cdf_H(zh, mu, alpha), analytic::pdf_H(zh, mu, alpha), ecdf(h, zh),
               zp, analytic::cdf_P(zp, mu, alpha, zeta), analytic::pdf_P(zp, mu, alpha, zeta),
               ecdf(p, zp)});
  }
  return t;
}

}  // namespace spectra
