// One PASS/FAIL line per acceptance criterion. Exit status 0 only when all
// criteria pass; the last line reports how many were evaluated.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "spectra/analytic.hpp"
#include "spectra/model.hpp"
#include "spectra/simulator.hpp"
#include "spectra/stats.hpp"
#include "spectra/sweep.hpp"
#include "spectra/table.hpp"

using namespace spectra;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<double> kBetaDb = parse_grid("-10:20:13");
const OperatorId kSeller = OperatorId::seller(0);
const OperatorId kBuyer = OperatorId::buyer(0);
constexpr SubBandId kBand{0, 0};
constexpr std::uint64_t kSeed = 20240601;

double ratio(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> analytic_curve(const ScenarioConfig& c, OperatorId op) {
  const auto ctx = derive_context(c, kBand, op);
  std::vector<double> out;
  for (double db : kBetaDb) {
    out.push_back(op.is_seller() ? analytic::coverage_seller(ratio(db), ctx).value
                                 : analytic::coverage_buyer(ratio(db), ctx).value);
  }
  return out;
}

std::vector<sim::MetricEstimate> sim_curve(const ScenarioConfig& c, OperatorId op,
                                           std::uint64_t trials, std::uint64_t seed) {
  std::vector<double> betas;
  for (double db : kBetaDb) betas.push_back(ratio(db));
  return sim::estimate_coverage_curve(c, kBand, op, betas, trials, seed);
}

Verdict distributions() {
  struct Case {
    double per_disk;
    double alpha;
  };
  Verdict v{true, ""};
  for (Case k : {Case{50, 5.0}, Case{30, 4.0}}) {
    const double mu = fixtures::per_disk(k.per_disk);
    const double zeta = dbm_to_linear(-100.0);
    const auto h = sim::sample_max_gain(mu, k.alpha, 500.0, 100000, kSeed);
    std::vector<double> p;
    for (double x : h) p.push_back(zeta / x);
    const double ks_h = ks_statistic(h, [&](double z) { return analytic::cdf_H(z, mu, k.alpha); });
    const double ks_p = ks_statistic(p, [&](double z) { return analytic::cdf_P(z, mu, k.alpha, zeta); });
    v.pass = v.pass && ks_h < 0.01 && ks_p < 0.01;
    v.detail += fmt("mu=%g/disk alpha=%g: KS_H=%.4f KS_P=%.4f; ", k.per_disk, k.alpha, ks_h, ks_p);
  }
  v.detail += "limit 0.01, 1e5 samples";
  return v;
}

Verdict coverage_agreement() {
  const auto c = fixtures::base();
  Verdict v{true, ""};
  for (auto op : {kSeller, kBuyer}) {
    const auto ana = analytic_curve(c, op);
    const auto sim = sim_curve(c, op, 20000, kSeed);
    double worst = 0;
    double at = 0;
    for (std::size_t i = 0; i < ana.size(); ++i) {
      const double d = std::abs(ana[i] - sim[i].mean);
      if (d > worst) {
        worst = d;
        at = kBetaDb[i];
      }
    }
    v.pass = v.pass && worst <= 0.03;
    v.detail += fmt("%s max|diff|=%.4f at %g dB; ", to_string(op).c_str(), worst, at);
  }
  v.detail += "limit 0.03, 13 points, 2e4 trials";
  return v;
}

Verdict rate_agreement() {
  const auto c = fixtures::base();
  Verdict v{true, ""};
  for (auto op : {kSeller, kBuyer}) {
    const auto ctx = derive_context(c, kBand, op);
    const std::vector<SubBandContext> bands{ctx};
    const double ana = op.is_seller() ? analytic::rate_seller(bands).value
                                      : analytic::rate_buyer(bands).value;
    const auto sim = sim::estimate_rate(c, op, 20000, kSeed);
    const double rel = std::abs(sim.mean / ana - 1);
    v.pass = v.pass && rel < 0.03;
    v.detail += fmt("%s analytic=%.5f sim=%.5f+/-%.5f rel=%.4f; ", to_string(op).c_str(), ana,
                    sim.mean, sim.half_width_95, rel);
  }
  v.detail += "nats, limit 3%";
  return v;
}

Verdict buyer_density_trend() {
  const auto base = fixtures::base(8);
  const auto dense = fixtures::base(16);
  const auto b0 = analytic_curve(base, kBuyer);
  const auto b1 = analytic_curve(dense, kBuyer);
  const auto s0 = analytic_curve(base, kSeller);
  const auto s1 = analytic_curve(dense, kSeller);
  bool up = true;
  double seller_shift = 0;
  for (std::size_t i = 0; i < b0.size(); ++i) {
    up = up && b1[i] > b0[i];
    seller_shift = std::max(seller_shift, std::abs(s1[i] - s0[i]));
  }
  const auto sim0 = sim_curve(base, kSeller, 20000, kSeed);
  const auto sim1 = sim_curve(dense, kSeller, 20000, kSeed);
  double sim_shift = 0;
  for (std::size_t i = 0; i < sim0.size(); ++i)
    sim_shift = std::max(sim_shift, std::abs(sim1[i].mean - sim0[i].mean));
  return {up && seller_shift < 0.02,
          fmt("buyer raised at all points: %s; seller max|shift| analytic=%.4f (limit 0.02), "
              "sim=%.4f",
              up ? "yes" : "no", seller_shift, sim_shift)};
}

Verdict seller_ue_trend() {
  const auto base = fixtures::base(8, 50);
  const auto dense = fixtures::base(8, 70);
  const auto b0 = analytic_curve(base, kBuyer);
  const auto b1 = analytic_curve(dense, kBuyer);
  bool down = true;
  for (std::size_t i = 0; i < b0.size(); ++i) down = down && b1[i] < b0[i];

  const auto a0 = analytic_curve(base, kSeller);
  const auto a1 = analytic_curve(dense, kSeller);
  const auto s0 = sim_curve(base, kSeller, 20000, kSeed);
  const auto s1 = sim_curve(dense, kSeller, 20000, kSeed);
  int outside = 0;
  double worst_ana = 0;
  double worst_sim = 0;
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const double ci = std::hypot(s0[i].half_width_95, s1[i].half_width_95);
    const double ds = std::abs(s1[i].mean - s0[i].mean);
    const double da = std::abs(a1[i] - a0[i]);
    worst_ana = std::max(worst_ana, da);
    worst_sim = std::max(worst_sim, ds);
    if (ds > ci || da > s0[i].half_width_95) ++outside;
  }
  return {down && outside == 0,
          fmt("buyer strictly lower: %s; seller points outside CI: %d/13 (max|shift| "
              "analytic=%.4f sim=%.4f)",
              down ? "yes" : "no", outside, worst_ana, worst_sim)};
}

Verdict sum_rate_trend() {
  const auto c = fixtures::base();
  SweepSpec s;
  s.parameter = SweepParameter::InterferenceThresholdDbm;
  s.grid = parse_grid("-130:-70:13");
  s.engines = kEngineAnalytic | kEngineSimulation | kEngineBaseline;
  s.trials = 5000;
  s.seed = kSeed;
  const Table t = run_sweep(c, s);
  const auto ana = t.values("network0.sum_rate");
  const auto sim = t.values("network0.sim_sum_rate");
  const auto base = t.values("network0.baseline_sum_rate");
  int below = 0;
  for (std::size_t i = 0; i < sim.size(); ++i) below += !(sim[i] >= base[i]);
  const bool uni = is_unimodal(ana);
  return {uni && below == 0,
          fmt("analytic unimodal: %s (peak %g dBm); sim unimodal: %s (peak %g dBm); "
              "max-allowable below baseline at %d/13 points",
              uni ? "yes" : "no", s.grid[argmax(ana)], is_unimodal(sim) ? "yes" : "no",
              s.grid[argmax(sim)], below)};
}

Verdict moment_identity() {
  std::mt19937_64 gen(kSeed);
  std::uniform_real_distribution<double> alpha_d(2.5, 6.0), mu_d(10, 100), zeta_d(-130, -70);
  quad::QuadratureSpec tight;
  tight.rel_tolerance = 1e-12;
  tight.abs_tolerance = 1e-300;
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    const double alpha = alpha_d(gen);
    const double mu = fixtures::per_disk(mu_d(gen));
    const double zeta = dbm_to_linear(zeta_d(gen));
    const double closed = analytic::moment_P(2 / alpha, mu, alpha, zeta);
    const double numeric = analytic::moment_P(2 / alpha, mu, alpha, zeta,
                                              analytic::MomentMethod::Quadrature, tight);
    worst = std::max(worst, std::abs(numeric / closed - 1));
  }
  return {worst < 1e-9, fmt("max rel error %.3g over 5 tuples (limit 1e-9)", worst)};
}

Verdict constraint_invariant() {
  const auto c = fixtures::base();
  const auto maxp = sim::audit_constraint(c, 10000, kSeed);
  const auto base = sim::audit_constraint(c, 10000, kSeed, {sim::PowerControl::NearestDistance});
  return {maxp.violating_pairs == 0 && maxp.checked_pairs > 0,
          fmt("max-allowable violations %llu of %llu pairs; baseline violates in %.4f of realizations "
              "(%llu pairs)",
              static_cast<unsigned long long>(maxp.violating_pairs),
              static_cast<unsigned long long>(maxp.checked_pairs), base.realization_rate(),
              static_cast<unsigned long long>(base.violating_pairs))};
}

Verdict determinism_and_edge() {
  const auto c = fixtures::base();
  setenv("SPECTRA_THREADS", "1", 1);
  const auto one = sim_curve(c, kBuyer, 2000, kSeed);
  setenv("SPECTRA_THREADS", "4", 1);
  const auto four = sim_curve(c, kBuyer, 2000, kSeed);
  unsetenv("SPECTRA_THREADS");
  SweepSpec s;
  s.parameter = SweepParameter::InterferenceThresholdDbm;
  s.grid = parse_grid("-110:-90:3");
  s.engines = kEngineAnalytic | kEngineSimulation;
  s.trials = 500;
  s.seed = kSeed;
  const bool same = one == four && to_csv(run_sweep(c, s)) == to_csv(run_sweep(c, s));

  auto wide = c;
  wide.region_radius_m = 1000.0;
  double shift = 0;
  std::string where;
  for (auto op : {kSeller, kBuyer}) {
    const auto a = sim_curve(c, op, 20000, kSeed);
    const auto b = sim_curve(wide, op, 20000, kSeed);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = std::abs(a[i].mean - b[i].mean);
      if (d > shift) {
        shift = d;
        where = fmt("%s at %g dB", to_string(op).c_str(), kBetaDb[i]);
      }
    }
  }
  return {same && shift < 0.01,
          fmt("bit-identical reruns: %s; max coverage shift 500->1000 m %.4f (%s, limit 0.01)",
              same ? "yes" : "no", shift, where.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"distribution KS", distributions},
      {"coverage analytic vs sim", coverage_agreement},
      {"rate analytic vs sim", rate_agreement},
      {"buyer BS density trend", buyer_density_trend},
      {"seller UE density trend", seller_ue_trend},
      {"sum-rate vs zeta trend", sum_rate_trend},
      {"moment identity", moment_identity},
      {"interference constraint", constraint_invariant},
      {"determinism and edge", determinism_and_edge},
  };
  int passed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    passed += v.pass;
    std::printf("criterion %d %s: %s  %s [%.1f s]\n", n, v.pass ? "PASS" : "FAIL", name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("acceptance: %d criteria evaluated, %d passed\n", n, passed);
  return passed == n ? 0 : 1;
}
