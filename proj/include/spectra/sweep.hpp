#pragma once

// Parameter sweeps across both engines, cross-engine validation, and the
// power-control distribution tables. Results are Tables (see table.hpp)
// with columns named `<kind><index>.<metric>[.ci95]`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/analytic.hpp"
#include "spectra/model.hpp"
#include "spectra/table.hpp"

namespace spectra {

enum class SweepParameter {
  SinrThresholdDb,
  InterferenceThresholdDbm,  // every seller's zeta
  BuyerBsIntensity,          // every buyer, count per region disk
  SellerUeIntensity,         // every seller, count per region disk
};

const char* to_string(SweepParameter p);
std::optional<SweepParameter> parse_parameter(std::string_view name);

enum Engine : unsigned {
  kEngineAnalytic = 1u << 0,
  kEngineSimulation = 1u << 1,        // max-allowable power control
  kEngineBaseline = 1u << 2,          // nearest-UE distance power
  kEngineIndependentMarks = 1u << 3,  // i.i.d. powers from the analytic law
};

/// Comma list of analytic, sim, baseline, independent.
unsigned parse_engines(std::string_view text);
std::string engines_to_string(unsigned engines);

/// "start:stop:count" gives `count` evenly spaced points; a bare number
/// gives one point.
std::vector<double> parse_grid(std::string_view text);

/// Default grid for each parameter (the ranges used for the bundled scenarios).
std::vector<double> default_grid(SweepParameter p);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::SinrThresholdDb;
  std::vector<double> grid;
  unsigned engines = kEngineAnalytic;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  SubBandId band{};
  double beta_db = 0.0;  // coverage threshold when beta is not swept
  analytic::EvalOptions analytic;
};

/// Throws InvalidArgument on an empty or non-monotone grid, zero trials
/// with a simulation engine, an unknown band, or an empty engine set.
void check(const SweepSpec& spec, const ScenarioConfig& config);

/// Copy of `config` with the swept parameter set to `value`.
ScenarioConfig apply_parameter(const ScenarioConfig& config, SweepParameter p,
                               double value);

/// Seed of grid point `index`; independent of the other points.
std::uint64_t point_seed(std::uint64_t master, std::size_t index);

Table run_sweep(const ScenarioConfig& config, const SweepSpec& spec);

struct ValidationSpec {
  std::vector<double> beta_db;
  std::uint64_t trials = 20000;
  std::uint64_t seed = 1;
  double tolerance = 0.03;
  SubBandId band{};
  analytic::EvalOptions analytic;
};

struct EngineReport {
  Table table;
  bool passed = false;
  std::string summary;  // worst point and verdict, one line each
};

/// Coverage from both engines at every beta for the band's seller and each
/// buyer sharing it. A point passes when |analytic - sim| <= max(tolerance,
/// ci95); an analytic failure fails the point.
EngineReport validate_engines(const ScenarioConfig& config,
                              const ValidationSpec& spec);

struct DistributionSpec {
  SubBandId band{};
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t points = 200;
};

/// Analytic and empirical CDF / density of H and P = zeta / H on a
/// log-spaced grid; KS distances go in the metadata.
Table show_distributions(const ScenarioConfig& config,
                         const DistributionSpec& spec);

}  // namespace spectra
