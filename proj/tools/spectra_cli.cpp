// spectra: command-line front end over the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectra.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

struct ConfigDeleter {
  void operator()(spectra_config* c) const { spectra_config_free(c); }
};
struct TableDeleter {
  void operator()(spectra_table* t) const { spectra_table_free(t); }
};
struct GridDeleter {
  void operator()(spectra_grid* g) const { spectra_grid_free(g); }
};
using ConfigPtr = std::unique_ptr<spectra_config, ConfigDeleter>;
using TablePtr = std::unique_ptr<spectra_table, TableDeleter>;
using GridPtr = std::unique_ptr<spectra_grid, GridDeleter>;

// Thrown to unwind with an exit status after printing a message.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "spectra: " << msg << '\n';
  throw Exit{code};
}

void check(spectra_status s, const std::string& what, int code = kExitConfig) {
  if (s == SPECTRA_OK) return;
  die(code, what + ": " + spectra_status_string(s) + ": " + spectra_last_error());
}

// Config problems of any kind (missing file, bad JSON, failed validation)
// exit with the config status.
ConfigPtr load_valid(const std::string& path) {
  spectra_config* raw = nullptr;
  check(spectra_config_load(path.c_str(), &raw), "cannot load " + path);
  ConfigPtr cfg(raw);
  size_t n = 0;
  check(spectra_config_validate(cfg.get(), &n), "validation");
  if (n > 0) {
    for (size_t i = 0; i < n; ++i) {
      const char* code = nullptr;
      const char* msg = nullptr;
      spectra_config_violation(cfg.get(), i, &code, &msg);
      std::cerr << "violation " << code << ": " << msg << '\n';
    }
    die(kExitConfig, path + ": " + std::to_string(n) + " violation(s)");
  }
  return cfg;
}

std::vector<double> grid_of(const std::string& text, const std::string& parameter) {
  spectra_grid* raw = nullptr;
  if (text.empty()) {
    check(spectra_grid_default(parameter.c_str(), &raw), "--param", kExitConfig);
  } else {
    check(spectra_grid_parse(text.c_str(), &raw), "--grid", kExitConfig);
  }
  GridPtr g(raw);
  const double* v = spectra_grid_values(g.get());
  return {v, v + spectra_grid_size(g.get())};
}

void parse_band(const std::string& text, unsigned& seller, unsigned& band) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto head = text.substr(0, colon);
    const auto tail = text.substr(colon + 1);
    seller = static_cast<unsigned>(std::stoul(head, &used));
    if (used != head.size()) throw std::invalid_argument(text);
    band = static_cast<unsigned>(std::stoul(tail, &used));
    if (used != tail.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    die(kExitConfig, "--band expects seller:band, got '" + text + "'");
  }
}

void emit(const spectra_table* t, const std::string& out) {
  if (out.empty() || out == "-") {
    char* csv = nullptr;
    check(spectra_table_to_csv(t, &csv), "csv");
    std::fputs(csv, stdout);
    spectra_string_free(csv);
    return;
  }
  check(spectra_table_write_csv(t, out.c_str()), "cannot write " + out);
}

void print_meta(const spectra_table* t, const char* key) {
  if (const char* v = spectra_table_meta(t, key)) std::cerr << key << ": " << v << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-operator spectrum sharing: analytic and Monte Carlo engines"};
  app.require_subcommand(1);
  app.set_version_flag("--version", spectra_version());

  std::string config_path;
  std::string out_path;
  std::string grid_text;
  std::string param = "sinr_threshold_db";
  std::string engines_text = "analytic,sim";
  std::string band_text = "0:0";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  double tolerance = 0.03;
  double beta_db = 0.0;
  std::uint64_t samples = 100000;
  std::size_t points = 200;
  bool corrupt_sign = false;

  auto* vc = app.add_subcommand("validate-config", "Check a scenario file");
  vc->add_option("--config", config_path, "Scenario JSON")->required();

  auto* sw = app.add_subcommand("sweep", "Sweep one parameter and write CSV");
  sw->add_option("--config", config_path, "Scenario JSON")->required();
  sw->add_option("--out", out_path, "Output CSV (stdout when omitted)");
  sw->add_option("--param", param,
                 "sinr_threshold_db | interference_threshold_dbm | "
                 "buyer_bs_intensity | seller_ue_intensity")
      ->capture_default_str();
  sw->add_option("--grid", grid_text, "start:stop:count (default depends on --param)");
  sw->add_option("--engines", engines_text, "analytic,sim,baseline,independent")
      ->capture_default_str();
  sw->add_option("--trials", trials, "Monte Carlo trials per point")->capture_default_str();
  sw->add_option("--seed", seed, "Master seed")->capture_default_str();
  sw->add_option("--band", band_text, "Sub-band for coverage columns, seller:band")
      ->capture_default_str();
  sw->add_option("--beta-db", beta_db, "Coverage threshold when beta is not swept")
      ->capture_default_str();

  auto* ve = app.add_subcommand("validate-engines", "Compare analytic and simulated coverage");
  ve->add_option("--config", config_path, "Scenario JSON")->required();
  ve->add_option("--out", out_path, "Optional per-point CSV");
  ve->add_option("--grid", grid_text, "SINR thresholds in dB, start:stop:count")
      ->default_str("-10:20:13");
  ve->add_option("--trials", trials, "Monte Carlo trials")->default_val(20000);
  ve->add_option("--seed", seed, "Seed")->capture_default_str();
  ve->add_option("--tolerance", tolerance, "Absolute coverage tolerance")
      ->capture_default_str();
  ve->add_option("--band", band_text, "seller:band")->capture_default_str();
  ve->add_flag("--corrupt-analytic-sign", corrupt_sign,
               "Test hook: flip the Laplace exponent sign")
      ->group("");

  auto* di = app.add_subcommand("distributions", "Tabulate the H and P laws");
  di->add_option("--config", config_path, "Scenario JSON")->required();
  di->add_option("--out", out_path, "Output CSV (stdout when omitted)");
  di->add_option("--band", band_text, "seller:band")->capture_default_str();
  di->add_option("--samples", samples, "Empirical samples")->capture_default_str();
  di->add_option("--seed", seed, "Seed")->capture_default_str();
  di->add_option("--points", points, "Grid points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (vc->parsed()) {
      auto cfg = load_valid(config_path);
      uint64_t hash = 0;
      check(spectra_config_hash(cfg.get(), &hash), "hash");
      std::printf("ok %016llx\n", static_cast<unsigned long long>(hash));
      return kExitOk;
    }

    if (sw->parsed()) {
      auto cfg = load_valid(config_path);
      const auto grid = grid_of(grid_text, param);
      spectra_sweep_spec spec;
      spectra_sweep_spec_init(&spec);
      spec.parameter = param.c_str();
      spec.grid = grid.data();
      spec.grid_size = grid.size();
      check(spectra_parse_engines(engines_text.c_str(), &spec.engines), "--engines");
      spec.trials = trials;
      spec.seed = seed;
      parse_band(band_text, spec.band_seller, spec.band_index);
      spec.beta_db = beta_db;
      spectra_table* raw = nullptr;
      check(spectra_run_sweep(cfg.get(), &spec, &raw), "sweep");
      TablePtr t(raw);
      emit(t.get(), out_path);
      for (const char* key :
           {"argmax.network0.sum_rate", "unimodal.network0.sum_rate",
            "argmax.network0.sim_sum_rate", "unimodal.network0.sim_sum_rate",
            "argmax.network0.baseline_sum_rate", "sim_vs_baseline.points_not_below",
            "sim_resamples", "sim_capped_power_bs"}) {
        print_meta(t.get(), key);
      }
      std::size_t flagged = 0;
      for (std::size_t i = 0; i < spectra_table_rows(t.get()); ++i) {
        if (std::string(spectra_table_flags(t.get(), i)) != "ok") ++flagged;
      }
      if (flagged) std::cerr << "flagged rows: " << flagged << '\n';
      return kExitOk;
    }

    if (ve->parsed()) {
      auto cfg = load_valid(config_path);
      const auto betas = grid_of(grid_text.empty() ? "-10:20:13" : grid_text, param);
      spectra_validation_spec spec;
      spectra_validation_spec_init(&spec);
      spec.beta_db = betas.data();
      spec.beta_count = betas.size();
      spec.trials = trials;
      spec.seed = seed;
      spec.tolerance = tolerance;
      parse_band(band_text, spec.band_seller, spec.band_index);
      spec.positive_laplace_exponent = corrupt_sign ? 1 : 0;
      int passed = 0;
      char* summary = nullptr;
      spectra_table* raw = nullptr;
      check(spectra_validate_engines(cfg.get(), &spec, &passed, &summary, &raw),
            "validate-engines");
      TablePtr t(raw);
      std::printf("%s\n", summary);
      spectra_string_free(summary);
      if (!out_path.empty()) emit(t.get(), out_path);
      return passed ? kExitOk : kExitValidation;
    }

    if (di->parsed()) {
      auto cfg = load_valid(config_path);
      unsigned s = 0;
      unsigned b = 0;
      parse_band(band_text, s, b);
      spectra_table* raw = nullptr;
      check(spectra_distributions(cfg.get(), s, b, samples, seed, points, &raw),
            "distributions");
      TablePtr t(raw);
      emit(t.get(), out_path);
      print_meta(t.get(), "ks_h");
      print_meta(t.get(), "ks_p");
      return kExitOk;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitConfig;
}
