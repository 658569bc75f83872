#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <thread>

#include "spectra.h"

namespace {

std::string scenario(const char* name) {
  return std::string(SPECTRA_SOURCE_DIR) + "/scenarios/" + name;
}

struct Config {
  spectra_config* h = nullptr;
  explicit Config(const char* name) {
    REQUIRE(spectra_config_load(scenario(name).c_str(), &h) == SPECTRA_OK);
  }
  ~Config() { spectra_config_free(h); }
};

const char* kBad = R"({"path_loss_exponent": 1.5, "noise_power_dbm": -120,
  "region_radius_m": 500, "intensity_disk_radius_m": 500,
  "sellers": [{"bs_intensity_per_disk": 8, "ue_intensity_per_disk": 50,
    "num_subbands": 1, "tx_power_dbm": 10, "interference_threshold_dbm": -100}],
  "buyers": [], "sharing_groups": []})";

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(spectra_status_string(SPECTRA_OK)) == "ok");
  for (int s = 0; s <= SPECTRA_ERR_INTERNAL; ++s)
    CHECK(std::strlen(spectra_status_string(static_cast<spectra_status>(s))) > 0);
  CHECK(std::string(spectra_version()) == "0.1.0");
  CHECK(spectra_worker_count() >= 1);
}

TEST_CASE("config handles") {
  spectra_config* c = nullptr;
  CHECK(spectra_config_load("/nonexistent.json", &c) == SPECTRA_ERR_IO);
  CHECK(c == nullptr);
  CHECK(std::strlen(spectra_last_error()) > 0);
  CHECK(spectra_config_parse("{not json", &c) == SPECTRA_ERR_PARSE);
  CHECK(spectra_config_load(nullptr, &c) == SPECTRA_ERR_INVALID_ARGUMENT);
  CHECK(spectra_config_parse("{}", nullptr) == SPECTRA_ERR_INVALID_ARGUMENT);

  Config t("base.json");
  size_t n = 99;
  REQUIRE(spectra_config_validate(t.h, &n) == SPECTRA_OK);
  CHECK(n == 0);
  size_t sellers = 0, buyers = 0;
  REQUIRE(spectra_config_counts(t.h, &sellers, &buyers) == SPECTRA_OK);
  CHECK(sellers == 1);
  CHECK(buyers == 1);

  uint64_t h1 = 0, h2 = 0;
  REQUIRE(spectra_config_hash(t.h, &h1) == SPECTRA_OK);
  char* json = nullptr;
  REQUIRE(spectra_config_dump(t.h, &json) == SPECTRA_OK);
  spectra_config* again = nullptr;
  REQUIRE(spectra_config_parse(json, &again) == SPECTRA_OK);
  spectra_string_free(json);
  REQUIRE(spectra_config_hash(again, &h2) == SPECTRA_OK);
  CHECK(h1 == h2);
  spectra_config_free(again);
  spectra_config_free(nullptr);
}

TEST_CASE("invalid configs are reported and refused by the engines") {
  spectra_config* c = nullptr;
  REQUIRE(spectra_config_parse(kBad, &c) == SPECTRA_OK);
  size_t n = 0;
  REQUIRE(spectra_config_validate(c, &n) == SPECTRA_OK);
  CHECK(n >= 1);
  const char* code = nullptr;
  const char* message = nullptr;
  REQUIRE(spectra_config_violation(c, 0, &code, &message) == SPECTRA_OK);
  CHECK(std::strlen(code) > 0);
  CHECK(std::strlen(message) > 0);
  CHECK(spectra_config_violation(c, n, &code, &message) == SPECTRA_ERR_OUT_OF_RANGE);
  double v = 0;
  CHECK(spectra_coverage(c, 0, 0, SPECTRA_SELLER, 0, 1.0, &v, nullptr) == SPECTRA_ERR_INVALID_CONFIG);
  CHECK(spectra_total_sum_rate(c, &v) == SPECTRA_ERR_INVALID_CONFIG);
  spectra_config_free(c);
}

TEST_CASE("analytic calls") {
  double v = 0;
  REQUIRE(spectra_rho(4.0, INFINITY, &v) == SPECTRA_OK);
  CHECK(v == doctest::Approx(M_PI / 2).epsilon(1e-10));
  CHECK(spectra_rho(4.0, 0.0, &v) == SPECTRA_ERR_DOMAIN);
  CHECK(spectra_rho(2.0, 1.0, &v) != SPECTRA_OK);
  double a = 0, b = 0;
  REQUIRE(spectra_moment_p(0.5, 1e-4, 4.0, 1e-10, 0, &a) == SPECTRA_OK);
  REQUIRE(spectra_moment_p(0.5, 1e-4, 4.0, 1e-10, 1, &b) == SPECTRA_OK);
  CHECK(a == doctest::Approx(b).epsilon(1e-7));

  Config t("base.json");
  double cov = 0, err = -1;
  REQUIRE(spectra_coverage(t.h, 0, 0, SPECTRA_BUYER, 0, 1.0, &cov, &err) == SPECTRA_OK);
  CHECK(cov > 0.0);
  CHECK(cov < 1.0);
  CHECK(err >= 0.0);
  CHECK(spectra_coverage(t.h, 0, 1, SPECTRA_BUYER, 0, 1.0, &cov, &err) == SPECTRA_ERR_INVALID_ARGUMENT);
  CHECK(spectra_coverage(t.h, 0, 0, SPECTRA_BUYER, 4, 1.0, &cov, &err) == SPECTRA_ERR_INVALID_ARGUMENT);
  double rs = 0, rb = 0, total = 0;
  REQUIRE(spectra_rate(t.h, SPECTRA_SELLER, 0, &rs) == SPECTRA_OK);
  REQUIRE(spectra_rate(t.h, SPECTRA_BUYER, 0, &rb) == SPECTRA_OK);
  REQUIRE(spectra_total_sum_rate(t.h, &total) == SPECTRA_OK);
  CHECK(rs > rb);
  CHECK(total > 0.0);
}

TEST_CASE("simulator calls") {
  Config t("base.json");
  spectra_estimate e1{}, e2{};
  REQUIRE(spectra_sim_coverage(t.h, 0, 0, SPECTRA_SELLER, 0, 1.0, 500, 3,
                               SPECTRA_POWER_MAX_ALLOWABLE, &e1) == SPECTRA_OK);
  REQUIRE(spectra_sim_coverage(t.h, 0, 0, SPECTRA_SELLER, 0, 1.0, 500, 3,
                               SPECTRA_POWER_MAX_ALLOWABLE, &e2) == SPECTRA_OK);
  CHECK(std::memcmp(&e1, &e2, sizeof e1) == 0);
  CHECK(e1.trials == 500);
  CHECK(spectra_sim_coverage(t.h, 0, 0, SPECTRA_SELLER, 0, 1.0, 500, 3,
                             static_cast<spectra_power_control>(9), &e1) == SPECTRA_ERR_INVALID_ARGUMENT);

  spectra_estimate r{};
  REQUIRE(spectra_sim_rate(t.h, SPECTRA_BUYER, 0, 300, 1, SPECTRA_POWER_NEAREST_DISTANCE, &r) == SPECTRA_OK);
  CHECK(r.mean > 0.0);

  spectra_constraint_report rep{};
  REQUIRE(spectra_constraint_audit(t.h, 200, 1, SPECTRA_POWER_MAX_ALLOWABLE, &rep) == SPECTRA_OK);
  CHECK(rep.realizations == 200);
  CHECK(rep.violating_pairs == 0);
  CHECK(rep.checked_pairs > 0);
}

TEST_CASE("grids") {
  spectra_grid* g = nullptr;
  REQUIRE(spectra_grid_parse("0:1:5", &g) == SPECTRA_OK);
  CHECK(spectra_grid_size(g) == 5);
  CHECK(spectra_grid_values(g)[4] == 1.0);
  spectra_grid_free(g);
  g = nullptr;
  CHECK(spectra_grid_parse("0:1", &g) == SPECTRA_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  REQUIRE(spectra_grid_default("interference_threshold_dbm", &g) == SPECTRA_OK);
  CHECK(spectra_grid_size(g) == 13);
  spectra_grid_free(g);
  CHECK(spectra_grid_default("alpha", &g) == SPECTRA_ERR_INVALID_ARGUMENT);
  unsigned engines = 0;
  REQUIRE(spectra_parse_engines("analytic,sim", &engines) == SPECTRA_OK);
  CHECK(engines == (SPECTRA_ENGINE_ANALYTIC | SPECTRA_ENGINE_SIM));
  CHECK(spectra_parse_engines("warp", &engines) == SPECTRA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sweeps and tables") {
  Config t("base.json");
  spectra_sweep_spec s;
  spectra_sweep_spec_init(&s);
  const double grid[] = {-100.0, -90.0};
  s.parameter = "interference_threshold_dbm";
  s.grid = grid;
  s.grid_size = 2;
  spectra_table* tab = nullptr;
  REQUIRE(spectra_run_sweep(t.h, &s, &tab) == SPECTRA_OK);
  CHECK(spectra_table_rows(tab) == 2);
  REQUIRE(spectra_table_columns(tab) > 1);
  CHECK(std::string(spectra_table_column_name(tab, 0)) == "interference_threshold_dbm");
  CHECK(spectra_table_column_name(tab, 1000) == nullptr);
  double v = 0;
  REQUIRE(spectra_table_value(tab, 1, 0, &v) == SPECTRA_OK);
  CHECK(v == -90.0);
  CHECK(spectra_table_value(tab, 2, 0, &v) == SPECTRA_ERR_OUT_OF_RANGE);
  CHECK(std::string(spectra_table_flags(tab, 0)) == "ok");
  CHECK(std::string(spectra_table_meta(tab, "parameter")) == "interference_threshold_dbm");
  CHECK(spectra_table_meta(tab, "nope") == nullptr);

  const auto path = (std::filesystem::temp_directory_path() / "spectra_capi.csv").string();
  REQUIRE(spectra_table_write_csv(tab, path.c_str()) == SPECTRA_OK);
  spectra_table* back = nullptr;
  REQUIRE(spectra_table_read_csv(path.c_str(), &back) == SPECTRA_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(spectra_table_to_csv(tab, &a) == SPECTRA_OK);
  REQUIRE(spectra_table_to_csv(back, &b) == SPECTRA_OK);
  CHECK(std::string(a) == std::string(b));
  spectra_string_free(a);
  spectra_string_free(b);
  spectra_table_free(back);
  spectra_table_free(tab);
  std::filesystem::remove(path);

  s.parameter = "gamma";
  CHECK(spectra_run_sweep(t.h, &s, &tab) == SPECTRA_ERR_INVALID_ARGUMENT);
  s.parameter = "interference_threshold_dbm";
  s.grid_size = 0;
  CHECK(spectra_run_sweep(t.h, &s, &tab) == SPECTRA_ERR_INVALID_ARGUMENT);
  CHECK(spectra_run_sweep(nullptr, &s, &tab) == SPECTRA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("validation and distributions") {
  Config t("seller_only.json");
  spectra_validation_spec v;
  spectra_validation_spec_init(&v);
  const double betas[] = {0.0, 10.0};
  v.beta_db = betas;
  v.beta_count = 2;
  v.trials = 20000;
  int passed = -1;
  char* summary = nullptr;
  spectra_table* tab = nullptr;
  REQUIRE(spectra_validate_engines(t.h, &v, &passed, &summary, &tab) == SPECTRA_OK);
  CHECK(passed == 1);
  CHECK(std::string(summary).find("PASS") != std::string::npos);
  spectra_string_free(summary);
  spectra_table_free(tab);

  v.positive_laplace_exponent = 1;
  REQUIRE(spectra_validate_engines(t.h, &v, &passed, nullptr, nullptr) == SPECTRA_OK);
  CHECK(passed == 0);

  REQUIRE(spectra_distributions(t.h, 0, 0, 5000, 1, 20, &tab) == SPECTRA_OK);
  CHECK(spectra_table_rows(tab) == 20);
  CHECK(spectra_table_meta(tab, "ks_h") != nullptr);
  spectra_table_free(tab);
  CHECK(spectra_distributions(t.h, 0, 0, 0, 1, 20, &tab) == SPECTRA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  double v = 0;
  REQUIRE(spectra_rho(4.0, -1.0, &v) != SPECTRA_OK);
  const std::string mine = spectra_last_error();
  std::string theirs = "unset";
  std::thread th([&] { theirs = spectra_last_error(); });
  th.join();
  CHECK_FALSE(mine.empty());
  CHECK(theirs.empty());
}
