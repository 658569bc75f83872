#include "spectra.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "spectra/analytic.hpp"
#include "spectra/config_io.hpp"
#include "spectra/error.hpp"
#include "spectra/parallel.hpp"
#include "spectra/simulator.hpp"
#include "spectra/sweep.hpp"

struct spectra_config {
  spectra::ScenarioConfig config;
  std::vector<spectra::Violation> violations;
};

struct spectra_table {
  spectra::Table table;
};

struct spectra_grid {
  std::vector<double> values;
};

namespace {

using namespace spectra;

thread_local std::string g_last_error;

spectra_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SPECTRA_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidConfig: return SPECTRA_ERR_INVALID_CONFIG;
    case ErrorCode::Io: return SPECTRA_ERR_IO;
    case ErrorCode::Parse: return SPECTRA_ERR_PARSE;
    case ErrorCode::Domain: return SPECTRA_ERR_DOMAIN;
    case ErrorCode::NotConverged: return SPECTRA_ERR_NOT_CONVERGED;
    case ErrorCode::Internal: return SPECTRA_ERR_INTERNAL;
  }
  return SPECTRA_ERR_INTERNAL;
}

template <class F>
spectra_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SPECTRA_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return SPECTRA_ERR_OUT_OF_RANGE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SPECTRA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPECTRA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return SPECTRA_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OperatorId op_of(spectra_operator_kind kind, unsigned index) {
  switch (kind) {
    case SPECTRA_SELLER: return OperatorId::seller(index);
    case SPECTRA_BUYER: return OperatorId::buyer(index);
  }
  fail(ErrorCode::InvalidArgument, "bad operator kind");
}

sim::SimOptions sim_of(spectra_power_control p) {
  switch (p) {
    case SPECTRA_POWER_MAX_ALLOWABLE: return {sim::PowerControl::MaxAllowable};
    case SPECTRA_POWER_INDEPENDENT_MARKS: return {sim::PowerControl::IndependentMarks};
    case SPECTRA_POWER_NEAREST_DISTANCE: return {sim::PowerControl::NearestDistance};
  }
  fail(ErrorCode::InvalidArgument, "bad power-control rule");
}

void fill(spectra_estimate* out, const sim::MetricEstimate& e) {
  *out = {e.mean, e.half_width_95, e.trials, e.seed, e.resamples, e.capped_power};
}

// Engines that sample require a configuration that passed validation.
const ScenarioConfig& valid(const spectra_config* c) {
  need(c, "config");
  const auto v = validate(c->config);
  if (!v.empty()) fail(ErrorCode::InvalidConfig, v.front().message);
  return c->config;
}

}  // namespace

extern "C" {

const char* spectra_status_string(spectra_status status) {
  switch (status) {
    case SPECTRA_OK: return "ok";
    case SPECTRA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SPECTRA_ERR_INVALID_CONFIG: return "invalid config";
    case SPECTRA_ERR_IO: return "i/o error";
    case SPECTRA_ERR_PARSE: return "parse error";
    case SPECTRA_ERR_DOMAIN: return "domain error";
    case SPECTRA_ERR_NOT_CONVERGED: return "not converged";
    case SPECTRA_ERR_OUT_OF_RANGE: return "out of range";
    case SPECTRA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* spectra_last_error(void) { return g_last_error.c_str(); }

const char* spectra_version(void) { return "0.1.0"; }

unsigned spectra_worker_count(void) { return worker_count(); }

void spectra_string_free(char* s) { std::free(s); }

spectra_status spectra_config_load(const char* path, spectra_config** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new spectra_config{load_config(path), {}};
  });
}

spectra_status spectra_config_parse(const char* json, spectra_config** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new spectra_config{parse_config(json), {}};
  });
}

void spectra_config_free(spectra_config* config) { delete config; }

spectra_status spectra_config_validate(spectra_config* config, size_t* violations) {
  return guarded([&] {
    need(config, "config");
    need(violations, "violations");
    config->violations = validate(config->config);
    *violations = config->violations.size();
  });
}

spectra_status spectra_config_violation(const spectra_config* config, size_t index,
                                        const char** code, const char** message) {
  return guarded([&] {
    need(config, "config");
    const auto& v = config->violations.at(index);
    if (code) *code = v.code.c_str();
    if (message) *message = v.message.c_str();
  });
}

spectra_status spectra_config_hash(const spectra_config* config, uint64_t* out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    *out = config_hash(config->config);
  });
}

spectra_status spectra_config_dump(const spectra_config* config, char** json) {
  return guarded([&] {
    need(config, "config");
    need(json, "json");
    *json = copy_string(dump_config(config->config));
  });
}

spectra_status spectra_config_counts(const spectra_config* config, size_t* sellers,
                                     size_t* buyers) {
  return guarded([&] {
    need(config, "config");
    if (sellers) *sellers = config->config.sellers.size();
    if (buyers) *buyers = config->config.buyers.size();
  });
}

spectra_status spectra_rho(double alpha, double beta, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = analytic::rho(alpha, beta);
  });
}

spectra_status spectra_moment_p(double exponent, double mu_s, double alpha, double zeta,
                                int use_quadrature, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = analytic::moment_P(exponent, mu_s, alpha, zeta,
                              use_quadrature ? analytic::MomentMethod::Quadrature
                                             : analytic::MomentMethod::ClosedForm);
  });
}

spectra_status spectra_coverage(const spectra_config* config, unsigned seller, unsigned band,
                                spectra_operator_kind kind, unsigned index, double beta,
                                double* value, double* quadrature_error) {
  return guarded([&] {
    need(value, "value");
    const auto op = op_of(kind, index);
    const auto ctx = derive_context(valid(config), {seller, band}, op);
    const auto r = op.is_seller() ? analytic::coverage_seller(beta, ctx)
                                  : analytic::coverage_buyer(beta, ctx);
    *value = r.value;
    if (quadrature_error) *quadrature_error = r.estimated_quadrature_error;
  });
}

spectra_status spectra_rate(const spectra_config* config, spectra_operator_kind kind,
                            unsigned index, double* value) {
  return guarded([&] {
    need(value, "value");
    const auto& c = valid(config);
    const auto op = op_of(kind, index);
    const auto bands = op.is_seller() ? c.own_bands(index) : c.leased_bands(index);
    std::vector<SubBandContext> ctx;
    for (const auto b : bands) ctx.push_back(derive_context(c, b, op));
    *value = op.is_seller() ? analytic::rate_seller(ctx).value : analytic::rate_buyer(ctx).value;
  });
}

spectra_status spectra_total_sum_rate(const spectra_config* config, double* value) {
  return guarded([&] {
    need(value, "value");
    *value = analytic::total_sum_rate(valid(config)).value;
  });
}

spectra_status spectra_sim_coverage(const spectra_config* config, unsigned seller,
                                    unsigned band, spectra_operator_kind kind, unsigned index,
                                    double beta, uint64_t trials, uint64_t seed,
                                    spectra_power_control power, spectra_estimate* out) {
  return guarded([&] {
    need(out, "out");
    fill(out, sim::estimate_coverage(valid(config), {seller, band}, op_of(kind, index), beta,
                                     trials, seed, sim_of(power)));
  });
}

spectra_status spectra_sim_rate(const spectra_config* config, spectra_operator_kind kind,
                                unsigned index, uint64_t trials, uint64_t seed,
                                spectra_power_control power, spectra_estimate* out) {
  return guarded([&] {
    need(out, "out");
    fill(out, sim::estimate_rate(valid(config), op_of(kind, index), trials, seed, sim_of(power)));
  });
}

spectra_status spectra_constraint_audit(const spectra_config* config, uint64_t realizations,
                                        uint64_t seed, spectra_power_control power,
                                        spectra_constraint_report* out) {
  return guarded([&] {
    need(out, "out");
    const auto r = sim::audit_constraint(valid(config), realizations, seed, sim_of(power));
    *out = {r.realizations, r.violating_realizations, r.violating_pairs, r.checked_pairs};
  });
}

spectra_status spectra_grid_parse(const char* text, spectra_grid** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new spectra_grid{parse_grid(text)};
  });
}

spectra_status spectra_grid_default(const char* parameter, spectra_grid** out) {
  return guarded([&] {
    need(parameter, "parameter");
    need(out, "out");
    const auto p = parse_parameter(parameter);
    if (!p) fail(ErrorCode::InvalidArgument, std::string("unknown parameter '") + parameter + "'");
    *out = new spectra_grid{default_grid(*p)};
  });
}

size_t spectra_grid_size(const spectra_grid* grid) { return grid ? grid->values.size() : 0; }

const double* spectra_grid_values(const spectra_grid* grid) {
  return grid ? grid->values.data() : nullptr;
}

void spectra_grid_free(spectra_grid* grid) { delete grid; }

void spectra_sweep_spec_init(spectra_sweep_spec* spec) {
  if (!spec) return;
  *spec = {};
  spec->parameter = "sinr_threshold_db";
  spec->engines = SPECTRA_ENGINE_ANALYTIC;
  spec->trials = 10000;
  spec->seed = 1;
}

spectra_status spectra_parse_engines(const char* text, unsigned* engines) {
  return guarded([&] {
    need(text, "text");
    need(engines, "engines");
    *engines = parse_engines(text);
  });
}

spectra_status spectra_run_sweep(const spectra_config* config, const spectra_sweep_spec* spec,
                                 spectra_table** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    need(spec->parameter, "parameter");
    const auto p = parse_parameter(spec->parameter);
    if (!p) fail(ErrorCode::InvalidArgument, std::string("unknown parameter '") + spec->parameter + "'");
    if (spec->grid_size > 0) need(spec->grid, "grid");
    SweepSpec s;
    s.parameter = *p;
    s.grid.assign(spec->grid, spec->grid + spec->grid_size);
    s.engines = spec->engines;
    s.trials = spec->trials;
    s.seed = spec->seed;
    s.band = {spec->band_seller, spec->band_index};
    s.beta_db = spec->beta_db;
    s.analytic.positive_laplace_exponent = spec->positive_laplace_exponent != 0;
    *out = new spectra_table{run_sweep(valid(config), s)};
  });
}

void spectra_validation_spec_init(spectra_validation_spec* spec) {
  if (!spec) return;
  *spec = {};
  spec->trials = 20000;
  spec->seed = 1;
  spec->tolerance = 0.03;
}

spectra_status spectra_validate_engines(const spectra_config* config,
                                        const spectra_validation_spec* spec, int* passed,
                                        char** summary, spectra_table** out) {
  return guarded([&] {
    need(spec, "spec");
    need(passed, "passed");
    if (spec->beta_count > 0) need(spec->beta_db, "beta_db");
    ValidationSpec v;
    v.beta_db.assign(spec->beta_db, spec->beta_db + spec->beta_count);
    v.trials = spec->trials;
    v.seed = spec->seed;
    v.tolerance = spec->tolerance;
    v.band = {spec->band_seller, spec->band_index};
    v.analytic.positive_laplace_exponent = spec->positive_laplace_exponent != 0;
    auto report = validate_engines(valid(config), v);
    *passed = report.passed ? 1 : 0;
    if (summary) *summary = copy_string(report.summary);
    if (out) *out = new spectra_table{std::move(report.table)};
  });
}

spectra_status spectra_distributions(const spectra_config* config, unsigned band_seller,
                                     unsigned band_index, uint64_t samples, uint64_t seed,
                                     size_t points, spectra_table** out) {
  return guarded([&] {
    need(out, "out");
    DistributionSpec d;
    d.band = {band_seller, band_index};
    d.samples = samples;
    d.seed = seed;
    d.points = points;
    *out = new spectra_table{show_distributions(valid(config), d)};
  });
}

spectra_status spectra_table_write_csv(const spectra_table* table, const char* path) {
  return guarded([&] {
    need(table, "table");
    need(path, "path");
    write_csv(table->table, path);
  });
}

spectra_status spectra_table_to_csv(const spectra_table* table, char** csv) {
  return guarded([&] {
    need(table, "table");
    need(csv, "csv");
    *csv = copy_string(to_csv(table->table));
  });
}

spectra_status spectra_table_read_csv(const char* path, spectra_table** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new spectra_table{read_csv(path)};
  });
}

size_t spectra_table_rows(const spectra_table* table) {
  return table ? table->table.rows.size() : 0;
}

size_t spectra_table_columns(const spectra_table* table) {
  return table ? table->table.columns.size() : 0;
}

const char* spectra_table_column_name(const spectra_table* table, size_t column) {
  if (!table || column >= table->table.columns.size()) return nullptr;
  return table->table.columns[column].c_str();
}

spectra_status spectra_table_value(const spectra_table* table, size_t row, size_t column,
                                   double* out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    *out = table->table.rows.at(row).at(column);
  });
}

const char* spectra_table_flags(const spectra_table* table, size_t row) {
  if (!table || row >= table->table.flags.size()) return nullptr;
  return table->table.flags[row].c_str();
}

const char* spectra_table_meta(const spectra_table* table, const char* key) {
  if (!table || !key) return nullptr;
  const auto* v = table->table.meta(key);
  return v ? v->c_str() : nullptr;
}

void spectra_table_free(spectra_table* table) { delete table; }

}  // extern "C"
