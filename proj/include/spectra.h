#ifndef SPECTRA_H
#define SPECTRA_H

/* C interface to the spectrum-sharing engines. Every call returns a
 * spectra_status; on failure spectra_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). Handles
 * are opaque and owned by the caller; release them with the matching
 * *_free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPECTRA_BUILDING)
#    define SPECTRA_API __declspec(dllexport)
#  else
#    define SPECTRA_API __declspec(dllimport)
#  endif
#else
#  define SPECTRA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spectra_status {
  SPECTRA_OK = 0,
  SPECTRA_ERR_INVALID_ARGUMENT = 1,
  SPECTRA_ERR_INVALID_CONFIG = 2,
  SPECTRA_ERR_IO = 3,
  SPECTRA_ERR_PARSE = 4,
  SPECTRA_ERR_DOMAIN = 5,
  SPECTRA_ERR_NOT_CONVERGED = 6,
  SPECTRA_ERR_OUT_OF_RANGE = 7,
  SPECTRA_ERR_INTERNAL = 8
} spectra_status;

typedef enum spectra_operator_kind {
  SPECTRA_SELLER = 0,
  SPECTRA_BUYER = 1
} spectra_operator_kind;

typedef enum spectra_power_control {
  SPECTRA_POWER_MAX_ALLOWABLE = 0,
  SPECTRA_POWER_INDEPENDENT_MARKS = 1,
  SPECTRA_POWER_NEAREST_DISTANCE = 2
} spectra_power_control;

/* Engine bits for spectra_sweep_spec.engines. */
#define SPECTRA_ENGINE_ANALYTIC 1u
#define SPECTRA_ENGINE_SIM 2u
#define SPECTRA_ENGINE_BASELINE 4u
#define SPECTRA_ENGINE_INDEPENDENT 8u

typedef struct spectra_config spectra_config;
typedef struct spectra_table spectra_table;
typedef struct spectra_grid spectra_grid;

typedef struct spectra_estimate {
  double mean;
  double half_width_95;
  uint64_t trials;
  uint64_t seed;
  uint64_t resamples;
  uint64_t capped_power;
} spectra_estimate;

typedef struct spectra_constraint_report {
  uint64_t realizations;
  uint64_t violating_realizations;
  uint64_t violating_pairs;
  uint64_t checked_pairs;
} spectra_constraint_report;

SPECTRA_API const char* spectra_status_string(spectra_status status);
SPECTRA_API const char* spectra_last_error(void);
SPECTRA_API const char* spectra_version(void);
/* SPECTRA_THREADS when set, otherwise the hardware concurrency. */
SPECTRA_API unsigned spectra_worker_count(void);

/* Strings returned through char** out-parameters. */
SPECTRA_API void spectra_string_free(char* s);

/* ---- scenarios ---- */
SPECTRA_API spectra_status spectra_config_load(const char* path, spectra_config** out);
SPECTRA_API spectra_status spectra_config_parse(const char* json, spectra_config** out);
SPECTRA_API void spectra_config_free(spectra_config* config);
/* Runs validation and keeps the violations on the handle. */
SPECTRA_API spectra_status spectra_config_validate(spectra_config* config, size_t* violations);
SPECTRA_API spectra_status spectra_config_violation(const spectra_config* config, size_t index,
                                                    const char** code, const char** message);
SPECTRA_API spectra_status spectra_config_hash(const spectra_config* config, uint64_t* out);
SPECTRA_API spectra_status spectra_config_dump(const spectra_config* config, char** json);
SPECTRA_API spectra_status spectra_config_counts(const spectra_config* config, size_t* sellers,
                                                 size_t* buyers);

/* ---- analytic engine ---- */
/* beta <= 0 is an error; pass INFINITY for the lower limit 0. */
SPECTRA_API spectra_status spectra_rho(double alpha, double beta, double* out);
SPECTRA_API spectra_status spectra_moment_p(double exponent, double mu_s, double alpha,
                                            double zeta, int use_quadrature, double* out);
SPECTRA_API spectra_status spectra_coverage(const spectra_config* config, unsigned seller,
                                            unsigned band, spectra_operator_kind kind,
                                            unsigned index, double beta, double* value,
                                            double* quadrature_error);
/* Nats, summed over the operator's bands. */
SPECTRA_API spectra_status spectra_rate(const spectra_config* config, spectra_operator_kind kind,
                                        unsigned index, double* value);
SPECTRA_API spectra_status spectra_total_sum_rate(const spectra_config* config, double* value);

/* ---- simulator ---- */
SPECTRA_API spectra_status spectra_sim_coverage(const spectra_config* config, unsigned seller,
                                                unsigned band, spectra_operator_kind kind,
                                                unsigned index, double beta, uint64_t trials,
                                                uint64_t seed, spectra_power_control power,
                                                spectra_estimate* out);
SPECTRA_API spectra_status spectra_sim_rate(const spectra_config* config,
                                            spectra_operator_kind kind, unsigned index,
                                            uint64_t trials, uint64_t seed,
                                            spectra_power_control power, spectra_estimate* out);
SPECTRA_API spectra_status spectra_constraint_audit(const spectra_config* config,
                                                    uint64_t realizations, uint64_t seed,
                                                    spectra_power_control power,
                                                    spectra_constraint_report* out);

/* ---- grids ---- */
/* "start:stop:count" or a single number. */
SPECTRA_API spectra_status spectra_grid_parse(const char* text, spectra_grid** out);
/* Default grid for a sweep parameter name. */
SPECTRA_API spectra_status spectra_grid_default(const char* parameter, spectra_grid** out);
SPECTRA_API size_t spectra_grid_size(const spectra_grid* grid);
SPECTRA_API const double* spectra_grid_values(const spectra_grid* grid);
SPECTRA_API void spectra_grid_free(spectra_grid* grid);

/* ---- sweeps and reports ---- */
typedef struct spectra_sweep_spec {
  const char* parameter; /* sinr_threshold_db, interference_threshold_dbm,
                            buyer_bs_intensity, seller_ue_intensity */
  const double* grid;
  size_t grid_size;
  unsigned engines;      /* SPECTRA_ENGINE_* bits */
  uint64_t trials;
  uint64_t seed;
  unsigned band_seller;
  unsigned band_index;
  double beta_db;        /* coverage threshold when beta is not swept */
  int positive_laplace_exponent; /* test hook, normally 0 */
} spectra_sweep_spec;

SPECTRA_API void spectra_sweep_spec_init(spectra_sweep_spec* spec);
/* Comma list of analytic, sim, baseline, independent. */
SPECTRA_API spectra_status spectra_parse_engines(const char* text, unsigned* engines);

SPECTRA_API spectra_status spectra_run_sweep(const spectra_config* config,
                                             const spectra_sweep_spec* spec,
                                             spectra_table** out);

typedef struct spectra_validation_spec {
  const double* beta_db;
  size_t beta_count;
  uint64_t trials;
  uint64_t seed;
  double tolerance;
  unsigned band_seller;
  unsigned band_index;
  int positive_laplace_exponent; /* test hook: corrupts the analytic sign */
} spectra_validation_spec;

SPECTRA_API void spectra_validation_spec_init(spectra_validation_spec* spec);
/* *passed is 1 when every point agrees. The summary names the worst point. */
SPECTRA_API spectra_status spectra_validate_engines(const spectra_config* config,
                                                    const spectra_validation_spec* spec,
                                                    int* passed, char** summary,
                                                    spectra_table** out);

SPECTRA_API spectra_status spectra_distributions(const spectra_config* config,
                                                 unsigned band_seller, unsigned band_index,
                                                 uint64_t samples, uint64_t seed,
                                                 size_t points, spectra_table** out);

/* ---- tables ---- */
SPECTRA_API spectra_status spectra_table_write_csv(const spectra_table* table, const char* path);
SPECTRA_API spectra_status spectra_table_to_csv(const spectra_table* table, char** csv);
SPECTRA_API spectra_status spectra_table_read_csv(const char* path, spectra_table** out);
SPECTRA_API size_t spectra_table_rows(const spectra_table* table);
SPECTRA_API size_t spectra_table_columns(const spectra_table* table);
SPECTRA_API const char* spectra_table_column_name(const spectra_table* table, size_t column);
SPECTRA_API spectra_status spectra_table_value(const spectra_table* table, size_t row,
                                               size_t column, double* out);
SPECTRA_API const char* spectra_table_flags(const spectra_table* table, size_t row);
/* NULL when the key is absent. */
SPECTRA_API const char* spectra_table_meta(const spectra_table* table, const char* key);
SPECTRA_API void spectra_table_free(spectra_table* table);

#ifdef __cplusplus
}
#endif

#endif
