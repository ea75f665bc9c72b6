/*
 * C interface to the leadership / reform participation model.
 *
 * Objects are opaque handles created by ldr_*_new / ldr_*_load / the run
 * functions and released with the matching ldr_*_free. Every fallible call
 * returns an ldr_status; on failure ldr_last_error() describes the problem
 * for the calling thread until its next failing call.
 *
 * Strings returned by the library are owned by the handle they came from
 * and stay valid until that handle is freed.
 */
#ifndef LEADERSHIP_LEADERSHIP_H
#define LEADERSHIP_LEADERSHIP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LEADERSHIP_BUILDING_LIBRARY)
#    define LDR_API __declspec(dllexport)
#  else
#    define LDR_API __declspec(dllimport)
#  endif
#else
#  define LDR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ldr_status {
    LDR_OK = 0,
    LDR_ERR_VALIDATION = 1, /* a model constraint is violated */
    LDR_ERR_DOMAIN = 2,     /* argument outside a formula's domain */
    LDR_ERR_PARSE = 3,      /* malformed JSON or CSV */
    LDR_ERR_SCHEMA = 4,     /* well-formed input not matching the schema */
    LDR_ERR_IO = 5,
    LDR_ERR_SOLVER = 6,     /* fixed-point iteration did not converge */
    LDR_ERR_ARGUMENT = 7,   /* null handle, unknown name, bad enum value */
    LDR_ERR_INTERNAL = 8
} ldr_status;

typedef enum ldr_format { LDR_FORMAT_CSV = 0, LDR_FORMAT_JSON = 1 } ldr_format;

typedef enum ldr_posterior { LDR_POSTERIOR_PAPER = 0, LDR_POSTERIOR_BAYES = 1 } ldr_posterior;

typedef enum ldr_result_kind {
    LDR_RESULT_EQUILIBRIUM = 0,
    LDR_RESULT_ABM = 1,
    LDR_RESULT_SWEEP = 2,
    LDR_RESULT_CASE_TABLE = 3
} ldr_result_kind;

typedef struct ldr_scenario ldr_scenario;
typedef struct ldr_result ldr_result;

LDR_API const char* ldr_version(void);
LDR_API const char* ldr_last_error(void);
LDR_API const char* ldr_status_name(ldr_status status);

/* ---- scenarios ---------------------------------------------------------- */

/* Loads and validates a scenario JSON file. */
LDR_API ldr_status ldr_scenario_load(const char* path, ldr_scenario** out);
/* Baseline parameters (a=0.5, phi=2, theta=0.2, gamma=0.8, kappa_max=1,
 * Gamma_gain=1, NonPartisan), run "solve". */
LDR_API ldr_status ldr_scenario_new(ldr_scenario** out);
LDR_API void ldr_scenario_free(ldr_scenario* scenario);

/* Numeric parameters by name: a, phi, theta, gamma, kappa_max, Gamma_gain,
 * p1, p2, s, q, w, G2, G3. Setting does not validate. */
LDR_API ldr_status ldr_scenario_set_param(ldr_scenario* scenario, const char* name, double value);
LDR_API ldr_status ldr_scenario_get_param(const ldr_scenario* scenario, const char* name, double* out);

/* Enumerated settings: "leader_type" (Partisan | NonPartisan),
 * "threshold_convention" (paper-literal | derived-consistent),
 * "posterior_convention" (paper | bayes), "run" (solve | simulate | sweep |
 * case-data), "label" (any text). */
LDR_API ldr_status ldr_scenario_set_option(ldr_scenario* scenario, const char* name, const char* value);

LDR_API ldr_status ldr_scenario_set_abm(ldr_scenario* scenario, uint64_t agents, uint64_t replications,
                                        uint64_t seed);
/* The scenario's abm section, or the simulation defaults when it has none. */
LDR_API ldr_status ldr_scenario_get_abm(const ldr_scenario* scenario, uint64_t* agents, uint64_t* replications,
                                        uint64_t* seed);
LDR_API ldr_status ldr_scenario_set_sweep(ldr_scenario* scenario, const char* parameter, const double* values,
                                          size_t count);
LDR_API ldr_status ldr_scenario_set_case_data(ldr_scenario* scenario, const char* path);

LDR_API ldr_status ldr_scenario_validate(const ldr_scenario* scenario);
LDR_API ldr_status ldr_scenario_save(const ldr_scenario* scenario, const char* path);

/* ---- runs --------------------------------------------------------------- */

LDR_API ldr_status ldr_solve(const ldr_scenario* scenario, ldr_result** out);
/* Uses the scenario's abm section, or 100000 agents x 20 replications with
 * seed 42 when it has none. */
LDR_API ldr_status ldr_simulate(const ldr_scenario* scenario, ldr_result** out);
LDR_API ldr_status ldr_sweep(const ldr_scenario* scenario, ldr_result** out);
LDR_API ldr_status ldr_case_data(const ldr_scenario* scenario, ldr_result** out);

LDR_API void ldr_result_free(ldr_result* result);
LDR_API ldr_result_kind ldr_result_get_kind(const ldr_result* result);
/* Human-readable multi-line summary. */
LDR_API const char* ldr_result_summary(const ldr_result* result);
/* Rendered CSV or JSON text, as ldr_result_write would store it. */
LDR_API ldr_status ldr_result_render(const ldr_result* result, ldr_format format, const char** out);
LDR_API ldr_status ldr_result_write(const ldr_result* result, const char* path, ldr_format format);

/* Number of rows: 1 for equilibrium and abm results, grid points for a
 * sweep, years for a case table. */
LDR_API size_t ldr_result_rows(const ldr_result* result);
/* Numeric field of row `row`, named as in the CSV/JSON output (for example
 * "kappa_star", "mean_x", "rate_percent"). */
LDR_API ldr_status ldr_result_get(const ldr_result* result, const char* field, size_t row, double* out);

/* ---- closed forms ------------------------------------------------------- */

LDR_API ldr_status ldr_success_probability(double a, double phi, double x, double* out);
LDR_API ldr_status ldr_posterior_change_state(double s, double p2, ldr_posterior convention, double* out);
LDR_API ldr_status ldr_info_acquisition_cost(double q, double pi, double* out);
LDR_API ldr_status ldr_partisan_participation_cost(double w, double theta, double* out);

#ifdef __cplusplus
}
#endif

#endif
