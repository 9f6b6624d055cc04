#ifndef RPADE_RPADE_H
#define RPADE_RPADE_H

/*
 * C interface to the Riccati-Pade eigenvalue solver.
 *
 * Objects are opaque handles created by rpade_*_new / rpade_* constructors and
 * released with the matching *_free function. Numbers cross the interface as
 * decimal strings. Strings returned by accessors are owned by the handle and
 * stay valid until the next call on the same handle or until it is freed.
 * Every fallible call returns an rpade_status; rpade_last_error() describes the
 * most recent failure on the calling thread.
 */

#include <stddef.h>

#if defined(_WIN32)
#define RPADE_API __declspec(dllexport)
#else
#define RPADE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rpade_status {
  RPADE_OK = 0,
  RPADE_INVALID_ARGUMENT = 1,
  RPADE_REFINEMENT_FAILURE = 2,
  RPADE_INVALID_CONFIG = 3,
  RPADE_SERIES_LENGTH = 4,
  RPADE_UNSUPPORTED_MODE = 5,
  RPADE_OUT_OF_RANGE = 6,
  RPADE_INTERNAL = 7
} rpade_status;

typedef enum rpade_symmetry { RPADE_EVEN = 0, RPADE_ODD = 1, RPADE_CENTRAL = 2 } rpade_symmetry;

typedef enum rpade_monotone { RPADE_INCREASING = 0, RPADE_DECREASING = 1, RPADE_NOT_MONOTONE = 2 } rpade_monotone;

typedef enum rpade_bound { RPADE_LOWER_BOUND = 0, RPADE_UPPER_BOUND = 1, RPADE_NO_BOUND = 2 } rpade_bound;

typedef enum rpade_classification {
  RPADE_PHYSICAL = 0,
  RPADE_SPURIOUS = 1,
  RPADE_UNKNOWN = 2
} rpade_classification;

typedef enum rpade_format { RPADE_FORMAT_TABLE = 0, RPADE_FORMAT_CSV = 1, RPADE_FORMAT_JSON = 2 } rpade_format;

typedef struct rpade_model rpade_model;
typedef struct rpade_sequence rpade_sequence;
typedef struct rpade_spectrum rpade_spectrum;
typedef struct rpade_config rpade_config;
typedef struct rpade_report rpade_report;

RPADE_API const char* rpade_version(void);
RPADE_API const char* rpade_status_string(rpade_status status);
/* Message for the last failed call on this thread ("" if none). */
RPADE_API const char* rpade_last_error(void);

/* ---- models ---------------------------------------------------------- */

/* a and R are decimal strings ("0.1", "1/10", "2.5e-3"). */
RPADE_API rpade_status rpade_model_bounded(const char* a, const char* R, rpade_model** out);
RPADE_API rpade_status rpade_model_inverted(const char* a, const char* R, rpade_model** out);
RPADE_API rpade_status rpade_model_harmonic(const char* a, rpade_model** out);
RPADE_API void rpade_model_free(rpade_model* model);
/* V_j as an exact fraction "p/q" when the model is exact, else a decimal. */
RPADE_API rpade_status rpade_model_coeff(rpade_model* model, unsigned j, const char** out);
RPADE_API const char* rpade_model_describe(rpade_model* model);

/* ---- determinants ---------------------------------------------------- */

/* H_D^d and dH/dE at trial energy E, both as decimals with `digits` digits. */
RPADE_API rpade_status rpade_hankel_value(rpade_model* model, unsigned s, unsigned D, unsigned d, const char* E,
                                          long precision_bits, unsigned digits, const char** value,
                                          const char** derivative);
/* H_D^d as an exact polynomial in E, highest power first. */
RPADE_API rpade_status rpade_hankel_poly(rpade_model* model, unsigned s, unsigned D, unsigned d, const char** out);

/* ---- root sequences -------------------------------------------------- */

typedef struct rpade_track_options {
  unsigned target_digits;
  long initial_precision_bits;
  long max_precision_bits;
  int stop_when_stable;
  int scan_negative;
  int exact_assist;
} rpade_track_options;

RPADE_API rpade_track_options rpade_track_options_default(void);

RPADE_API rpade_status rpade_track(rpade_model* model, rpade_symmetry symmetry, unsigned l, unsigned state,
                                   unsigned d, unsigned D_min, unsigned D_max, const char* seed,
                                   const rpade_track_options* options, rpade_sequence** out);
RPADE_API void rpade_sequence_free(rpade_sequence* seq);
RPADE_API size_t rpade_sequence_size(const rpade_sequence* seq);
RPADE_API rpade_status rpade_sequence_entry(rpade_sequence* seq, size_t index, unsigned* D, const char** root,
                                            const char** residual);
RPADE_API unsigned rpade_sequence_stable_digits(const rpade_sequence* seq);
/* 0 when no dimension is confirmed stable. */
RPADE_API unsigned rpade_sequence_stable_from(const rpade_sequence* seq);
RPADE_API rpade_monotone rpade_sequence_monotone(const rpade_sequence* seq);
RPADE_API rpade_bound rpade_sequence_bound(const rpade_sequence* seq);
RPADE_API rpade_classification rpade_sequence_classification(const rpade_sequence* seq);
/* NULL when the sequence completed. */
RPADE_API const char* rpade_sequence_failure(const rpade_sequence* seq);
RPADE_API size_t rpade_sequence_missing_count(const rpade_sequence* seq);
RPADE_API unsigned rpade_sequence_missing(const rpade_sequence* seq, size_t index);

/* ---- oracle ---------------------------------------------------------- */

/* basis: "weighted" or "sine". quadrature_order 0 picks the default. */
RPADE_API rpade_status rpade_oracle(rpade_model* model, rpade_symmetry symmetry, unsigned l, unsigned basis_size,
                                    unsigned quadrature_order, long precision_bits, const char* basis,
                                    rpade_spectrum** out);
RPADE_API void rpade_spectrum_free(rpade_spectrum* spectrum);
RPADE_API size_t rpade_spectrum_size(const rpade_spectrum* spectrum);
RPADE_API rpade_status rpade_spectrum_eigenvalue(rpade_spectrum* spectrum, size_t index, unsigned digits,
                                                 const char** out);
/* NULL when the quadrature self-check passed. */
RPADE_API const char* rpade_spectrum_warning(const rpade_spectrum* spectrum);
/* Classification of `value` against the spectrum, relative tolerance tol_rel. */
RPADE_API rpade_status rpade_classify(const rpade_spectrum* spectrum, const char* value, const char* tol_rel,
                                      rpade_classification* out);

/* ---- configured runs ------------------------------------------------- */

RPADE_API rpade_config* rpade_config_new(void);
RPADE_API void rpade_config_free(rpade_config* config);
/* Keys: model a R parity l state d Dmin Dmax digits precision-bits exact
 * scan-negative stop-when-stable seed oracle-basis oracle-size format r2e. */
RPADE_API rpade_status rpade_config_set(rpade_config* config, const char* key, const char* value);
RPADE_API rpade_status rpade_config_validate(const rpade_config* config);
RPADE_API rpade_format rpade_config_format(const rpade_config* config);

/* Runs the configuration. A report is produced for RPADE_OK and for
 * RPADE_REFINEMENT_FAILURE (partial results); *out is NULL otherwise. */
RPADE_API rpade_status rpade_run(const rpade_config* config, rpade_report** out);
RPADE_API void rpade_report_free(rpade_report* report);
/* 0 success, 2 refinement failure. */
RPADE_API int rpade_report_exit_code(const rpade_report* report);
RPADE_API const char* rpade_report_emit(rpade_report* report, rpade_format format);
RPADE_API size_t rpade_report_sequence_count(const rpade_report* report);
/* Borrowed view; valid while the report lives. Roots are in reported units. */
RPADE_API rpade_sequence* rpade_report_sequence(rpade_report* report, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* RPADE_RPADE_H */
