/* C interface to the similitude library. All handles are opaque; every call
 * that can fail returns a sim_status and leaves a message for
 * sim_last_error() on the calling thread. */
#ifndef SIMILITUDE_H
#define SIMILITUDE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SIM_API __declspec(dllexport)
#else
#define SIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sim_status {
  SIM_OK = 0,
  SIM_ERR_INVALID_ARGUMENT = 1,
  SIM_ERR_OVERFLOW,
  SIM_ERR_NOT_PRIME,
  SIM_ERR_UNSUPPORTED_RING,
  SIM_ERR_ZERO_ELEMENT,
  SIM_ERR_RING_MISMATCH,
  SIM_ERR_UNSUPPORTED_ORDER,
  SIM_ERR_NOT_SUBMODULE,
  SIM_ERR_LENGTH_MISMATCH,
  SIM_ERR_NON_INVERTIBLE,
  SIM_ERR_BAD_NORMALIZATION,
  SIM_ERR_DOMAIN_ERROR,
  SIM_ERR_CROSS_CHECK_FAILURE,
  SIM_ERR_BOUND_EXCEEDED,
  SIM_ERR_NOT_A_SUBLATTICE,
  SIM_ERR_NON_SQUARE_INDEX,
  SIM_ERR_NOT_REPRESENTABLE,
  SIM_ERR_UNKNOWN_CONSTANT,
  SIM_ERR_DEGENERATE_MODEL,
  SIM_ERR_INTERNAL
} sim_status;

typedef enum sim_index_kind { SIM_INDEX_SQUARE = 0, SIM_INDEX_LINEAR = 1 } sim_index_kind;

SIM_API const char* sim_status_string(sim_status status);
/* Message of the last failed call on this thread; "" if none. */
SIM_API const char* sim_last_error(void);

/* Bounds enforced by the oracle entry points. */
SIM_API uint64_t sim_sublattice_index_bound(void);
SIM_API uint64_t sim_icosian_index_bound(void);

/* ---- coefficient series ------------------------------------------------ */

typedef struct sim_series sim_series;

/* Target names: f_j f_z4 f_i f_k zeta_j zeta_i zeta_k dedekind_tau
 * dedekind_sqrt2 riemann. Coefficients for m = 1..n_terms, built by the
 * closed forms and checked against the Dirichlet-series identities. */
SIM_API sim_status sim_series_build(const char* target, size_t n_terms, sim_series** out);
SIM_API size_t sim_series_length(const sim_series* series);
SIM_API const char* sim_series_target(const sim_series* series);
SIM_API sim_index_kind sim_series_index_kind(const sim_series* series);
/* Coefficient at m (1-based). */
SIM_API sim_status sim_series_coeff(const sim_series* series, size_t m, int64_t* value);
SIM_API void sim_series_free(sim_series* series);

/* ---- verification report ----------------------------------------------- */

typedef struct sim_report sim_report;

SIM_API sim_status sim_verify(const char* target, size_t n_terms, sim_report** out);
SIM_API size_t sim_report_size(const sim_report* report);
SIM_API const char* sim_report_name(const sim_report* report, size_t i);
SIM_API const char* sim_report_detail(const sim_report* report, size_t i);
SIM_API int sim_report_passed(const sim_report* report, size_t i);
/* Informational items never affect sim_report_all_passed. */
SIM_API int sim_report_informational(const sim_report* report, size_t i);
SIM_API int sim_report_all_passed(const sim_report* report);
SIM_API void sim_report_free(sim_report* report);

/* ---- brute-force oracle ------------------------------------------------ */

/* lattice: "z4" or "d4star". Counts similarity sublattices of index m^2 by
 * enumeration, and returns the closed-form count alongside. */
SIM_API sim_status sim_oracle_lattice(const char* lattice, uint64_t m, unsigned threads, uint64_t* oracle_count,
                                      uint64_t* formula_count);

typedef struct sim_icosian_summary {
  uint64_t m;
  uint64_t total;
  uint64_t left;
  uint64_t right;
  uint64_t two_sided;
  uint64_t generic;
  uint64_t formula;
  uint64_t elements;
  /* 1 when every module was hit by a multiple of 120 pairs. */
  int pair_counts_divisible;
} sim_icosian_summary;

SIM_API sim_status sim_oracle_icosian(uint64_t m, unsigned threads, sim_icosian_summary* out);

/* ---- constants ----------------------------------------------------------- */

SIM_API size_t sim_constant_count(void);
SIM_API sim_status sim_constant_info(size_t i, const char** name, const char** closed_form, double* value,
                                     int* informational);
SIM_API sim_status sim_constant_value(const char* name, double* value);
/* Empirical value from n_terms coefficients: the growth-law ratio at
 * n_terms, or the truncated (tail-corrected) sum for zeta values. */
SIM_API sim_status sim_constant_estimate(const char* name, size_t n_terms, double* estimate);

#ifdef __cplusplus
}
#endif

#endif
