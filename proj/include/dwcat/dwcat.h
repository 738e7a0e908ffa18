/*
 * dwcat: parity interferometry with the ground state of a double-well
 * Bose-Einstein condensate.
 *
 * Plain C interface to the C++ core. All objects are opaque handles created by
 * a dwcat_*_create / dwcat_* function and released with the matching
 * dwcat_*_free. Every fallible call returns a dwcat_status; on failure the
 * message is available from dwcat_last_error() on the calling thread until the
 * next failing call on that thread.
 *
 * Units: angular frequencies with hbar = 1. Angles in radians.
 */
#ifndef DWCAT_H
#define DWCAT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DWCAT_BUILDING_LIBRARY)
#    define DWCAT_API __declspec(dllexport)
#  else
#    define DWCAT_API __declspec(dllimport)
#  endif
#else
#  define DWCAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dwcat_status {
  DWCAT_OK = 0,
  DWCAT_ERR_DOMAIN = 1,    /* parameter outside the model's domain */
  DWCAT_ERR_DIMENSION = 2, /* mismatched sizes or out-of-range index */
  DWCAT_ERR_NUMERICAL = 3, /* solver did not converge, or similar */
  DWCAT_ERR_NULL = 4,      /* required pointer argument was NULL */
  DWCAT_ERR_INTERNAL = 5   /* anything else */
} dwcat_status;

typedef enum dwcat_sector {
  DWCAT_SECTOR_SYMMETRIC = 0,
  DWCAT_SECTOR_ANTISYMMETRIC = 1,
  DWCAT_SECTOR_NONE = 2 /* detuning != 0, swap symmetry broken */
} dwcat_sector;

typedef enum dwcat_sigma_flag {
  DWCAT_SIGMA_OK = 0,
  DWCAT_SIGMA_LIMIT = 1,   /* 0/0 resolved by symmetric offsets */
  DWCAT_SIGMA_SINGULAR = 2 /* derivative vanishes alone; sigma_theta = +inf */
} dwcat_sigma_flag;

typedef struct dwcat_model_params {
  int atoms;          /* N >= 2 */
  double tunneling;   /* J */
  double interaction; /* U, attractive when negative */
  double detuning;    /* eps */
} dwcat_model_params;

typedef struct dwcat_scan_row {
  double theta;
  double parity;
  double sigma_parity;
  double parity_deriv;
  double sigma_theta;
  double precision_norm;
  dwcat_sigma_flag flag;
} dwcat_scan_row;

typedef struct dwcat_gap_row {
  int atoms;
  double chi; /* +inf for the non-interacting column */
  double interaction;
  double e0;
  double e1;
  double gap;
  int underflow; /* nonzero when gap < 1e-13 |E0| */
} dwcat_gap_row;

typedef struct dwcat_state dwcat_state;
typedef struct dwcat_ground dwcat_ground;
typedef struct dwcat_scan dwcat_scan;
typedef struct dwcat_gap_table dwcat_gap_table;
typedef struct dwcat_report dwcat_report;

DWCAT_API const char* dwcat_version(void);
DWCAT_API const char* dwcat_last_error(void);
DWCAT_API const char* dwcat_status_string(dwcat_status status);

/* ---- states ------------------------------------------------------------ */

/* (|N,0> + e^{i phi} |0,N>) / sqrt(2) */
DWCAT_API dwcat_status dwcat_state_cat(int atoms, double phi, dwcat_state** out);
/* Arbitrary state from interleaved (re, im) pairs, 2*(atoms+1) doubles.
 * The vector is normalized on the way in. */
DWCAT_API dwcat_status dwcat_state_from_amplitudes(int atoms, const double* re_im,
                                                   dwcat_state** out);
DWCAT_API int dwcat_state_atoms(const dwcat_state* state);
/* Writes 2*(atoms+1) doubles. */
DWCAT_API dwcat_status dwcat_state_amplitudes(const dwcat_state* state, double* re_im,
                                              size_t capacity);
DWCAT_API void dwcat_state_free(dwcat_state* state);

/* ---- model ------------------------------------------------------------- */

DWCAT_API dwcat_status dwcat_ground_state(const dwcat_model_params* params, dwcat_ground** out);
DWCAT_API double dwcat_ground_e0(const dwcat_ground* g);
DWCAT_API double dwcat_ground_e1(const dwcat_ground* g);
DWCAT_API double dwcat_ground_gap(const dwcat_ground* g);
DWCAT_API dwcat_sector dwcat_ground_sector(const dwcat_ground* g, int level);
/* New handle owning a copy of psi0 (level 0) or psi1 (level 1). */
DWCAT_API dwcat_status dwcat_ground_state_vector(const dwcat_ground* g, int level,
                                                 dwcat_state** out);
DWCAT_API void dwcat_ground_free(dwcat_ground* g);

/* J^2 / (N U^2). Sets *is_infinite to 1 (and *chi to +inf) when U == 0. */
DWCAT_API dwcat_status dwcat_chi(const dwcat_model_params* params, double* chi,
                                 int* is_infinite);
DWCAT_API dwcat_status dwcat_collapse_atom_bound(double trap_frequency, double tunneling,
                                                 double* out);

/* ---- interferometry ---------------------------------------------------- */

/* One row per theta. thetas must be strictly ascending. */
DWCAT_API dwcat_status dwcat_scan_state(const dwcat_state* psi0, const double* thetas,
                                        size_t count, dwcat_scan** out);
/* Equal-weight mixture of the symmetric and antisymmetric cats. */
DWCAT_API dwcat_status dwcat_scan_thermal(int atoms, const double* thetas, size_t count,
                                          dwcat_scan** out);
DWCAT_API size_t dwcat_scan_size(const dwcat_scan* scan);
DWCAT_API dwcat_status dwcat_scan_get(const dwcat_scan* scan, size_t index,
                                      dwcat_scan_row* row);
DWCAT_API void dwcat_scan_free(dwcat_scan* scan);

DWCAT_API dwcat_status dwcat_analytic_cat_parity(int atoms, double theta, double* out);
DWCAT_API dwcat_status dwcat_perturbative_parity(const dwcat_model_params* params, double theta,
                                                 double* out);

/* `count` evenly spaced points from start to stop inclusive, written to out. */
DWCAT_API dwcat_status dwcat_linear_grid(double start, double stop, size_t count, double* out);
/* 10^log10_start ... 10^log10_stop, evenly spaced in the exponent. */
DWCAT_API dwcat_status dwcat_log_grid(double log10_start, double log10_stop, size_t count,
                                      double* out);

/* ---- gap sweeps -------------------------------------------------------- */

/* chis may contain +INFINITY for the non-interacting limit. */
DWCAT_API dwcat_status dwcat_gap_scan(const int* atom_counts, size_t n_atoms,
                                      const double* chis, size_t n_chis, double tunneling,
                                      dwcat_gap_table** out);
DWCAT_API size_t dwcat_gap_table_size(const dwcat_gap_table* table);
DWCAT_API dwcat_status dwcat_gap_table_get(const dwcat_gap_table* table, size_t index,
                                           dwcat_gap_row* row);
DWCAT_API void dwcat_gap_table_free(dwcat_gap_table* table);

/* ---- self checks ------------------------------------------------------- */

#define DWCAT_VERIFY_QUICK 0x1u
#define DWCAT_VERIFY_INJECT_SY_SIGN 0x2u

typedef void (*dwcat_check_callback)(const char* name, int passed, const char* detail,
                                     double seconds, void* user);

DWCAT_API dwcat_status dwcat_verify(unsigned flags, dwcat_check_callback callback, void* user,
                                    dwcat_report** out);
DWCAT_API size_t dwcat_report_size(const dwcat_report* report);
DWCAT_API int dwcat_report_all_passed(const dwcat_report* report);
DWCAT_API const char* dwcat_report_name(const dwcat_report* report, size_t index);
DWCAT_API int dwcat_report_passed(const dwcat_report* report, size_t index);
DWCAT_API const char* dwcat_report_detail(const dwcat_report* report, size_t index);
DWCAT_API void dwcat_report_free(dwcat_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DWCAT_H */
