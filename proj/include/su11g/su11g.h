/*
 * Copyright 2026 The su11g Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the su(1,1)_gamma oscillator library. All handles are
 * opaque; every fallible call returns an su11g_status and leaves a message
 * for su11g_last_error() on the calling thread. */
#ifndef SU11G_SU11G_H
#define SU11G_SU11G_H

#include <stddef.h>

#if defined(SU11G_BUILDING_LIBRARY)
#define SU11G_API __attribute__((visibility("default")))
#else
#define SU11G_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum su11g_status {
  SU11G_OK = 0,
  SU11G_ERR_DOMAIN = 1,
  SU11G_ERR_POLE = 2,
  SU11G_ERR_DIMENSION = 3,
  SU11G_ERR_CONVERGENCE = 4,
  SU11G_ERR_IO = 5,
  SU11G_ERR_INVALID_ARGUMENT = 6,
  SU11G_ERR_INTERNAL = 7
} su11g_status;

typedef enum su11g_operator_kind {
  SU11G_OP_R = 0,
  SU11G_OP_J0 = 1,
  SU11G_OP_JPLUS = 2,
  SU11G_OP_JMINUS = 3,
  SU11G_OP_Q = 4,
  SU11G_OP_P = 5,
  SU11G_OP_H = 6
} su11g_operator_kind;

typedef enum su11g_family {
  SU11G_FAMILY_PSI = 0,
  SU11G_FAMILY_PHI_MP = 1,
  SU11G_FAMILY_PARABOSON = 2
} su11g_family;

typedef struct su11g_params su11g_params;
typedef struct su11g_operator su11g_operator;
typedef struct su11g_report_set su11g_report_set;

/* Message of the last failed call on this thread; empty if none. */
SU11G_API const char* su11g_last_error(void);
SU11G_API const char* su11g_status_string(su11g_status status);

/* --- special functions --- */
SU11G_API su11g_status su11g_ln_gamma(double re, double im, double* out_re, double* out_im);
SU11G_API su11g_status su11g_abs_gamma_sq(double re, double im, double* out);
SU11G_API su11g_status su11g_cdh(int n, double x2, double a, double b, double c, double* out);

/* --- parameters --- */
SU11G_API su11g_status su11g_params_create(double a, double c, double b, su11g_params** out);
SU11G_API void su11g_params_destroy(su11g_params* params);
SU11G_API double su11g_params_gamma(const su11g_params* params);
SU11G_API int su11g_params_physically_acceptable(const su11g_params* params);
/* Writes up to `capacity` (lo, hi) pairs; *count receives the number of intervals. */
SU11G_API su11g_status su11g_allowed_a_intervals(double gamma, double* lo, double* hi, size_t capacity,
                                                 size_t* count);

/* --- wave functions --- */
SU11G_API su11g_status su11g_weight(const su11g_params* params, double x, double* out);
SU11G_API su11g_status su11g_psi(const su11g_params* params, int n, double x, double* out);
/* out must hold nmax + 1 values. */
SU11G_API su11g_status su11g_psi_vector(const su11g_params* params, int nmax, double x, double* out);
SU11G_API su11g_status su11g_phi_mp(int n, double x, double a, double* out);
SU11G_API su11g_status su11g_psi_paraboson(int n, double xi, double a, double* out);
/* Level-major table of one family: out[n * grid_size + k] = f_n(grid[k]). */
SU11G_API su11g_status su11g_tabulate(const su11g_params* params, su11g_family family, int nmax, const double* grid,
                                      size_t grid_size, double* out);

/* --- operators and spectra --- */
SU11G_API su11g_status su11g_operator_build(const su11g_params* params, su11g_operator_kind kind, int dim,
                                            su11g_operator** out);
SU11G_API void su11g_operator_destroy(su11g_operator* op);
SU11G_API int su11g_operator_dim(const su11g_operator* op);
SU11G_API su11g_status su11g_operator_entry(const su11g_operator* op, int row, int col, double* re, double* im);
/* Ascending eigenvalues of the dim x dim truncated position operator; out holds dim values. */
SU11G_API su11g_status su11g_q_eigenvalues(const su11g_params* params, int dim, double* out);

/* --- verification --- */
/* Row-major (nmax+1)^2 Gram matrix; *max_deviation receives max |G - I|. Either output may be NULL. */
SU11G_API su11g_status su11g_gram(const su11g_params* params, int nmax, double* matrix, double* max_deviation);

typedef struct su11g_verify_options {
  int nmax;
  double gram_tolerance;
  int parallel;
} su11g_verify_options;

SU11G_API su11g_verify_options su11g_verify_default_options(void);
SU11G_API su11g_status su11g_verify(const su11g_params* params, const su11g_verify_options* options,
                                    su11g_report_set** out);
SU11G_API void su11g_report_set_destroy(su11g_report_set* set);
SU11G_API int su11g_report_set_passed(const su11g_report_set* set);
/* The JSON document; owned by the set. */
SU11G_API const char* su11g_report_set_json(const su11g_report_set* set);
SU11G_API size_t su11g_report_set_failed_count(const su11g_report_set* set);
/* check_id of the i-th failed report; NULL when out of range. Owned by the set. */
SU11G_API const char* su11g_report_set_failed_id(const su11g_report_set* set, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* SU11G_SU11G_H */
