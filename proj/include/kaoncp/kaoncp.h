// Copyright 2026 The kaoncp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * kaoncp C API.
 *
 * Every fallible call returns a kcp_status; on failure a description is
 * available from kcp_last_error() on the calling thread until the next
 * failing call on that thread. Objects are opaque handles owned by the
 * caller and released with the matching *_destroy function (NULL is
 * accepted). Matrices cross the boundary row-major.
 *
 * States and maps are in the Pauli (Bloch) basis: a 2x2 operator is
 * rho = sum_mu rho^mu sigma_mu with rho^mu = Tr(sigma_mu rho)/2 (4 reals);
 * a two-kaon operator is sum R[mu][nu] sigma_mu (x) sigma_nu with
 * R = Tr((sigma_mu (x) sigma_nu) rho)/4, flattened as 4*mu + nu (16 reals).
 * The kaon basis is |K1> = (1,0), |K2> = (0,1).
 */

#ifndef KAONCP_KAONCP_H
#define KAONCP_KAONCP_H

#include <stddef.h>

#if defined(KAONCP_BUILDING_LIBRARY)
#define KCP_API __attribute__((visibility("default")))
#else
#define KCP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kcp_status {
  KCP_OK = 0,
  KCP_ERR_INVALID_ARGUMENT = 1,
  KCP_ERR_NOT_HERMITIAN = 2,
  KCP_ERR_NOT_POSITIVE = 3,
  KCP_ERR_DOMAIN = 4,
  KCP_ERR_SHAPE = 5,
  KCP_ERR_NULL_POINTER = 6,
  KCP_ERR_INTERNAL = 7
} kcp_status;

typedef enum kcp_provenance {
  KCP_PROVENANCE_IDENTITY = 0,
  KCP_PROVENANCE_CLOSED_FORM = 1,
  KCP_PROVENANCE_EXPONENTIAL = 2,
  KCP_PROVENANCE_TROTTER = 3,
  KCP_PROVENANCE_PRODUCT = 4
} kcp_provenance;

typedef struct kcp_complex {
  double re;
  double im;
} kcp_complex;

/* Dissipative parameters; a, alpha, gamma must be non-negative. */
typedef struct kcp_params {
  double a, b, c, alpha, beta, gamma;
} kcp_params;

#define KCP_NUM_INEQUALITIES 6

typedef struct kcp_inequality_report {
  double margin[KCP_NUM_INEQUALITIES]; /* rhs - lhs */
  int passed[KCP_NUM_INEQUALITIES];
  int all_passed;
  double min_margin;
} kcp_inequality_report;

typedef struct kcp_tau_values {
  double lambda_plus, lambda_minus;
  double A, B, C;
  int degenerate;
} kcp_tau_values;

typedef struct kcp_cp_check {
  int completely_positive;
  double min_choi_eigenvalue;
} kcp_cp_check;

typedef struct kcp_extension_witness_values {
  double value_u, value_v;
  double min_eigenvalue;
} kcp_extension_witness_values;

typedef struct kcp_two_kaon_witness_values {
  double value_u, value_v;
  double closed_form;
} kcp_two_kaon_witness_values;

typedef struct kcp_bound_report {
  double lhs, rhs;
  double rho_minus_trace;
  double min_eigenvalue;
  double trace;
  int holds;
  int degenerate;
} kcp_bound_report;

typedef struct kcp_hamiltonian kcp_hamiltonian;
typedef struct kcp_map kcp_map;

KCP_API const char* kcp_version(void);
KCP_API const char* kcp_last_error(void);
KCP_API const char* kcp_status_string(kcp_status status);

/* ---- effective Hamiltonian ---- */
KCP_API kcp_status kcp_hamiltonian_from_matrix(const kcp_complex h[4],
                                               kcp_hamiltonian** out);
/* H = diag(m_S - i G_S/2, m_L - i G_L/2); K1 is the short-lived mode. */
KCP_API kcp_status kcp_hamiltonian_from_widths(double m_short, double m_long,
                                               double width_short,
                                               double width_long,
                                               kcp_hamiltonian** out);
KCP_API void kcp_hamiltonian_destroy(kcp_hamiltonian* h);
KCP_API kcp_status kcp_hamiltonian_lambda_max(const kcp_hamiltonian* h,
                                              double* out);
KCP_API kcp_status kcp_hamiltonian_width_is_psd(const kcp_hamiltonian* h,
                                                int* out);

/* ---- generators (4x4 Bloch matrices, row-major) ---- */
KCP_API kcp_status kcp_params_validate(const kcp_params* p);
KCP_API const char* kcp_inequality_name(int index);
KCP_API kcp_status kcp_cp_inequalities(const kcp_params* p,
                                       kcp_inequality_report* out);
KCP_API kcp_status kcp_positive_semigroup(const kcp_params* p, int* out);
KCP_API kcp_status kcp_dissipator_matrix(const kcp_params* p, double out[16]);
/* ops: count consecutive row-major 2x2 matrices. */
KCP_API kcp_status kcp_lindblad_dissipator(const kcp_complex* ops,
                                           size_t count, double out[16]);
KCP_API kcp_status kcp_full_generator(const kcp_hamiltonian* h,
                                      const kcp_params* p, double out[16]);

/* ---- evolution maps ---- */
KCP_API kcp_status kcp_tau_coefficients(double alpha, double beta,
                                        double gamma, double t,
                                        kcp_tau_values* out);
KCP_API kcp_status kcp_map_tau(double alpha, double beta, double gamma,
                               double t, kcp_map** out);
/* exp(t G) for a dim x dim real generator (dim 4 or 16). */
KCP_API kcp_status kcp_map_expm(const double* generator, size_t dim, double t,
                                kcp_map** out);
/* exp(t (Weisskopf-Wigner + dissipator)). */
KCP_API kcp_status kcp_map_evolve(const kcp_hamiltonian* h,
                                  const kcp_params* p, double t,
                                  kcp_map** out);
/* Single-kaon (W_{t/n} o T_{t/n})^n with T = exp(t dissipator). */
KCP_API kcp_status kcp_map_trotter(const kcp_hamiltonian* h,
                                   const kcp_params* p, double t, int n,
                                   kcp_map** out);
/* Phi (x) Phi for a single-kaon map. */
KCP_API kcp_status kcp_map_product(const kcp_map* single, kcp_map** out);
KCP_API void kcp_map_destroy(kcp_map* map);
KCP_API size_t kcp_map_dim(const kcp_map* map);
KCP_API double kcp_map_time(const kcp_map* map);
KCP_API kcp_provenance kcp_map_provenance(const kcp_map* map);
KCP_API int kcp_map_trotter_steps(const kcp_map* map);
/* len must equal dim*dim. */
KCP_API kcp_status kcp_map_matrix(const kcp_map* map, double* out, size_t len);
/* len must equal dim. */
KCP_API kcp_status kcp_map_apply(const kcp_map* map, const double* in,
                                 double* out, size_t len);

/* ---- complete-positivity analysis (single-kaon maps) ---- */
/* Row-major 4x4, index 2*output + input. */
KCP_API kcp_status kcp_choi_matrix(const kcp_map* map, kcp_complex out[16]);
KCP_API kcp_status kcp_map_cp_check(const kcp_map* map, kcp_cp_check* out);
/* Writes up to `capacity` Kraus operators (4 entries each) into ops and the
 * full count into *count; capacity 0 with ops NULL queries the count. */
KCP_API kcp_status kcp_kraus_from_map(const kcp_map* map, kcp_complex* ops,
                                      size_t capacity, size_t* count,
                                      double* completeness_defect);
KCP_API kcp_status kcp_extension_witness(const kcp_map* map,
                                         kcp_extension_witness_values* out);

/* ---- two-kaon ---- */
KCP_API kcp_status kcp_singlet_components(double out[16]);
KCP_API kcp_status kcp_two_kaon_witness(double alpha, double beta,
                                        double gamma, double t,
                                        kcp_two_kaon_witness_values* out);
KCP_API kcp_status kcp_trotter_bound(const kcp_hamiltonian* h, double alpha,
                                     double beta, double gamma, double t,
                                     int n, kcp_bound_report* out);

/* Spectrum summary of a state given by 4 (one kaon) or 16 (two kaons)
 * Bloch components. Either output pointer may be NULL. */
KCP_API kcp_status kcp_state_spectrum(const double* components, size_t len,
                                      double* min_eigenvalue,
                                      double* negative_mass);

/* ---- observables, evolved with exp(t full generator) ---- */
KCP_API kcp_status kcp_decay_rate(const kcp_hamiltonian* h,
                                  const kcp_params* p, const double rho0[4],
                                  const kcp_complex op[4], const double* times,
                                  size_t count, double* values);
/* *produced < count when the series was truncated at a vanishing
 * denominator; kcp_last_error() then holds the warning. */
KCP_API kcp_status kcp_asymmetry(const kcp_hamiltonian* h,
                                 const kcp_params* p,
                                 const kcp_complex o_f[4],
                                 const kcp_complex o_fbar[4],
                                 const double* times, size_t count,
                                 double* values, size_t* produced);

#ifdef __cplusplus
}
#endif

#endif /* KAONCP_KAONCP_H */
