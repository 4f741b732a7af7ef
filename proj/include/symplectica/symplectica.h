// Copyright 2026 The Symplectica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the symplectica library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Functions that can fail return sym_status; on
 * failure sym_last_error() describes the problem for the calling thread.
 * Matrices are exchanged in row-major order. Handles returned through
 * accessors (for example sym_decoupling_result) are owned by their parent
 * and stay valid until the parent is freed.
 */
#ifndef SYMPLECTICA_SYMPLECTICA_H
#define SYMPLECTICA_SYMPLECTICA_H

#include <stddef.h>
#include <stdint.h>

#if defined(SYMPLECTICA_BUILDING_LIBRARY)
#define SYM_API __attribute__((visibility("default")))
#else
#define SYM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sym_status {
  SYM_OK = 0,
  SYM_ERR_COMPLEX_EIGENVALUES = 2,
  SYM_ERR_NO_CONVERGENCE = 3,
  SYM_ERR_PARSE = 4,
  SYM_ERR_DIMENSION_ODD = 5,
  SYM_ERR_DIMENSION_MISMATCH = 6,
  SYM_ERR_DIMENSION_TOO_SMALL = 7,
  SYM_ERR_NOT_HAMILTONIAN = 8,
  SYM_ERR_NOT_SYMPLECTIC = 9,
  SYM_ERR_BAD_GENERATOR = 10,
  SYM_ERR_BAD_EMBEDDING = 11,
  SYM_ERR_HYPERBOLIC_OVERFLOW = 12,
  SYM_ERR_HYPERBOLIC_BLOCK = 13,
  SYM_ERR_LOG_BRANCH = 14,
  SYM_ERR_UNSTABLE_LATTICE = 15,
  SYM_ERR_INVALID_ARGUMENT = 16,
  SYM_ERR_SELFTEST_FAILURE = 17,
  SYM_ERR_IO = 18,
  SYM_ERR_INTERNAL = 70
} sym_status;

typedef enum sym_eigen_class {
  SYM_ELLIPTIC = 0,
  SYM_HYPERBOLIC = 1,
  SYM_DEGENERATE = 2
} sym_eigen_class;

typedef struct sym_matrix sym_matrix;
typedef struct sym_decoupling sym_decoupling;
typedef struct sym_spectrum sym_spectrum;
typedef struct sym_normal_form sym_normal_form;
typedef struct sym_matched_beam sym_matched_beam;
typedef struct sym_selftest sym_selftest;

SYM_API const char* sym_version(void);
SYM_API const char* sym_status_name(sym_status status);
/* Message of the last failed call on this thread, "" if none. */
SYM_API const char* sym_last_error(void);

/* ---- matrices ---- */

/* values may be NULL for a zero matrix. */
SYM_API sym_status sym_matrix_new(size_t rows, size_t cols, const double* values, sym_matrix** out);
SYM_API sym_status sym_matrix_parse(const char* text, sym_matrix** out);
SYM_API sym_status sym_matrix_read(const char* path, sym_matrix** out);
SYM_API sym_status sym_matrix_write(const sym_matrix* m, const char* path);
/* 17 significant digits per entry. Release with sym_string_free. */
SYM_API char* sym_matrix_format(const sym_matrix* m);
SYM_API void sym_string_free(char* s);
SYM_API void sym_matrix_free(sym_matrix* m);
SYM_API size_t sym_matrix_rows(const sym_matrix* m);
SYM_API size_t sym_matrix_cols(const sym_matrix* m);
SYM_API double sym_matrix_get(const sym_matrix* m, size_t row, size_t col);
SYM_API sym_status sym_matrix_copy_to(const sym_matrix* m, double* out, size_t capacity);

/* ---- structure ---- */

typedef struct sym_structure {
  int hamiltonian;
  int skew_hamiltonian;
  int symplectic;
  double hamiltonian_residual;
  double skew_hamiltonian_residual;
  double symplectic_residual;
} sym_structure;

SYM_API sym_status sym_check_structure(const sym_matrix* m, double tolerance, sym_structure* out);
/* Coefficients m_k = Tr(gamma_k^T M) / 4 of a 4x4 matrix, k = 0..15. */
SYM_API sym_status sym_dirac_coefficients(const sym_matrix* m, double out[16]);
/* 4x4 exp(gamma_k tau / 2), k = 0..9. */
SYM_API sym_status sym_generator(int k, double tau, sym_matrix** out);

/* ---- block-diagonalization ---- */

typedef struct sym_decouple_options {
  int strategy;     /* 1 or 2 */
  double tolerance; /* relative off-block residual */
  long max_steps;   /* 0 selects 64 n^2 */
} sym_decouple_options;

SYM_API void sym_decouple_options_init(sym_decouple_options* options);

/* options may be NULL for the defaults. */
SYM_API sym_status sym_decouple(const sym_matrix* m, const sym_decouple_options* options,
                                sym_decoupling** out);
SYM_API const sym_matrix* sym_decoupling_result(const sym_decoupling* d);
SYM_API const sym_matrix* sym_decoupling_transform(const sym_decoupling* d);
SYM_API const sym_matrix* sym_decoupling_inverse(const sym_decoupling* d);
SYM_API long sym_decoupling_steps(const sym_decoupling* d);
SYM_API long sym_decoupling_skipped_pairs(const sym_decoupling* d);
/* 1 for skew-Hamiltonian input, 0 for Hamiltonian. */
SYM_API int sym_decoupling_skew(const sym_decoupling* d);
SYM_API double sym_decoupling_residual(const sym_decoupling* d);
SYM_API size_t sym_decoupling_history_size(const sym_decoupling* d);
SYM_API double sym_decoupling_history(const sym_decoupling* d, size_t i);
SYM_API void sym_decoupling_free(sym_decoupling* d);

/* ---- spectra and normal forms ---- */

typedef struct sym_eigenpair {
  double re;
  double im;
  double omega;
  sym_eigen_class cls;
} sym_eigenpair;

/* Pairs +-(re + i im), sorted by descending omega. */
SYM_API sym_status sym_eigenvalues(const sym_matrix* h, const sym_decouple_options* options,
                                   sym_spectrum** out);
SYM_API size_t sym_spectrum_size(const sym_spectrum* s);
SYM_API sym_status sym_spectrum_get(const sym_spectrum* s, size_t i, sym_eigenpair* out);
SYM_API void sym_spectrum_free(sym_spectrum* s);

/* K1 = Tr(H^2)/4 and K2 = Tr(H^4)/16 - K1^2/4 of a 4x4 matrix. */
SYM_API sym_status sym_invariants4(const sym_matrix* h, double* k1, double* k2);

typedef struct sym_block_form {
  double omega;
  sym_eigen_class cls;
  int extension; /* 1 for the hyperbolic boost form omega * eta1 */
} sym_block_form;

SYM_API sym_status sym_normal_form_compute(const sym_matrix* h, const sym_decouple_options* options,
                                           sym_normal_form** out);
SYM_API const sym_matrix* sym_normal_form_result(const sym_normal_form* nf);
SYM_API const sym_matrix* sym_normal_form_transform(const sym_normal_form* nf);
SYM_API const sym_matrix* sym_normal_form_inverse(const sym_normal_form* nf);
SYM_API size_t sym_normal_form_blocks(const sym_normal_form* nf);
SYM_API sym_status sym_normal_form_block(const sym_normal_form* nf, size_t i, sym_block_form* out);
SYM_API long sym_normal_form_steps(const sym_normal_form* nf);
SYM_API void sym_normal_form_free(sym_normal_form* nf);

SYM_API sym_status sym_exp(const sym_matrix* h, const sym_decouple_options* options, sym_matrix** out);
SYM_API sym_status sym_log(const sym_matrix* m, const sym_decouple_options* options, sym_matrix** out);

/* ---- beams ---- */

SYM_API sym_status sym_matched_sigma(const sym_matrix* transfer, const double* emittances, size_t count,
                                     const sym_decouple_options* options, sym_matched_beam** out);
SYM_API const sym_matrix* sym_matched_sigma_matrix(const sym_matched_beam* beam);
SYM_API const sym_matrix* sym_matched_s_matrix(const sym_matched_beam* beam);
SYM_API const sym_matrix* sym_matched_transform(const sym_matched_beam* beam);
SYM_API const sym_matrix* sym_matched_inverse(const sym_matched_beam* beam);
/* Emittance and phase advance of normal-coordinate pair i. */
SYM_API double sym_matched_emittance(const sym_matched_beam* beam, size_t i);
SYM_API double sym_matched_phase_advance(const sym_matched_beam* beam, size_t i);
/* count x 2n matrix of phase-space points. */
SYM_API sym_status sym_sample_matched(const sym_matched_beam* beam, size_t count, uint64_t seed,
                                      sym_matrix** out);
SYM_API void sym_matched_free(sym_matched_beam* beam);

/* ---- table self-test ---- */

SYM_API sym_status sym_selftest_run(double tau, double tolerance, sym_selftest** out);
SYM_API size_t sym_selftest_size(const sym_selftest* t);
SYM_API size_t sym_selftest_failures(const sym_selftest* t);
/* Cells of one table: "classification", "rotations", "boosts", "scalar-products". */
SYM_API size_t sym_selftest_count(const sym_selftest* t, const char* table);
SYM_API sym_status sym_selftest_cell(const sym_selftest* t, size_t i, const char** table, const char** label,
                                     int* pass, double* error);
SYM_API void sym_selftest_free(sym_selftest* t);

#ifdef __cplusplus
}
#endif

#endif /* SYMPLECTICA_SYMPLECTICA_H */
