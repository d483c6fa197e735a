/* Copyright 2026 The ybx developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* ybx: parametric sparse solutions of the constant Yang-Baxter equation.
 *
 * The library builds, for any side length n, the sparse n^2 x n^2
 * operator family R (and its companion Rhat = R o digit-swap), verifies
 * the braid-form and quantum-form equations exactly or numerically,
 * and analyzes unitarity and the entangling-gate property.
 *
 * Conventions:
 *   - All functions return ybx_status; YBX_OK is 0.  On failure,
 *     ybx_last_error() describes the problem (thread-local storage).
 *   - Out-parameters are written only on YBX_OK.
 *   - char** outputs are heap strings owned by the caller; release them
 *     with ybx_string_free.  Handles are released with the matching
 *     *_free function.  All *_free functions accept NULL.
 *   - Scalars carry either exact Gaussian-rational values or complex
 *     doubles; the two backends never mix inside one computation.
 *   - Property checks (verify/check functions) report a failed property
 *     through *out_passed = 0 with YBX_OK; error codes mean the check
 *     could not run.
 *   - Tolerances are absolute bounds on residual magnitudes.  The exact
 *     backend accepts only tolerance 0.
 */

#ifndef YBX_H
#define YBX_H

#include <stdint.h>

#if defined(YBX_BUILDING_SHARED)
#define YBX_API __attribute__((visibility("default")))
#else
#define YBX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ybx_params ybx_params;
typedef struct ybx_matrix ybx_matrix;

typedef enum ybx_status {
  YBX_OK = 0,
  YBX_ERR_INVALID_ARGUMENT = 1,
  YBX_ERR_PARSE = 2,
  YBX_ERR_BACKEND_MISMATCH = 3,
  YBX_ERR_DIMENSION_MISMATCH = 4,
  YBX_ERR_IO = 5,
  YBX_ERR_LIMIT = 6,
  YBX_ERR_NOT_INVERTIBLE = 7,
  YBX_ERR_INTERNAL = 8
} ybx_status;

typedef enum ybx_backend {
  YBX_BACKEND_EXACT = 0,
  YBX_BACKEND_FLOAT = 1
} ybx_backend;

typedef enum ybx_rhat_method {
  YBX_RHAT_PRODUCT = 0,
  YBX_RHAT_DIRECT = 1
} ybx_rhat_method;

typedef enum ybx_kron_side {
  YBX_KRON_LEFT = 0,  /* I_k (x) M */
  YBX_KRON_RIGHT = 1  /* M (x) I_k */
} ybx_kron_side;

YBX_API const char* ybx_version(void);

/* Message for the most recent failure on this thread; never NULL. */
YBX_API const char* ybx_last_error(void);

YBX_API void ybx_string_free(char* s);

/* ---- parameter sets ---------------------------------------------------- */

/* Deterministic parameter grid for (n, seed): exact draws use single-digit
 * rationals, float draws the complex unit box. */
YBX_API ybx_status ybx_params_random(int64_t n, uint64_t seed, ybx_backend backend,
                                     ybx_params** out);

/* Float parameters satisfying the unitarity residuals by construction. */
YBX_API ybx_status ybx_params_sample_unitary(int64_t n, uint64_t seed, ybx_params** out);

YBX_API ybx_status ybx_params_parse_json(const char* text, ybx_params** out);
YBX_API ybx_status ybx_params_to_json(const ybx_params* p, char** out);
YBX_API ybx_status ybx_params_n(const ybx_params* p, int64_t* out);
YBX_API ybx_status ybx_params_backend(const ybx_params* p, ybx_backend* out);
YBX_API void ybx_params_free(ybx_params* p);

/* ---- operator construction --------------------------------------------- */

/* The parametric n^2 x n^2 solution of the braid-form equation. */
YBX_API ybx_status ybx_build_r(const ybx_params* p, ybx_matrix** out);

/* Digit-swap permutation on n^2 dimensions. */
YBX_API ybx_status ybx_build_s(int64_t n, ybx_backend backend, ybx_matrix** out);

/* Companion solution of the quantum-form equation.  PRODUCT composes
 * build_r with the digit swap; DIRECT places entries on their final
 * positions.  Both must produce identical matrices. */
YBX_API ybx_status ybx_build_rhat(const ybx_params* p, ybx_rhat_method method,
                                  ybx_matrix** out);

/* ---- sparse matrix operations ------------------------------------------ */

YBX_API ybx_status ybx_matrix_dim(const ybx_matrix* m, int64_t* out);
YBX_API ybx_status ybx_matrix_nnz(const ybx_matrix* m, int64_t* out);
YBX_API ybx_status ybx_matrix_backend(const ybx_matrix* m, ybx_backend* out);
YBX_API void ybx_matrix_free(ybx_matrix* m);

/* workers <= 0 picks a small worker count automatically; results are
 * identical for every worker count. */
YBX_API ybx_status ybx_matmul(const ybx_matrix* a, const ybx_matrix* b, int workers,
                              ybx_matrix** out);
YBX_API ybx_status ybx_dagger(const ybx_matrix* m, ybx_matrix** out);
YBX_API ybx_status ybx_kron_identity(const ybx_matrix* m, int64_t k, ybx_kron_side side,
                                     ybx_matrix** out);

/* Max entry magnitude of a - b, as a decimal string for float matrices and
 * an exact rational string for exact matrices. */
YBX_API ybx_status ybx_max_abs_diff(const ybx_matrix* a, const ybx_matrix* b, char** out);

/* *out = 1 when the matrices agree entry-for-entry.  Both operands must
 * share a backend and a dimension. */
YBX_API ybx_status ybx_matrix_equal(const ybx_matrix* a, const ybx_matrix* b, int* out);

/* ---- matrix serialization ---------------------------------------------- */

/* Matrix Market "coordinate complex general"; exact values convert to
 * double.  The JSON form is lossless for both backends. */
YBX_API ybx_status ybx_matrix_to_market(const ybx_matrix* m, char** out);
YBX_API ybx_status ybx_matrix_to_json(const ybx_matrix* m, char** out);
YBX_API ybx_status ybx_matrix_parse_market(const char* text, ybx_matrix** out);
YBX_API ybx_status ybx_matrix_parse_json(const char* text, ybx_matrix** out);

/* ---- verification ------------------------------------------------------ */

/* Each verifier writes *out_passed (0/1) and, when out_report is non-NULL,
 * a JSON report.  tol must be 0 for exact matrices; a negative tol is
 * rejected.  For float matrices, tol < 0 is rejected and 1e-12 is the
 * conventional default supplied by callers. */

/* Braid-form residual of R on n^3 dimensions; m must be n^2 x n^2. */
YBX_API ybx_status ybx_verify_braid(const ybx_matrix* m, int64_t n, double tol, int workers,
                                    int* out_passed, char** out_report);

/* Quantum-form residual of Rhat on n^3 dimensions; m must be n^2 x n^2. */
YBX_API ybx_status ybx_verify_quantum(const ybx_matrix* m, int64_t n, double tol, int workers,
                                      int* out_passed, char** out_report);

/* Defining braid-group relations in the strand representation generated
 * by m.  Fails with YBX_ERR_LIMIT when n^strands exceeds max_dim
 * (pass max_dim <= 0 for the default limit of 4096). */
YBX_API ybx_status ybx_braid_rep_check(const ybx_matrix* m, int64_t n, int64_t strands,
                                       double tol, int workers, int64_t max_dim,
                                       int* out_passed, char** out_report);

/* ---- analysis ----------------------------------------------------------- */

/* Unitarity residuals of the parameter grid. */
YBX_API ybx_status ybx_check_unitary(const ybx_params* p, double tol, int* out_passed,
                                     char** out_report);

/* Tensor-product split test for an n^2 x n^2 matrix.  *out_factored is 1
 * when m = x (x) y; the report carries the witness factors. */
YBX_API ybx_status ybx_tensor_factor(const ybx_matrix* m, int64_t n, double tol,
                                     int* out_factored, char** out_report);

/* Entangling-gate test for the operator family built from p.  Fails with
 * YBX_ERR_NOT_INVERTIBLE when p fails the unitarity residuals, unless
 * assume_invertible is nonzero.  trials <= 0 picks the default witness
 * search budget. */
YBX_API ybx_status ybx_check_entangling(const ybx_params* p, double tol, int64_t trials,
                                        uint64_t seed, int assume_invertible,
                                        int* out_passed, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* YBX_H */
