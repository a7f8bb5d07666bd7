/*
   Copyright 2026 The pcanon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the pcanon library. Every object is an opaque handle owned
 * by the caller and released with the matching *_free function. Functions
 * return a status code; on failure pcanon_last_error_message() describes the
 * most recent error of the calling thread. Strings returned through char**
 * are released with pcanon_string_free. */

#ifndef PCANON_H
#define PCANON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PCANON_API __declspec(dllexport)
#else
#define PCANON_API __attribute__((visibility("default")))
#endif

typedef enum pcanon_status {
    PCANON_OK = 0,
    PCANON_MIXED_FIELDS = 1,
    PCANON_NUMERIC_FIELD_UNSUPPORTED = 2,
    PCANON_ZERO_POLYNOMIAL = 3,
    PCANON_NON_MONIC = 4,
    PCANON_DEGREE_ZERO = 5,
    PCANON_NON_SPLIT_FIELD = 6,
    PCANON_NOT_PRIME = 7,
    PCANON_HORIZON_TOO_SMALL = 8,
    PCANON_CHAR_POSITIVE = 9,
    PCANON_NOT_CONJUGATE_SYMMETRIC = 10,
    PCANON_EMPTY_INPUT = 11,
    PCANON_ORDER_TOO_LARGE = 12,
    PCANON_CHARACTERISTIC_MISMATCH = 13,
    PCANON_ANNIHILATOR_MISMATCH = 14,
    PCANON_INSUFFICIENT_DATA = 15,
    PCANON_SINGULAR_MATRIX = 16,
    PCANON_PRINCIPAL_UNDEFINED = 17,
    PCANON_ZERO_LOG_CLASH = 18,
    PCANON_BRANCH_ARITY = 19,
    PCANON_NOT_REAL = 20,
    PCANON_DIMENSION_MISMATCH = 21,
    PCANON_DIVISION_BY_ZERO = 22,
    PCANON_INVALID_ARGUMENT = 23,
    PCANON_PARSE_ERROR = 24,
    PCANON_INTERNAL = 100
} pcanon_status;

typedef enum pcanon_format { PCANON_FORMAT_JSON = 0, PCANON_FORMAT_PRETTY = 1 } pcanon_format;

typedef struct pcanon_context pcanon_context;
typedef struct pcanon_document pcanon_document;
typedef struct pcanon_matrix pcanon_matrix;
typedef struct pcanon_poly pcanon_poly;
typedef struct pcanon_pcf pcanon_pcf;
typedef struct pcanon_expm pcanon_expm;
typedef struct pcanon_lrs pcanon_lrs;

/* Logarithm branch: principal, or one integer per nonzero eigenvalue in
 * (real, imag) order. */
typedef struct pcanon_branch {
    int principal;
    const long long* k;
    size_t count;
} pcanon_branch;

PCANON_API const char* pcanon_version(void);
/* Stable error name, e.g. "NonSplitField"; "Ok" for PCANON_OK. */
PCANON_API const char* pcanon_status_name(pcanon_status status);
PCANON_API const char* pcanon_last_error_message(void);
PCANON_API void pcanon_string_free(char* s);

/* Evaluation settings: numeric tolerance (default 1e-8) and whether exact
 * inputs that do not split may fall back to complex arithmetic. */
PCANON_API pcanon_status pcanon_context_new(pcanon_context** out);
PCANON_API void pcanon_context_free(pcanon_context* ctx);
PCANON_API pcanon_status pcanon_context_set_tolerance(pcanon_context* ctx, double tol);
PCANON_API pcanon_status pcanon_context_set_numeric(pcanon_context* ctx, int enabled);

/* Input documents: {"field": "Q"|"C"|"Fp" (+ "p"), "matrix"|"matrices"|
 * "poly"|"polys"|"sequence": ..., "options": {...}} or a bare array. */
PCANON_API pcanon_status pcanon_document_parse(const char* text, pcanon_document** out);
PCANON_API void pcanon_document_free(pcanon_document* doc);
PCANON_API uint64_t pcanon_document_characteristic(const pcanon_document* doc);
PCANON_API size_t pcanon_document_matrix_count(const pcanon_document* doc);
PCANON_API pcanon_status pcanon_document_matrix(const pcanon_document* doc, size_t i, pcanon_matrix** out);
PCANON_API size_t pcanon_document_poly_count(const pcanon_document* doc);
PCANON_API pcanon_status pcanon_document_poly(const pcanon_document* doc, size_t i, pcanon_poly** out);
PCANON_API pcanon_status pcanon_document_sequence(const pcanon_document* doc, pcanon_lrs** out);

PCANON_API pcanon_status pcanon_matrix_from_json(const char* text, pcanon_matrix** out);
PCANON_API pcanon_status pcanon_matrix_order(const pcanon_matrix* m, size_t* out);
PCANON_API pcanon_status pcanon_matrix_power(const pcanon_matrix* m, uint64_t k, pcanon_matrix** out);
PCANON_API pcanon_status pcanon_matrix_minpoly(const pcanon_context* ctx, const pcanon_matrix* m, pcanon_poly** out);
PCANON_API pcanon_status pcanon_matrix_render(const pcanon_matrix* m, pcanon_format fmt, char** out);
PCANON_API void pcanon_matrix_free(pcanon_matrix* m);

/* Ascending coefficient array; characteristic 0 selects Q, a prime p F_p. */
PCANON_API pcanon_status pcanon_poly_from_array(const char* text, uint64_t characteristic, pcanon_poly** out);
PCANON_API pcanon_status pcanon_poly_degree(const pcanon_poly* p, int* out);
PCANON_API pcanon_status pcanon_poly_render(const pcanon_poly* p, pcanon_format fmt, char** out);
PCANON_API void pcanon_poly_free(pcanon_poly* p);

PCANON_API pcanon_status pcanon_pcf_build(const pcanon_context* ctx, const pcanon_matrix* m, pcanon_pcf** out);
PCANON_API pcanon_status pcanon_pcf_from_json(const char* text, pcanon_pcf** out);
PCANON_API pcanon_status pcanon_pcf_to_gamma(const pcanon_pcf* f, pcanon_pcf** out);
PCANON_API pcanon_status pcanon_pcf_eval(const pcanon_pcf* f, uint64_t k, pcanon_matrix** out);
PCANON_API pcanon_status pcanon_pcf_minpoly(const pcanon_pcf* f, pcanon_poly** out);
/* P-canonical form of the logarithm of the matrix the form describes. */
PCANON_API pcanon_status pcanon_pcf_log(const pcanon_context* ctx, const pcanon_pcf* f, const pcanon_branch* branch,
                                        pcanon_pcf** out);
/* `source` may be NULL; when given, coefficient matrices equal to it print as A. */
PCANON_API pcanon_status pcanon_pcf_render(const pcanon_pcf* f, const pcanon_matrix* source, pcanon_format fmt,
                                           char** out);
/* Realifies (conjugate pairs merged into cos/sin terms) and renders. */
PCANON_API pcanon_status pcanon_pcf_render_real(const pcanon_context* ctx, const pcanon_pcf* f,
                                                const pcanon_matrix* source, pcanon_format fmt, char** out);
PCANON_API void pcanon_pcf_free(pcanon_pcf* f);

/* Closed-form e^{tA}; `real` selects the cos/sin variant for real matrices. */
PCANON_API pcanon_status pcanon_expm_build(const pcanon_context* ctx, const pcanon_matrix* m, int real,
                                           pcanon_expm** out);
PCANON_API pcanon_status pcanon_expm_eval(const pcanon_expm* e, double t_re, double t_im, pcanon_matrix** out);
PCANON_API pcanon_status pcanon_expm_render(const pcanon_expm* e, const pcanon_matrix* source, pcanon_format fmt,
                                            char** out);
PCANON_API void pcanon_expm_free(pcanon_expm* e);

PCANON_API pcanon_status pcanon_logm(const pcanon_context* ctx, const pcanon_matrix* m, const pcanon_branch* branch,
                                     pcanon_matrix** out);

/* Minimal polynomial of the Kronecker product of the matrices, from their
 * factored minimal polynomials (direct = 0) or from the explicit product. */
PCANON_API pcanon_status pcanon_kron_minpoly(const pcanon_context* ctx, const pcanon_matrix* const* mats, size_t count,
                                             int direct, pcanon_poly** out);
/* P with L(P_1)...L(P_m) = L(P). */
PCANON_API pcanon_status pcanon_lrs_product_poly(const pcanon_context* ctx, const pcanon_poly* const* polys,
                                                 size_t count, pcanon_poly** out);

PCANON_API pcanon_status pcanon_lrs_eval(const pcanon_lrs* s, uint64_t n, pcanon_format fmt, char** out);
PCANON_API pcanon_status pcanon_lrs_render(const pcanon_lrs* s, size_t terms, pcanon_format fmt, char** out);
PCANON_API void pcanon_lrs_free(pcanon_lrs* s);

/* characteristic: 0 or a prime. */
PCANON_API pcanon_status pcanon_wedge(uint64_t s, uint64_t t, uint64_t characteristic, uint64_t* out);
PCANON_API pcanon_status pcanon_wedge_lambda(uint64_t t, uint64_t s, int lambda_is_zero, uint64_t* out);
PCANON_API pcanon_status pcanon_wedge_oracle(uint64_t s, uint64_t t, uint64_t characteristic, uint64_t horizon,
                                             uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
