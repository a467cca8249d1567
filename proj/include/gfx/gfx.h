// Copyright 2026 The gfx Authors
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

#ifndef GFX_GFX_H_
#define GFX_GFX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GFX_BUILDING_LIBRARY)
#define GFX_API __declspec(dllexport)
#else
#define GFX_API __declspec(dllimport)
#endif
#else
#define GFX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gfx_status {
  GFX_OK = 0,
  GFX_INVALID_ARGUMENT = 1,
  GFX_NOT_PRIME_POWER = 2,
  GFX_UNSUPPORTED = 3,
  GFX_DIVISION_BY_ZERO = 4,
  GFX_INDEX_OUT_OF_RANGE = 5,
  GFX_FIELD_MISMATCH = 6,
  GFX_PROFILE_TOO_HEAVY = 7,
  GFX_NOT_A_DOWNSET = 8,
  GFX_LENGTH_MISMATCH = 9,
  GFX_BUDGET_EXCEEDED = 10,
  GFX_NOT_EXHAUSTIVE = 11,
  GFX_PARSE = 12,
  GFX_VERIFICATION_FAILED = 13,
  GFX_INTERNAL = 14
} gfx_status;

typedef struct gfx_field gfx_field;
typedef struct gfx_matrix gfx_matrix;

GFX_API const char* gfx_version(void);
GFX_API const char* gfx_status_string(gfx_status status);
/* Message for the last failing call on this thread; empty after success. */
GFX_API const char* gfx_last_error(void);
/* Releases strings returned through char** out-parameters. */
GFX_API void gfx_string_free(char* s);

/* Fields. Elements are integer indices 0..q-1. */
GFX_API gfx_status gfx_field_create(int q, gfx_field** out);
GFX_API void gfx_field_destroy(gfx_field* f);
GFX_API int gfx_field_order(const gfx_field* f);
GFX_API int gfx_field_characteristic(const gfx_field* f);
GFX_API gfx_status gfx_field_add(const gfx_field* f, unsigned a, unsigned b, unsigned* out);
GFX_API gfx_status gfx_field_mul(const gfx_field* f, unsigned a, unsigned b, unsigned* out);
GFX_API gfx_status gfx_field_neg(const gfx_field* f, unsigned a, unsigned* out);
GFX_API gfx_status gfx_field_inv(const gfx_field* f, unsigned a, unsigned* out);

/* Matrices. `entries` is row-major and may be NULL for a zero matrix. */
GFX_API gfx_status gfx_matrix_create(const gfx_field* f, size_t rows, size_t cols, const uint8_t* entries,
                                     gfx_matrix** out);
GFX_API gfx_status gfx_matrix_from_json(const char* json, gfx_matrix** out);
GFX_API gfx_status gfx_matrix_to_json(const gfx_matrix* m, char** out);
GFX_API void gfx_matrix_destroy(gfx_matrix* m);
GFX_API size_t gfx_matrix_rows(const gfx_matrix* m);
GFX_API size_t gfx_matrix_cols(const gfx_matrix* m);
GFX_API int gfx_matrix_order(const gfx_matrix* m);
GFX_API gfx_status gfx_matrix_get(const gfx_matrix* m, size_t row, size_t col, uint8_t* out);
GFX_API gfx_status gfx_matrix_rank(const gfx_matrix* m, size_t* out);
/* Rank after appending an all-ones row. */
GFX_API gfx_status gfx_matrix_arank(const gfx_matrix* m, size_t* out);

/* JSON-request entry points. Results are allocated strings. */
GFX_API gfx_status gfx_formula(const char* request, char** result);
GFX_API gfx_status gfx_construct(const char* request, gfx_matrix** matrix, char** report);
GFX_API gfx_status gfx_certify(const gfx_matrix* m, const char* params, char** report);
GFX_API gfx_status gfx_oracle(const char* request, char** result);
/* CSV over r_values x k_values. */
GFX_API gfx_status gfx_oracle_sweep(const char* request, char** csv);
/* Returns GFX_VERIFICATION_FAILED when a check fails; `report` is still set. */
GFX_API gfx_status gfx_verify(const char* request, char** report);
GFX_API gfx_status gfx_tables(const char* request, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* GFX_GFX_H_ */
