// Copyright 2026 The lucasmagic Authors
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

/* C interface to the lucasmagic library. Every function returns a status
 * code; on failure lucas_last_error() describes the problem. Strings
 * returned through char** are owned by the caller and released with
 * lucas_string_free. Parameter strings use "c,v,y;c,v,y;..." for the lucas
 * family and "v,y;v,y;..." for the frierson family, innermost level first.
 */
#ifndef LUCAS_LUCAS_H
#define LUCAS_LUCAS_H

#include <stddef.h>

#if defined(LUCAS_BUILDING_LIBRARY)
#define LUCAS_API __attribute__((visibility("default")))
#else
#define LUCAS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lucas_status {
  LUCAS_OK = 0,
  LUCAS_ERR_ORDER_MISMATCH = 1,
  LUCAS_ERR_INVALID_ARGUMENT = 2,
  LUCAS_ERR_PARSE = 3,
  LUCAS_ERR_PRECONDITION = 4,
  LUCAS_ERR_RESOURCE_LIMIT = 5,
  LUCAS_ERR_IO = 6,
  LUCAS_ERR_INTERNAL = 7
} lucas_status;

typedef struct lucas_matrix lucas_matrix;

LUCAS_API const char* lucas_version(void);
/* Message for the last failure on the calling thread; never NULL. */
LUCAS_API const char* lucas_last_error(void);
LUCAS_API void lucas_string_free(char* s);

/* family: "lucas" or "frierson". */
LUCAS_API lucas_status lucas_generate(const char* family, const char* params, lucas_matrix** out);
/* Text grid or JSON {"order", "rows"}. */
LUCAS_API lucas_status lucas_matrix_parse(const char* text, lucas_matrix** out);
LUCAS_API lucas_status lucas_matrix_read_file(const char* path, lucas_matrix** out);
LUCAS_API void lucas_matrix_free(lucas_matrix* m);
LUCAS_API size_t lucas_matrix_order(const lucas_matrix* m);
/* Decimal string of element (i, j). */
LUCAS_API lucas_status lucas_matrix_element(const lucas_matrix* m, size_t i, size_t j, char** out);
/* format: "grid" or "json". */
LUCAS_API lucas_status lucas_matrix_format(const lucas_matrix* m, const char* format, char** out);
LUCAS_API lucas_status lucas_matrix_equal(const lucas_matrix* a, const lucas_matrix* b, int* equal);

/* property: "magic", "regular", "natural" or "fnc". */
LUCAS_API lucas_status lucas_check(const lucas_matrix* m, const char* property, int* result);
LUCAS_API lucas_status lucas_verify(const lucas_matrix* m, int recover_params, char** json_out);

LUCAS_API lucas_status lucas_spectra(const char* family, const char* params, char** json_out);
/* Parameters are recovered from the matrix first. */
LUCAS_API lucas_status lucas_spectra_matrix(const lucas_matrix* m, char** json_out);

/* ceiling: highest level materialized; emit: include representatives. */
LUCAS_API lucas_status lucas_enumerate(size_t level, const char* family, size_t ceiling, int emit,
                                       unsigned workers, char** json_out);
LUCAS_API lucas_status lucas_census(size_t level, char** json_out);

/* closed_form may be NULL. */
LUCAS_API lucas_status lucas_power(const char* family, const char* params, unsigned k, lucas_matrix** out,
                                   int* closed_form);
/* Order-3 parameters only; rational grid with p/q entries. */
LUCAS_API lucas_status lucas_inverse3(const char* family, const char* params, char** grid_out);

LUCAS_API lucas_status lucas_commute(const lucas_matrix* a, const lucas_matrix* b, char** json_out);
/* suite: "fier9", "order3" or "pairs64". */
LUCAS_API lucas_status lucas_commute_suite(const char* suite, char** json_out);

/* which: 1 or 2. */
LUCAS_API lucas_status lucas_table(int which, char** markdown_out);

#ifdef __cplusplus
}
#endif

#endif /* LUCAS_LUCAS_H */
