/* SPDX-License-Identifier: Apache-2.0 */

#ifndef GRADALG_H
#define GRADALG_H

#include <stddef.h>
#include <stdint.h>

#if defined(GRADALG_BUILDING_LIBRARY)
#define GRADALG_API __attribute__((visibility("default")))
#else
#define GRADALG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. GRADALG_ERR_INPUT covers every user-facing problem (parse
 * errors, violated preconditions); GRADALG_ERR_INTERNAL means a library
 * invariant failed. */
typedef enum gradalg_status {
  GRADALG_OK = 0,
  GRADALG_ERR_INPUT = 1,
  GRADALG_ERR_INTERNAL = 2
} gradalg_status;

/* Opaque presented algebra. */
typedef struct gradalg_ring gradalg_ring;

GRADALG_API const char* gradalg_version(void);

/* Message and location ("line 3, column 7", "--bound", ...) of the last
 * failure on the calling thread. Valid until the next call on that thread. */
GRADALG_API const char* gradalg_last_error_message(void);
GRADALG_API const char* gradalg_last_error_location(void);

/* Strings returned through `char** out` are owned by the caller. */
GRADALG_API void gradalg_string_free(char* s);

GRADALG_API gradalg_status gradalg_ring_parse(const char* text, gradalg_ring** out);
GRADALG_API void gradalg_ring_free(gradalg_ring* ring);
/* Canonical presentation text. */
GRADALG_API gradalg_status gradalg_ring_print(const gradalg_ring* ring, char** out);

/* JSON analysis reports. */
GRADALG_API gradalg_status gradalg_report_grading(const gradalg_ring* ring, char** out);
/* bound < 0 selects the default bound. */
GRADALG_API gradalg_status gradalg_report_signature(const gradalg_ring* ring, int64_t bound,
                                                    char** out);
GRADALG_API gradalg_status gradalg_report_hilbert(const gradalg_ring* ring, int64_t upto,
                                                  char** out);
/* point: comma-separated scalars, e.g. "0,0,1/2". */
GRADALG_API gradalg_status gradalg_report_tangent(const gradalg_ring* ring, const char* point,
                                                  char** out);
GRADALG_API gradalg_status gradalg_report_irreducible(const gradalg_ring* ring,
                                                      const char* element, int64_t bound,
                                                      char** out);
/* field: "Q" or "F<p>"; lambdas: n strings "a" or "a/b". */
GRADALG_API gradalg_status gradalg_report_bk(const char* field, int64_t a, int64_t b,
                                             const int64_t* c, const char* const* lambdas,
                                             size_t n, char** out);

/* Constructors. Degenerate-input notes are appended to `flags` (one per line)
 * when flags is non-NULL; *flags may be NULL if there are none. */
GRADALG_API gradalg_status gradalg_bk_ring(const char* field, int64_t a, int64_t b,
                                           const int64_t* c, const char* const* lambdas, size_t n,
                                           gradalg_ring** out);
GRADALG_API gradalg_status gradalg_construct_samuel(const gradalg_ring* base, const char* F,
                                                    int64_t c, const char* new_var,
                                                    gradalg_ring** out, char** flags);
GRADALG_API gradalg_status gradalg_construct_modify(const gradalg_ring* base, const char* f,
                                                    const char* const* ideal_gens,
                                                    const char* const* new_vars, size_t n,
                                                    gradalg_ring** out, char** flags);
/* p: polynomial in x, e.g. "x^2". */
GRADALG_API gradalg_status gradalg_construct_bn(const char* field, const char* p, const int* a,
                                                const int* b, size_t n, gradalg_ring** out,
                                                char** flags);

#ifdef __cplusplus
}
#endif

#endif /* GRADALG_H */
