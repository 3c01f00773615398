#ifndef RBX_H
#define RBX_H

/* C interface to the rbx library. All strings are UTF-8 and NUL
 * terminated. Strings returned through `char** out` are owned by the caller
 * and released with rbx_string_free. On failure the out parameters are left
 * untouched and rbx_last_error() describes the problem (per thread). */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RBX_BUILDING_LIBRARY)
#    define RBX_API __declspec(dllexport)
#  else
#    define RBX_API __declspec(dllimport)
#  endif
#else
#  define RBX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbx_status {
  RBX_OK = 0,
  RBX_ERR_NULL_ARGUMENT = 1,
  RBX_ERR_PARSE = 2,            /* see rbx_last_error_offset() */
  RBX_ERR_INVALID_ARGUMENT = 3,
  RBX_ERR_DOMAIN = 4,           /* mathematically undefined request */
  RBX_ERR_VERIFY_FAILED = 5,    /* the report was produced but a check failed */
  RBX_ERR_INTERNAL = 6
} rbx_status;

/* Output format selector. */
typedef enum rbx_format { RBX_FORMAT_TEXT = 0, RBX_FORMAT_JSON = 1 } rbx_format;

/* Expression in the free Rota-Baxter algebra on one generator Z. */
typedef struct rbx_term rbx_term;

RBX_API const char* rbx_version(void);

/* Message of the last failure on this thread ("" if none). */
RBX_API const char* rbx_last_error(void);
/* Byte offset of the last parse failure on this thread, -1 otherwise. */
RBX_API long rbx_last_error_offset(void);

RBX_API void rbx_string_free(char* s);

RBX_API rbx_status rbx_term_parse(const char* text, rbx_term** out);
RBX_API void rbx_term_free(rbx_term* term);
RBX_API rbx_status rbx_term_render(const rbx_term* term, char** out);

/* Rewrites to elementary monomials. theta is a rational "p" or "p/q";
 * NULL means 1. */
RBX_API rbx_status rbx_term_normal_form(const rbx_term* term, const char* theta, rbx_term** out);
/* *out = 1 iff every monomial of the expansion is elementary. */
RBX_API rbx_status rbx_term_is_elementary(const rbx_term* term, int* out);
/* *out = 1 iff both terms have the same normal form at the given weight. */
RBX_API rbx_status rbx_term_equal(const rbx_term* a, const rbx_term* b, const char* theta,
                                  int* out);

/* Image under Z -> X = (x1, ..., xL), T -> rho in the standard algebra of
 * sequences. length 0 picks a length from the degree of the term. */
RBX_API rbx_status rbx_term_eval(const rbx_term* term, size_t length, rbx_format format,
                                 char** out);

/* M_f^l for a surjection written "1,3,3,2". */
RBX_API rbx_status rbx_qsym(const char* surjection, unsigned truncation, rbx_format format,
                            char** out);

/* Runs a named verification and writes its report. check is one of
 * "spitzer", "double-spitzer", "bs", "classical", "antipode", "dynkin",
 * "atkinson", "axioms". options is a JSON object (or NULL) with any of
 * "n", "order", "trials", "len", "side", "carrier". timing = 0 omits the
 * elapsed time so output is reproducible byte for byte. Returns
 * RBX_ERR_VERIFY_FAILED (with *out set) when a check failed. */
RBX_API rbx_status rbx_verify(const char* check, const char* options, rbx_format format,
                              int timing, char** out);

/* Coefficients of x = sum t^n (RX)^[n], y = sum t^n (R~X)^{n}, or of
 * d/dt log x ("magnus") in the standard algebra, up to t^order. */
RBX_API rbx_status rbx_series(const char* kind, size_t order, size_t length, rbx_format format,
                              char** out);

#ifdef __cplusplus
}
#endif

#endif
