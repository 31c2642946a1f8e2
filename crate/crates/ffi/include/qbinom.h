#ifndef QBINOM_H
#define QBINOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QbStatus {
  QB_STATUS_OK = 0,
  QB_STATUS_NULL_POINTER = 1,
  QB_STATUS_OVERFLOW = 2,
  QB_STATUS_DIVISION_BY_ZERO = 3,
  QB_STATUS_INEXACT_DIVISION = 4,
  QB_STATUS_EVAL_AT_ZERO = 5,
  QB_STATUS_ZERO_POLYNOMIAL = 6,
  QB_STATUS_INVALID_ARGUMENT = 7,
  QB_STATUS_UNKNOWN_IDENTITY = 8,
  QB_STATUS_PARSE = 9,
  QB_STATUS_INVALID_UTF8 = 10,
  QB_STATUS_PANIC = 11,
} QbStatus;

/**
 * Opaque handle to an exact Laurent polynomial in `q`.
 */
typedef struct QbPoly QbPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *qb_status_message(enum QbStatus status);

/**
 * `[n choose k]` for any integers.
 *
 * # Safety
 * `out` must be a valid pointer to writable `QbPoly*` storage.
 */
enum QbStatus qb_binom(int64_t n, int64_t k, struct QbPoly **out);

/**
 * `[n choose k]` through the product-quotient path.
 *
 * # Safety
 * `out` must be a valid pointer to writable `QbPoly*` storage.
 */
enum QbStatus qb_binom_oracle(int64_t n, int64_t k, struct QbPoly **out);

/**
 * `[n choose k]` with `q` replaced by `1/q`.
 *
 * # Safety
 * `out` must be a valid pointer to writable `QbPoly*` storage.
 */
enum QbStatus qb_reciprocal(int64_t n, int64_t k, struct QbPoly **out);

/**
 * `(c q^e; q)_k`.
 *
 * # Safety
 * `out` must be a valid pointer to writable `QbPoly*` storage.
 */
enum QbStatus qb_pochhammer(int64_t coeff, int64_t exp, uint32_t k, struct QbPoly **out);

/**
 * Reversed form of `(c q^e; q)_k`; `c` must be 0 or +/-1.
 *
 * # Safety
 * `out` must be a valid pointer to writable `QbPoly*` storage.
 */
enum QbStatus qb_pochhammer_reversed(int64_t coeff, int64_t exp, uint32_t k, struct QbPoly **out);

/**
 * Builds `sum coeffs[i] q^exps[i]`; duplicate exponents are summed.
 *
 * # Safety
 * `exps` and `coeffs` must each point to `len` readable values (they may be
 * NULL when `len == 0`); `out` must be valid for writes.
 */
enum QbStatus qb_poly_from_terms(const int64_t *exps,
                                 const int64_t *coeffs,
                                 size_t len,
                                 struct QbPoly **out);

/**
 * Parses the `{"terms":[{"exp":e,"coeff":"c"},...]}` form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum QbStatus qb_poly_from_json(const char *json, struct QbPoly **out);

/**
 * # Safety
 * `p` must be a live handle or NULL; `out` must be valid for writes.
 */
enum QbStatus qb_poly_clone(const struct QbPoly *p, struct QbPoly **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum QbStatus qb_poly_add(const struct QbPoly *a, const struct QbPoly *b, struct QbPoly **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum QbStatus qb_poly_sub(const struct QbPoly *a, const struct QbPoly *b, struct QbPoly **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum QbStatus qb_poly_mul(const struct QbPoly *a, const struct QbPoly *b, struct QbPoly **out);

/**
 * Exact quotient `a / b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum QbStatus qb_poly_exact_div(const struct QbPoly *a,
                                const struct QbPoly *b,
                                struct QbPoly **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum QbStatus qb_poly_substitute_qinv(const struct QbPoly *p, struct QbPoly **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum QbStatus qb_poly_equal(const struct QbPoly *a, const struct QbPoly *b, bool *out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum QbStatus qb_poly_is_zero(const struct QbPoly *p, bool *out);

/**
 * Minimum and maximum exponent; `QB_STATUS_ZERO_POLYNOMIAL` for zero.
 *
 * # Safety
 * `p` must be a live handle; `lo`, `hi` must be valid for writes.
 */
enum QbStatus qb_poly_valuation_degree(const struct QbPoly *p, int64_t *lo, int64_t *hi);

/**
 * Number of nonzero terms.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum QbStatus qb_poly_num_terms(const struct QbPoly *p, size_t *out);

/**
 * The `index`-th term in ascending exponent order; the coefficient is a
 * decimal string to be released with [`qb_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `exp` and `coeff` must be valid for writes.
 */
enum QbStatus qb_poly_term(const struct QbPoly *p, size_t index, int64_t *exp, char **coeff);

/**
 * Canonical text form, e.g. `q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum QbStatus qb_poly_to_string(const struct QbPoly *p, char **out);

/**
 * JSON form `{"terms":[{"exp":e,"coeff":"c"},...]}`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum QbStatus qb_poly_to_json(const struct QbPoly *p, char **out);

/**
 * Exact value at `q = q0`, with `q0` given as `"p"` or `"p/r"`; the result is
 * written in the same form.
 *
 * # Safety
 * `p` must be a live handle; `q0` a NUL-terminated string; `out` valid for writes.
 */
enum QbStatus qb_poly_eval(const struct QbPoly *p, const char *q0, char **out);

/**
 * Runs one named identity (or `"all"`) over a grid.
 *
 * `grid_json` may be NULL for the defaults, or an object such as
 * `{"a":[0,6],"n":[-2,2]}` overriding individual ranges. The report is the
 * JSON `IdentityReport` (an array of them for `"all"`).
 *
 * # Safety
 * `identity` must be NUL-terminated; `grid_json` NUL-terminated or NULL;
 * `report_json` and `passed` valid for writes.
 */
enum QbStatus qb_check(const char *identity,
                       const char *grid_json,
                       char **report_json,
                       bool *passed);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `p` must be NULL or a handle returned by this library and not yet freed.
 */
void qb_poly_free(struct QbPoly *p);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void qb_string_free(char *s);

/**
 * Library version, static NUL-terminated string.
 */
const char *qb_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QBINOM_H */
