#ifndef QWHITTAKER_H
#define QWHITTAKER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QwStatus {
  QW_STATUS_OK = 0,
  QW_STATUS_VERIFICATION_FAILED = 1,
  QW_STATUS_INVALID_INPUT = 2,
  QW_STATUS_POLE = 3,
  QW_STATUS_DIVISION_BY_ZERO = 4,
  QW_STATUS_BUDGET_EXHAUSTED = 5,
  QW_STATUS_INTERNAL = 6,
  QW_STATUS_NULL_POINTER = 7,
  QW_STATUS_INVALID_UTF8 = 8,
  QW_STATUS_PANIC = 9,
} QwStatus;

/**
 * A Laurent polynomial in `z_1, …, z_n` with exact coefficients.
 */
typedef struct QwPoly QwPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *qw_last_error(void);

/**
 * `Ψ(p)` from the Gelfand–Zetlin sum, or the normalized `Ψ̃(p)` when
 * `normalized` is true. `p` has `len = ℓ + 1` entries.
 *
 * # Safety
 * `point` must hold `len` values and `out` must be writable.
 */
enum QwStatus qw_whittaker(const int64_t *point, size_t len, bool normalized, struct QwPoly **out);

/**
 * The quantum-torus matrix element for a dominant `p`.
 *
 * # Safety
 * `point` must hold `len` values and `out` must be writable.
 */
enum QwStatus qw_torus_matrix_element(const int64_t *point, size_t len, struct QwPoly **out);

/**
 * `P_λ(z; q, t)` in `nvars` variables at rational `q = q_num/q_den`,
 * `t = t_num/t_den`.
 *
 * # Safety
 * `lambda` must hold `len` values and `out` must be writable.
 */
enum QwStatus qw_macdonald(const int64_t *lambda,
                           size_t len,
                           size_t nvars,
                           int64_t q_num,
                           int64_t q_den,
                           int64_t t_num,
                           int64_t t_den,
                           struct QwPoly **out);

/**
 * `P_λ(z; q, 0)` with symbolic `q`.
 *
 * # Safety
 * `lambda` must hold `len` values and `out` must be writable.
 */
enum QwStatus qw_macdonald_t0(const int64_t *lambda, size_t len, size_t nvars, struct QwPoly **out);

/**
 * Number of variables, or 0 for a null handle.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
size_t qw_poly_nvars(const struct QwPoly *poly);

/**
 * Number of nonzero terms, or 0 for a null handle.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
size_t qw_poly_nterms(const struct QwPoly *poly);

/**
 * Canonical JSON for `poly`; release the string with [`qw_string_free`].
 *
 * # Safety
 * `poly` must be a live handle and `out` must be writable.
 */
enum QwStatus qw_poly_to_json(const struct QwPoly *poly, char **out);

/**
 * Runs verification suites (`suite` may be `"all"`) and writes the JSON
 * report. Returns `Ok` when every suite passes, `VerificationFailed` when
 * some check fails.
 *
 * # Safety
 * `suite` must be a nul-terminated string and `out` must be writable.
 */
enum QwStatus qw_verify(const char *suite,
                        size_t rank,
                        int64_t lo,
                        int64_t hi,
                        size_t trunc,
                        char **out);

/**
 * Releases a polynomial handle; null is ignored.
 *
 * # Safety
 * `poly` must be null or a handle not yet freed.
 */
void qw_poly_free(struct QwPoly *poly);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void qw_string_free(char *s);

/**
 * Library version as a static nul-terminated string.
 */
const char *qw_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QWHITTAKER_H */
