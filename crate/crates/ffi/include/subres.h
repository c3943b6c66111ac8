#ifndef SUBRES_H
#define SUBRES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SubresStatus {
  SUBRES_STATUS_OK = 0,
  SUBRES_STATUS_NULL_POINTER = 1,
  SUBRES_STATUS_INVALID_UTF8 = 2,
  SUBRES_STATUS_PARSE_ERROR = 3,
  SUBRES_STATUS_INVALID_ALGEBRA = 4,
  SUBRES_STATUS_UNKNOWN_CLASS = 5,
  SUBRES_STATUS_CAP_EXCEEDED = 6,
  SUBRES_STATUS_NOT_FOUND = 7,
  SUBRES_STATUS_OUT_OF_RANGE = 8,
  SUBRES_STATUS_INTERNAL = 99,
} SubresStatus;

/**
 * Opaque handle to a finite algebra.
 */
typedef struct SubresAlgebra SubresAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an algebra document. On success `*out_algebra` owns a new handle.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `out_algebra` must be null or writable.
 */
enum SubresStatus subres_algebra_from_json(const char *json, struct SubresAlgebra **out_algebra);

/**
 * Loads a built-in algebra such as `"M"`, `"N"` or `"B2"`.
 *
 * # Safety
 * As for [`subres_algebra_from_json`].
 */
enum SubresStatus subres_algebra_fixture(const char *name, struct SubresAlgebra **out_algebra);

/**
 * Frees a handle. Null is ignored.
 *
 * # Safety
 * `a` must be null or a handle from this library that was not freed yet.
 */
void subres_algebra_free(struct SubresAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle or null; `out_size` writable or null.
 */
enum SubresStatus subres_algebra_size(const struct SubresAlgebra *a, size_t *out_size);

/**
 * `*out_value = x → y`.
 *
 * # Safety
 * `a` must be a live handle or null; `out_value` writable or null.
 */
enum SubresStatus subres_algebra_imp(const struct SubresAlgebra *a,
                                     size_t x,
                                     size_t y,
                                     size_t *out_value);

/**
 * Sets `*out_member` to 1 or 0. On non-membership the failing axioms are
 * available from [`subres_last_error`] even though the status is `Ok`.
 *
 * # Safety
 * `a` must be a live handle or null; `class_name` a C string or null.
 */
enum SubresStatus subres_check_class(const struct SubresAlgebra *a,
                                     const char *class_name,
                                     int *out_member);

/**
 * Searches `class` up to `max_size` for a countermodel to `formula`.
 * `*out_json` receives `{"verdict": "refuted", "countermodel": ...}` or
 * `{"verdict": "no-countermodel-up-to", "max_size": N}`.
 *
 * # Safety
 * String arguments must be C strings or null; `out_json` writable or null.
 */
enum SubresStatus subres_countermodel_json(const char *formula,
                                           const char *class_name,
                                           size_t max_size,
                                           char **out_json);

/**
 * Checks a proof script. `*out_valid` is 1 or 0; `*out_json` (if not null)
 * receives the per-line diagnostics.
 *
 * # Safety
 * `script` must be a C string or null; out pointers writable or null.
 */
enum SubresStatus subres_check_proof_json(const char *script, int *out_valid, char **out_json);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library that was not freed yet.
 */
void subres_string_free(char *s);

/**
 * Message for the last failing call on this thread; empty after success.
 * Valid until the next call into the library on this thread.
 */
const char *subres_last_error(void);

/**
 * Library version as a static C string.
 */
const char *subres_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBRES_H */
