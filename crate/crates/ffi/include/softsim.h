#ifndef SOFTSIM_H
#define SOFTSIM_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SoftsimStatus {
  SOFTSIM_STATUS_OK = 0,
  SOFTSIM_STATUS_NULL_POINTER = 1,
  SOFTSIM_STATUS_INVALID_UTF8 = 2,
  SOFTSIM_STATUS_PARSE = 3,
  SOFTSIM_STATUS_SPACE_MISMATCH = 4,
  SOFTSIM_STATUS_PRECONDITION = 5,
  SOFTSIM_STATUS_UNKNOWN_MEASURE = 6,
  SOFTSIM_STATUS_UNDEFINED = 7,
  SOFTSIM_STATUS_INVALID_ARGUMENT = 8,
  SOFTSIM_STATUS_PANIC = 9,
} SoftsimStatus;

/**
 * Opaque soft-set handle.
 */
typedef struct SoftsimSoftSet SoftsimSoftSet;

/**
 * A measure result. `value` is meaningful only when `defined` is true.
 */
typedef struct SoftsimValue {
  bool defined;
  double value;
} SoftsimValue;

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next library call on the same thread.
 */
const char *softsim_last_error(void);

/**
 * Parses a soft set from its JSON form into a new handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be writable.
 */
enum SoftsimStatus softsim_softset_from_json(const char *json, struct SoftsimSoftSet **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `set` must be null or a handle not yet freed.
 */
void softsim_softset_free(struct SoftsimSoftSet *set);

/**
 * Serializes a soft set to compact JSON.
 *
 * # Safety
 * `set` must be a live handle; `out` must be writable.
 */
enum SoftsimStatus softsim_softset_to_json(const struct SoftsimSoftSet *set, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void softsim_string_free(char *s);

/**
 * Evaluates any measure by identifier (`"d"`, `"koczy-e"`, `"ms-prime"`, ...).
 * An undefined result is reported through `out->defined`, not as an error.
 *
 * # Safety
 * Pointer arguments must be valid; `measure` NUL-terminated.
 */
enum SoftsimStatus softsim_measure(const char *measure,
                                   const struct SoftsimSoftSet *a,
                                   const struct SoftsimSoftSet *b,
                                   double steepness,
                                   struct SoftsimValue *out);

/**
 * Like [`softsim_measure`] but writes the exact rendering (`"5/4"`,
 * `"1/(2+sqrt(3))"`, `"undefined"`) as a new string.
 *
 * # Safety
 * Pointer arguments must be valid; `measure` NUL-terminated.
 */
enum SoftsimStatus softsim_measure_exact(const char *measure,
                                         const struct SoftsimSoftSet *a,
                                         const struct SoftsimSoftSet *b,
                                         double steepness,
                                         char **out);

/**
 * `a ⊆̃ b`.
 *
 * # Safety
 * Pointer arguments must be valid.
 */
enum SoftsimStatus softsim_is_soft_subset(const struct SoftsimSoftSet *a,
                                          const struct SoftsimSoftSet *b,
                                          bool *out);

/**
 * Soft equality.
 *
 * # Safety
 * Pointer arguments must be valid.
 */
enum SoftsimStatus softsim_soft_equal(const struct SoftsimSoftSet *a,
                                      const struct SoftsimSoftSet *b,
                                      bool *out);

/**
 * Whether the similarity `measure` reaches one half.
 *
 * # Safety
 * Pointer arguments must be valid; `measure` NUL-terminated.
 */
enum SoftsimStatus softsim_is_significantly_similar(const char *measure,
                                                    const struct SoftsimSoftSet *a,
                                                    const struct SoftsimSoftSet *b,
                                                    double steepness,
                                                    bool *out);

#endif  /* SOFTSIM_H */
