/* C interface to the cmreg regularity engine. Generated by cbindgen; do not edit. */

#ifndef CMREG_H
#define CMREG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status of one call. Anything other than OK leaves a message in
// `cmreg_last_error`.
typedef enum CmregStatus {
  CMREG_STATUS_OK = 0,
  // Input text or an argument value failed to parse.
  CMREG_STATUS_PARSE_ERROR = 1,
  // The computation itself failed (degree cap, genericity budget, ...).
  CMREG_STATUS_COMPUTATION_ERROR = 2,
  // A required pointer was null or an enum value was out of range.
  CMREG_STATUS_INVALID_ARGUMENT = 3,
  // Input text was not valid UTF-8.
  CMREG_STATUS_INVALID_UTF8 = 4,
  // An internal invariant failed; the handle is still valid.
  CMREG_STATUS_INTERNAL_PANIC = 5,
} CmregStatus;

// A parsed subspace arrangement. Opaque; create with
// `cmreg_arrangement_parse` or `cmreg_sharp_example`, release with
// `cmreg_arrangement_free`.
typedef struct CmregArrangement CmregArrangement;

// A homogeneous ideal. Opaque; create with `cmreg_intersection_ideal`,
// release with `cmreg_ideal_free`.
typedef struct CmregIdeal CmregIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null when no
// call has failed yet. The pointer stays valid until the next failing
// call on the same thread.
const char *cmreg_last_error(void);

// Parses arrangement text (header `ring n=<n> field=<p|Q>`, then one
// `subspace: <form>; ...` line per subspace) into a new handle.
//
// # Safety
// `text` must point to a NUL-terminated string and `out` must be a
// valid location to store the handle.
enum CmregStatus cmreg_arrangement_parse(const char *text, struct CmregArrangement **out);

// Builds the d-regular sharp configuration: d lines through d points of
// a fixed line in P^3. Requires d >= 2.
//
// # Safety
// `out` must be a valid location to store the handle.
enum CmregStatus cmreg_sharp_example(uintptr_t d, uint64_t seed, struct CmregArrangement **out);

// Renders an arrangement in the same text format the parser reads.
// The string must be released with `cmreg_string_free`.
//
// # Safety
// `x` must be a live arrangement handle and `out` a valid location.
enum CmregStatus cmreg_arrangement_to_text(const struct CmregArrangement *x, char **out);

// Number of subspaces in the arrangement.
//
// # Safety
// `x` must be a live arrangement handle and `out` a valid location.
enum CmregStatus cmreg_arrangement_d(const struct CmregArrangement *x, uintptr_t *out);

// Releases an arrangement handle. Null is a no-op.
//
// # Safety
// `x` must be null or a handle not previously freed.
void cmreg_arrangement_free(struct CmregArrangement *x);

// Computes the intersection ideal of the arrangement as a new handle.
//
// # Safety
// `x` must be a live arrangement handle and `out` a valid location.
enum CmregStatus cmreg_intersection_ideal(const struct CmregArrangement *x,
                                          struct CmregIdeal **out);

// Number of generators the ideal currently carries.
//
// # Safety
// `ideal` must be a live ideal handle and `out` a valid location.
enum CmregStatus cmreg_ideal_generator_count(const struct CmregIdeal *ideal, uintptr_t *out);

// Releases an ideal handle. Null is a no-op.
//
// # Safety
// `ideal` must be null or a handle not previously freed.
void cmreg_ideal_free(struct CmregIdeal *ideal);

// Castelnuovo-Mumford regularity of the ideal. `strategy` selects the
// route: 0 minimal free resolution, 1 generic hyperplane sections,
// 2 both with a cross-check. `seed` feeds the generic draws.
//
// # Safety
// `ideal` must be a live ideal handle and `out` a valid location.
enum CmregStatus cmreg_regularity(const struct CmregIdeal *ideal,
                                  int32_t strategy,
                                  uint64_t seed,
                                  int64_t *out);

// Renders the minimal graded Betti table of the ideal (rows j - i,
// columns i, `.` for zero). The string must be released with
// `cmreg_string_free`.
//
// # Safety
// `ideal` must be a live ideal handle and `out` a valid location.
enum CmregStatus cmreg_betti_table(const struct CmregIdeal *ideal, char **out);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be null or a string returned by this library and not
// previously freed.
void cmreg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CMREG_H */
