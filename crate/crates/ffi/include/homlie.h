#ifndef HOMLIE_H
#define HOMLIE_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a library call.
 */
typedef enum {
  HL_STATUS_OK = 0,
  HL_STATUS_NULL_POINTER = 1,
  HL_STATUS_INVALID_ARGUMENT = 2,
  HL_STATUS_UNKNOWN_ALGEBRA = 3,
  HL_STATUS_LAW_VIOLATION = 4,
  HL_STATUS_PARSE = 5,
  HL_STATUS_INTERNAL = 6,
} HlStatus;

/**
 * An algebra given by structure constants.
 */
typedef struct HlAlgebra HlAlgebra;

/**
 * A solved space of structure maps.
 */
typedef struct HlSolution HlSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *hl_last_error_message(void);

/**
 * Releases a string returned by the library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, freed at most once.
 */
void hl_string_free(char *s);

/**
 * Looks up a builtin algebra such as `"sl3"` or `"trunc_poly2"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
HlStatus hl_algebra_builtin(const char *name, HlAlgebra **out);

/**
 * Reads an algebra from its JSON description.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
HlStatus hl_algebra_from_json(const char *json, HlAlgebra **out);

/**
 * Dimension of the algebra, or 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t hl_algebra_dim(const HlAlgebra *alg);

/**
 * JSON description of the algebra; free with [`hl_string_free`].
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
HlStatus hl_algebra_to_json(const HlAlgebra *alg, char **out);

/**
 * # Safety
 * `alg` must be null or a handle from this library, freed at most once.
 */
void hl_algebra_free(HlAlgebra *alg);

/**
 * Solves for structure maps of the given kind: `"hom-lie"`, `"hom-cyclic"`,
 * `"hom-2nilp"`, `"multiplicative"` or `"delta:p/q"`.
 *
 * # Safety
 * `alg` must be a live handle, `kind` a NUL-terminated string, `out` writable.
 */
HlStatus hl_solve(const HlAlgebra *alg, const char *kind, HlSolution **out);

/**
 * Dimension of the solution space, or 0 for a null handle.
 *
 * # Safety
 * `sol` must be null or a live handle.
 */
size_t hl_solution_dim(const HlSolution *sol);

/**
 * JSON description of the solution; free with [`hl_string_free`].
 *
 * # Safety
 * `sol` must be a live handle; `out` must be writable.
 */
HlStatus hl_solution_to_json(const HlSolution *sol, char **out);

/**
 * # Safety
 * `sol` must be null or a handle from this library, freed at most once.
 */
void hl_solution_free(HlSolution *sol);

/**
 * Tests whether the map with row-major entries `entries[0..len]` (each a
 * rational such as `"3"` or `"-1/2"`) lies in the solution space.
 *
 * # Safety
 * `sol` must be a live handle, `entries` must point to `len` NUL-terminated
 * strings, and `out` must be writable.
 */
HlStatus hl_solution_contains(const HlSolution *sol,
                              const char *const *entries,
                              size_t len,
                              bool *out);

/**
 * Runs a registered scenario. `passed` receives whether every check held and
 * `report` (if non-null) its JSON result, to be freed with [`hl_string_free`].
 *
 * # Safety
 * `id` must be a NUL-terminated string; `passed` must be writable; `report`
 * must be null or writable.
 */
HlStatus hl_reproduce(const char *id, bool *passed, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMLIE_H */
