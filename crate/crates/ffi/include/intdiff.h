#ifndef INTDIFF_H
#define INTDIFF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  INTDIFF_STATUS_OK = 0,
  INTDIFF_STATUS_NULL_POINTER = 1,
  INTDIFF_STATUS_INVALID_UTF8 = 2,
  INTDIFF_STATUS_SYNTAX = 3,
  INTDIFF_STATUS_WINDOW_TOO_SMALL = 4,
  INTDIFF_STATUS_INVALID_MODULE = 5,
  INTDIFF_STATUS_MISMATCH = 6,
  INTDIFF_STATUS_INFEASIBLE = 7,
  INTDIFF_STATUS_PANIC = 8,
} IntdiffStatus;

/**
 * Opaque weight window module.
 */
typedef struct IntdiffModule IntdiffModule;

/**
 * Opaque operator in canonical form.
 */
typedef struct IntdiffOperator IntdiffOperator;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *intdiff_last_error(void);

/**
 * # Safety
 * `s` must be null or come from this library.
 */
void intdiff_string_free(char *s);

/**
 * Parses an expression such as `"H*(1 - i*d)"` into canonical form.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
IntdiffStatus intdiff_operator_parse(const char *text, IntdiffOperator **out);

/**
 * # Safety
 * `op` must be null or a handle from this library not yet freed.
 */
void intdiff_operator_free(IntdiffOperator *op);

/**
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_operator_mul(const IntdiffOperator *a,
                                   const IntdiffOperator *b,
                                   IntdiffOperator **out);

/**
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_operator_add(const IntdiffOperator *a,
                                   const IntdiffOperator *b,
                                   IntdiffOperator **out);

/**
 * Canonical text of an operator.
 *
 * # Safety
 * `op` must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_operator_to_string(const IntdiffOperator *op, char **out);

/**
 * Writes 1 to `out` when the two operators are equal, else 0.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_operator_equal(const IntdiffOperator *a,
                                     const IntdiffOperator *b,
                                     int32_t *out);

/**
 * Checks `a * b` against the action on polynomials of degree at most `n`.
 * Writes 1 to `out` on agreement, else 0.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_operator_check_product(const IntdiffOperator *a,
                                             const IntdiffOperator *b,
                                             size_t n,
                                             int32_t *out);

/**
 * Builds the windowed model of `"M(n,λ)"` or `"Kx"`. With `use_window`
 * zero the default window is used and `lo`, `hi` are ignored.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
IntdiffStatus intdiff_module_make(const char *spec,
                                  int32_t use_window,
                                  int64_t lo,
                                  int64_t hi,
                                  IntdiffModule **out);

/**
 * Reads a module from its JSON file format.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
IntdiffStatus intdiff_module_from_json(const char *json, IntdiffModule **out);

/**
 * # Safety
 * `m` must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_module_to_json(const IntdiffModule *m, char **out);

/**
 * # Safety
 * `m` must be null or a handle from this library not yet freed.
 */
void intdiff_module_free(IntdiffModule *m);

/**
 * Decomposition summary such as `"Kx + M(2,0)"`.
 *
 * # Safety
 * `m` must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_module_decompose(const IntdiffModule *m, char **out);

/**
 * Dimension of the space of module maps `a → b` on a common window.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_module_hom_dim(const IntdiffModule *a, const IntdiffModule *b, size_t *out);

/**
 * Writes 1 to `out` when the submodules of `m` form a chain, else 0.
 *
 * # Safety
 * `m` must be live; `out` must be a valid pointer.
 */
IntdiffStatus intdiff_module_is_uniserial(const IntdiffModule *m, int32_t *out);

/**
 * First extension group between two indecomposables given as spec
 * strings. `computed` is this library's value, `claimed` the value from
 * the classification literature.
 *
 * # Safety
 * Strings must be NUL-terminated; out-pointers must be valid.
 */
IntdiffStatus intdiff_ext_dim(const char *a, const char *b, size_t *computed, size_t *claimed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTDIFF_H */
