#ifndef NAHOPF_H
#define NAHOPF_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which division to compute.
 */
typedef enum NahopfSide {
  /**
   * `a \ b`
   */
  NAHOPF_SIDE_LEFT = 0,
  /**
   * `a / b`
   */
  NAHOPF_SIDE_RIGHT = 1,
} NahopfSide;

/**
 * Result codes of all fallible calls.
 */
typedef enum NahopfStatus {
  NAHOPF_STATUS_OK = 0,
  NAHOPF_STATUS_NULL_POINTER = 1,
  NAHOPF_STATUS_INVALID_UTF8 = 2,
  NAHOPF_STATUS_PARSE = 3,
  NAHOPF_STATUS_YANG_BAXTER = 4,
  NAHOPF_STATUS_INVALID_BRAIDING = 5,
  NAHOPF_STATUS_NOT_INVOLUTIVE = 6,
  NAHOPF_STATUS_ARITY = 7,
  NAHOPF_STATUS_INVALID = 8,
  NAHOPF_STATUS_IO = 9,
  NAHOPF_STATUS_PANIC = 10,
} NahopfStatus;

/**
 * A loaded braiding with its memo tables.
 */
typedef struct NahopfContext NahopfContext;

/**
 * An element of the free algebra.
 */
typedef struct NahopfElement NahopfElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Loads a braiding from its JSON definition.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum NahopfStatus nahopf_context_from_json(const char *json, struct NahopfContext **out);

/**
 * Releases a context. Null is ignored.
 *
 * # Safety
 * `ctx` must come from [`nahopf_context_from_json`] and not be used again.
 */
void nahopf_context_free(struct NahopfContext *ctx);

/**
 * Number of generators, zero for a null context.
 *
 * # Safety
 * `ctx` must be null or a live context.
 */
size_t nahopf_context_dim(const struct NahopfContext *ctx);

/**
 * Whether the braiding squares to the identity.
 *
 * # Safety
 * `ctx` must be null or a live context.
 */
bool nahopf_context_is_involutive(const struct NahopfContext *ctx);

/**
 * Parses an element such as `"2*(x1 x2) - 1/3*x1"`.
 *
 * # Safety
 * `ctx` must be a live context, `expr` a nul-terminated string and `out` a
 * valid pointer.
 */
enum NahopfStatus nahopf_element_parse(const struct NahopfContext *ctx,
                                       const char *expr,
                                       struct NahopfElement **out);

/**
 * Canonical text of an element; release with [`nahopf_string_free`].
 * Returns null for a null element.
 *
 * # Safety
 * `element` must be null or a live element.
 */
char *nahopf_element_to_string(const struct NahopfElement *element);

/**
 * Releases an element. Null is ignored.
 *
 * # Safety
 * `element` must come from this library and not be used again.
 */
void nahopf_element_free(struct NahopfElement *element);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used again.
 */
void nahopf_string_free(char *s);

/**
 * The message of the last failed call on this thread, or null. Release with
 * [`nahopf_string_free`].
 */
char *nahopf_last_error(void);

/**
 * The coproduct as canonical tensor text, e.g. `1*[1 | x1] + 1*[x1 | 1]`.
 *
 * # Safety
 * Pointers must be live handles and `out` a valid pointer.
 */
enum NahopfStatus nahopf_coproduct(const struct NahopfContext *ctx,
                                   const struct NahopfElement *element,
                                   char **out);

/**
 * Whether `Δ(a) = a⊗1 + 1⊗a`.
 *
 * # Safety
 * Pointers must be live handles and `out` a valid pointer.
 */
enum NahopfStatus nahopf_is_primitive(const struct NahopfContext *ctx,
                                      const struct NahopfElement *element,
                                      bool *out);

/**
 * `a \ b` or `a / b`.
 *
 * # Safety
 * Pointers must be live handles and `out` a valid pointer.
 */
enum NahopfStatus nahopf_divide(const struct NahopfContext *ctx,
                                enum NahopfSide side,
                                const struct NahopfElement *a,
                                const struct NahopfElement *b,
                                struct NahopfElement **out);

/**
 * `P_{m,n}` on `count = m + n + 1` elements. Needs an involutive braiding.
 *
 * # Safety
 * `args` must point to `count` live element handles and `out` must be valid.
 */
enum NahopfStatus nahopf_op_p(const struct NahopfContext *ctx,
                              size_t m,
                              size_t n,
                              const struct NahopfElement *const *args,
                              size_t count,
                              struct NahopfElement **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NAHOPF_H */
