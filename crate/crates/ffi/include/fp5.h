#ifndef FP5_H
#define FP5_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Fp5Status {
  FP5_STATUS_OK = 0,
  FP5_STATUS_NULL_POINTER = 1,
  FP5_STATUS_OUT_OF_RANGE = 2,
  FP5_STATUS_INVALID_PARAMETER = 3,
  FP5_STATUS_PARTITION_VIOLATION = 4,
  FP5_STATUS_PARSE_ERROR = 5,
  FP5_STATUS_UNBOUND_VARIABLE = 6,
  FP5_STATUS_UNIVERSE_MISMATCH = 7,
  FP5_STATUS_CONSTRAINT_VIOLATION = 8,
  FP5_STATUS_DUPLICATE_ELEMENT = 9,
  FP5_STATUS_INVALID_UTF8 = 10,
  FP5_STATUS_INTERNAL = 11,
} Fp5Status;

typedef enum Fp5Truth {
  FP5_TRUTH_TRUE = 0,
  FP5_TRUTH_INDETERMINATE = 1,
  FP5_TRUTH_UNDEFINED = 2,
  FP5_TRUTH_CONTRADICTORY = 3,
  FP5_TRUTH_FALSE = 4,
} Fp5Truth;

typedef enum Fp5InputKind {
  FP5_INPUT_KIND_FUZZY = 0,
  FP5_INPUT_KIND_INTUITIONISTIC = 1,
  FP5_INPUT_KIND_PARACONSISTENT = 2,
  FP5_INPUT_KIND_BIPOLAR = 3,
} Fp5InputKind;

/**
 * Opaque parsed expression.
 */
typedef struct Fp5Expr Fp5Expr;

/**
 * Opaque FP5 set.
 */
typedef struct Fp5Set Fp5Set;

/**
 * The five descriptors of one element.
 */
typedef struct Fp5PentaCoords {
  double tau;
  double phi;
  double kappa;
  double pi;
  double iota;
} Fp5PentaCoords;

/**
 * The four stored descriptors of an FP5 element; iota is derived.
 */
typedef struct Fp5Grade4 {
  double tau;
  double phi;
  double kappa;
  double pi;
} Fp5Grade4;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The last error message recorded on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on this thread.
 */
const char *fp5_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void fp5_string_free(char *text);

/**
 * Frank t-norm. `s` is in `[0, INFINITY]`; 0, 1 and INFINITY select the
 * Min, product and Lukasiewicz limits.
 */
enum Fp5Status fp5_tnorm(double s, double x, double y, double *out);

enum Fp5Status fp5_tconorm(double s, double x, double y, double *out);

/**
 * The Frank t-norm with parameter `1/s`.
 */
enum Fp5Status fp5_conjugate_tnorm(double s, double x, double y, double *out);

enum Fp5Status fp5_decompose(double s, double x, double y, struct Fp5PentaCoords *out);

/**
 * Closed-form decomposition for `s = 0`.
 */
enum Fp5Status fp5_decompose_lg(double x, double y, struct Fp5PentaCoords *out);

enum Fp5Status fp5_compose(const struct Fp5PentaCoords *coords, double *x, double *y);

enum Fp5Truth fp5_or(enum Fp5Truth a, enum Fp5Truth b);

enum Fp5Truth fp5_and(enum Fp5Truth a, enum Fp5Truth b);

enum Fp5Truth fp5_not(enum Fp5Truth a);

/**
 * Parses `text`. On a syntax error `error_offset`, when not NULL,
 * receives the byte offset of the failure.
 */
enum Fp5Status fp5_expr_parse(const char *text, struct Fp5Expr **out, size_t *error_offset);

/**
 * Evaluates `expr` under bindings such as `"a=T,b=C"`.
 */
enum Fp5Status fp5_expr_eval(const struct Fp5Expr *expr,
                             const char *assignment,
                             enum Fp5Truth *out);

/**
 * Prints `expr`; release the result with [`fp5_string_free`].
 */
char *fp5_expr_to_string(const struct Fp5Expr *expr);

void fp5_expr_free(struct Fp5Expr *expr);

/**
 * Builds a set from `len` identifiers and `(tau, phi, kappa, pi)` grades.
 */
enum Fp5Status fp5_set_new(const char *const *ids,
                           const struct Fp5Grade4 *grades,
                           size_t len,
                           struct Fp5Set **out);

/**
 * Translates `(mu, nu)` arrays into an FP5 set. `nu` is ignored, and may
 * be NULL, for `FP5_INPUT_KIND_FUZZY`.
 */
enum Fp5Status fp5_set_translate(enum Fp5InputKind kind,
                                 const char *const *ids,
                                 const double *mu,
                                 const double *nu,
                                 size_t len,
                                 struct Fp5Set **out);

/**
 * Union under `couple`: `"minmax"`, `"prod"`, `"luk"` or `"frank:<s>"`.
 */
enum Fp5Status fp5_set_union(const struct Fp5Set *a,
                             const struct Fp5Set *b,
                             const char *couple,
                             struct Fp5Set **out);

enum Fp5Status fp5_set_intersection(const struct Fp5Set *a,
                                    const struct Fp5Set *b,
                                    const char *couple,
                                    struct Fp5Set **out);

enum Fp5Status fp5_set_complement(const struct Fp5Set *a, struct Fp5Set **out);

/**
 * Number of elements; 0 for NULL.
 */
size_t fp5_set_len(const struct Fp5Set *set);

/**
 * Identifier of element `index`, owned by the set; NULL when out of bounds.
 */
const char *fp5_set_element_id(const struct Fp5Set *set, size_t index);

enum Fp5Status fp5_set_get(const struct Fp5Set *set, size_t index, struct Fp5PentaCoords *out);

/**
 * Writes the inverse transform into `mu` and `nu`, each of length `len`
 * (which must equal the set's length).
 */
enum Fp5Status fp5_set_to_bipolar(const struct Fp5Set *set, double *mu, double *nu, size_t len);

void fp5_set_free(struct Fp5Set *set);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FP5_H */
