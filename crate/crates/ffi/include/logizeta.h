#ifndef LOGIZETA_H
#define LOGIZETA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LzStatus {
  LZ_STATUS_OK = 0,
  LZ_STATUS_NULL_POINTER = 1,
  LZ_STATUS_INVALID_UTF8 = 2,
  LZ_STATUS_PARSE_ERROR = 3,
  LZ_STATUS_SEMANTIC_ERROR = 4,
  LZ_STATUS_OUT_OF_DOMAIN = 5,
  LZ_STATUS_POLE = 6,
  LZ_STATUS_INVALID_ARGUMENT = 7,
  LZ_STATUS_PANIC = 8,
} LzStatus;

typedef enum LzTruthValue {
  LZ_TRUTH_VALUE_TRUE = 0,
  LZ_TRUTH_VALUE_THIRD = 1,
  LZ_TRUTH_VALUE_FALSE = 2,
} LzTruthValue;

typedef enum LzMethodKind {
  LZ_METHOD_KIND_DIRICHLET = 0,
  LZ_METHOD_KIND_EULER_PRODUCT = 1,
  LZ_METHOD_KIND_ETA = 2,
  LZ_METHOD_KIND_EULER_MACLAURIN = 3,
  LZ_METHOD_KIND_FUNCTIONAL = 4,
} LzMethodKind;

typedef enum LzSeriesStatus {
  LZ_SERIES_STATUS_CONVERGED = 0,
  LZ_SERIES_STATUS_DIVERGED = 1,
  LZ_SERIES_STATUS_OSCILLATING = 2,
  LZ_SERIES_STATUS_POLE = 3,
  LZ_SERIES_STATUS_OUT_OF_DOMAIN = 4,
} LzSeriesStatus;

/**
 * Parsed formula.
 */
typedef struct LzFormula LzFormula;

/**
 * Builtin logic.
 */
typedef struct LzLogic LzLogic;

/**
 * Method plus parameters. Fields a method does not use are ignored:
 * `terms` (dirichlet), `prime_bound` (euler product), `tol` (eta),
 * `m` and `n` (euler-maclaurin).
 */
typedef struct LzMethod {
  enum LzMethodKind kind;
  uint64_t terms;
  uint64_t prime_bound;
  double tol;
  uint32_t m;
  uint64_t n;
} LzMethod;

typedef struct LzZetaResult {
  double re;
  double im;
  /**
   * Infinite unless `status` is converged.
   */
  double error_bound;
  uint64_t terms_used;
  enum LzSeriesStatus status;
} LzZetaResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *lz_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void lz_string_free(char *s);

/**
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum LzStatus lz_formula_parse(const char *text, struct LzFormula **out);

/**
 * # Safety
 * `f` must be null or a handle from [`lz_formula_parse`], not yet freed.
 */
void lz_formula_free(struct LzFormula *f);

/**
 * Canonical text of the formula; `unicode` selects ¬ ∧ ∨ → ↔.
 *
 * # Safety
 * `f` must be a live formula handle; `out` must be writable.
 */
enum LzStatus lz_formula_render(const struct LzFormula *f, bool unicode, char **out);

/**
 * Looks up a builtin logic (classical, frege, k3, lp, l3, bochvar).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LzStatus lz_logic_by_name(const char *name, struct LzLogic **out);

/**
 * # Safety
 * `l` must be null or a handle from [`lz_logic_by_name`], not yet freed.
 */
void lz_logic_free(struct LzLogic *l);

/**
 * Evaluates `f` under `assignment` ("p=T,q=X").
 *
 * # Safety
 * Handles must be live; `assignment` NUL-terminated; `out` writable.
 */
enum LzStatus lz_eval(const struct LzFormula *f,
                      const struct LzLogic *logic,
                      const char *assignment,
                      enum LzTruthValue *out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
enum LzStatus lz_is_tautology(const struct LzFormula *f, const struct LzLogic *logic, bool *out);

/**
 * ζ(re + i·im) by the chosen method. A divergent request still fills `out`
 * (with a non-converged status); domain violations and the pole return an
 * error code instead.
 *
 * # Safety
 * `spec` must point to a valid [`LzMethod`]; `out` must be writable.
 */
enum LzStatus lz_zeta(double re, double im, const struct LzMethod *spec, struct LzZetaResult *out);

/**
 * Exact `B_k` as "numerator/denominator" (or an integer).
 *
 * # Safety
 * `out` must be writable.
 */
enum LzStatus lz_bernoulli(uint32_t k, char **out);

/**
 * Law report for a builtin logic as JSON.
 *
 * # Safety
 * `logic` must be live; `out` writable.
 */
enum LzStatus lz_laws_json(const struct LzLogic *logic, char **out);

/**
 * One cell of the zeta-hypothesis case study as JSON.
 *
 * # Safety
 * `logic` must be NUL-terminated; `out` writable.
 */
enum LzStatus lz_case_rh_json(bool ac_true, const char *logic, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOGIZETA_H */
