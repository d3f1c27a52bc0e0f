#ifndef QGEO_H
#define QGEO_H

/* qgeo — exact-arithmetic construction and verification of quantum-group
 * and braided-geometry models.
 *
 * All functions returning qgeo_status set a thread-local message readable
 * via qgeo_last_error() on failure.  Strings returned through char** out
 * parameters are heap-allocated and must be released with
 * qgeo_string_free().  A NULL out-pointer or handle argument is reported
 * as QGEO_INVALID_ARGUMENT, never dereferenced.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgeo_status {
  QGEO_OK = 0,
  QGEO_DIVISION_BY_ZERO = 1,
  QGEO_POLE = 2,
  QGEO_BUDGET_EXCEEDED = 3,
  QGEO_PARSE = 4,
  QGEO_INVALID_ARGUMENT = 5,
  QGEO_NOT_A_GROUP = 6,
  QGEO_NOT_A_FACTORISATION = 7,
  QGEO_DIMENSION = 8,
  QGEO_CONSTRUCTION = 9,
  QGEO_NOT_BIINVERTIBLE = 10,
  QGEO_YBE_FAILURE = 11,
  QGEO_UNKNOWN_MODEL = 12,
  QGEO_UNKNOWN_CHECK = 13,
  QGEO_IO = 14,
  QGEO_INTERNAL = 15,
  QGEO_BOUND_EXCEEDED = 16
} qgeo_status;

/* An opaque handle holding one built-in model or every algebra defined in
 * a parsed document, together with the document's check directives. */
typedef struct qgeo_model qgeo_model;

const char* qgeo_version(void);

/* Message of the most recent failure on this thread; empty if none. */
const char* qgeo_last_error(void);

void qgeo_string_free(char* s);

/* Newline-separated names of all built-in models. */
qgeo_status qgeo_model_list(char** out);

/* Opens a built-in model by name (QGEO_UNKNOWN_MODEL otherwise). */
qgeo_status qgeo_model_open(const char* name, qgeo_model** out);

/* Parses a document in the algebra text format.  Syntax and symbol errors
 * return QGEO_PARSE with "line L, column C: ..." in qgeo_last_error(). */
qgeo_status qgeo_model_from_text(const char* text, qgeo_model** out);

void qgeo_model_close(qgeo_model* m);

/* Canonical text form of the model; parsing it back yields the same
 * structures.  Finite-dimensional models have no text form. */
qgeo_status qgeo_model_print(const qgeo_model* m, char** out);

/* Caps the number of rewrite steps per normal-form computation. */
qgeo_status qgeo_model_set_budget(qgeo_model* m, uint64_t steps);

/* Normal form of an element expression (words joined with '.', scalar
 * coefficients, + - * / ^) as canonical text or as a JSON array of
 * {"word": [...], "coeff": "..."} terms. */
qgeo_status qgeo_normal_form(const qgeo_model* m, const char* expr, char** out);
qgeo_status qgeo_normal_form_json(const qgeo_model* m, const char* expr,
                                  char** out);

/* Normal form of a*b - b*a. */
qgeo_status qgeo_commutator(const qgeo_model* m, const char* a, const char* b,
                            char** out);

/* Runs named checks (comma-separated).  NULL runs the document's own check
 * directives when it declares some, otherwise every check the model
 * supports; "all" always runs every supported check.  Named checks must
 * exist (QGEO_UNKNOWN_CHECK) and apply to at least one algebra in the
 * handle (QGEO_INVALID_ARGUMENT).  degree -1 uses per-check defaults.
 * format is "json" or "text".  all_pass (optional) receives 1 when no
 * check failed.  A failing check is still QGEO_OK: the failure lives in
 * the report. */
qgeo_status qgeo_run_checks(const qgeo_model* m, const char* checks, int degree,
                            const char* format, char** report, int* all_pass);

/* Fourier transform on a built-in group: function is a linear combination
 * of element labels (e.g. "e + 2*c - i*t"); the result is the matching
 * group-algebra element. */
qgeo_status qgeo_fourier(const char* group, const char* function, char** out);

/* JSON list of the exact factorisations X = G.M of a built-in group:
 * [{"g": [labels...], "m": [labels...]}, ...]. */
qgeo_status qgeo_factorise(const char* group, char** out);

/* Scale-regime report for masses m, M, Planck's constant and Newton's
 * coupling (each a rational like "3/2"); returns a JSON object with the
 * mass product, the squared Planck mass, the regime name, and a note. */
qgeo_status qgeo_regime(const char* m, const char* big_m, const char* hbar,
                        const char* g, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QGEO_H */
