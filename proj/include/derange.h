/*
 * derange: exact derangement polynomials, their cosine/sine companions,
 * and a mechanical identity-verification suite.
 *
 * C interface to the shared library. All objects are opaque handles freed
 * with the matching *_free call. Functions return DRG_OK on success; on any
 * other status drg_last_error() describes the most recent failure on the
 * calling thread. Strings handed out through char** are allocated by the
 * library and must be released with drg_string_free.
 *
 * Exact rational values cross this boundary as decimal-free strings such as
 * "9" or "-3/4".
 */

#ifndef DERANGE_H
#define DERANGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum drg_status {
  DRG_OK = 0,
  DRG_EINVAL = 1,   /* bad argument, unknown name, parse failure */
  DRG_EDOMAIN = 2,  /* domain error: oracle cap, zero divisor, ... */
  DRG_EINTERNAL = 3 /* internal cross-check failure */
} drg_status;

const char* drg_version(void);
const char* drg_last_error(void);
void drg_string_free(char* s);

/* ---- sequences ------------------------------------------------------- */

/* D_n as a decimal string. */
drg_status drg_derangement_number(unsigned n, char** out);

/* kind: "derangement" | "bell" | "euler" | "factorial"
 * format: "text" | "csv" | "json"; values for n = 0..n_max. */
drg_status drg_sequence_render(const char* kind, unsigned n_max, const char* format, char** out);

/* kind: 1 = signed first kind, 2 = second kind; rows 0..n_max, row-major.
 * format: "text" | "csv" | "json". */
drg_status drg_stirling_render(int kind, unsigned n_max, const char* format, char** out);

/* ---- polynomials ------------------------------------------------------ */

typedef struct drg_poly drg_poly;     /* univariate in x, exact rational coefficients */
typedef struct drg_bipoly drg_bipoly; /* bivariate in (x, y) */

drg_status drg_derangement_poly(unsigned n, drg_poly** out);
drg_status drg_bell_poly(unsigned n, drg_poly** out);
drg_status drg_cosine_derangement(unsigned n, drg_bipoly** out);
drg_status drg_sine_derangement(unsigned n, drg_bipoly** out);
void drg_poly_free(drg_poly* p);
void drg_bipoly_free(drg_bipoly* p);

/* format: "text" | "json" | "latex" */
drg_status drg_poly_render(const drg_poly* p, const char* format, char** out);
drg_status drg_bipoly_render(const drg_bipoly* p, const char* format, char** out);

/* Inverse of the "json" rendering; round trips are bit-exact. */
drg_status drg_poly_parse_json(const char* json, drg_poly** out);
drg_status drg_bipoly_parse_json(const char* json, drg_bipoly** out);

/* 1 if equal, 0 otherwise (null handles compare unequal). */
int drg_poly_equal(const drg_poly* a, const drg_poly* b);
int drg_bipoly_equal(const drg_bipoly* a, const drg_bipoly* b);

/* Exact evaluation; points and results are rational strings. */
drg_status drg_poly_eval(const drg_poly* p, const char* x, char** out);
drg_status drg_bipoly_eval(const drg_bipoly* p, const char* x, const char* y, char** out);

/* ---- identity verification ------------------------------------------- */

/* JSON array of {id, statement, mode} for every registered check. */
drg_status drg_check_list(char** out);

/* Runs the verification suite. only may be NULL (run everything) or a check
 * id. out_json receives a JSON array of reports; *all_pass is set to 1 iff
 * every executed check passed. */
drg_status drg_verify_run(unsigned n_max, double tolerance, unsigned tail_terms, const char* only,
                          char** out_json, int* all_pass);

/* ---- Monte Carlo ------------------------------------------------------ */

/* kind: "plain" | "cosine" | "sine". samples must be >= 10^4. Output JSON:
 * {kind, n, p, q, samples, seed, mean, std_error, exact_value, z_score}. */
drg_status drg_mc_moment(unsigned n, double p, double q, const char* kind, uint64_t samples,
                         uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DERANGE_H */
