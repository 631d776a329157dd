/*
 * cfquad -- exact continued fractions of rationals and quadratic irrationals.
 *
 * C interface of the shared library. All integers are passed as decimal
 * strings (optionally signed), so values of any size survive the boundary.
 * Structured results come back as JSON strings allocated by the library;
 * release every returned string with cfq_string_free().
 *
 * Every function returns CFQ_OK on success. On failure the output
 * parameters are untouched and cfq_last_error() holds a message for the
 * calling thread until its next cfquad call.
 */
#ifndef CFQUAD_H
#define CFQUAD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cfq_status {
    CFQ_OK = 0,
    CFQ_ERROR_INVALID_ARGUMENT = 1,
    CFQ_ERROR_PARSE = 2,
    CFQ_ERROR_DOMAIN = 3,
    CFQ_ERROR_SQUARE_INPUT = 4,        /* N is a perfect square */
    CFQ_ERROR_INVALID_SURD = 5,        /* zero denominator or negative radicand */
    CFQ_ERROR_RATIONAL_SURD = 6,       /* radicand is a perfect square */
    CFQ_ERROR_RATIONAL_ROOT = 7,       /* square polynomial discriminant */
    CFQ_ERROR_COMPLEX_ROOT = 8,        /* negative polynomial discriminant */
    CFQ_ERROR_NOT_PURELY_PERIODIC = 9,
    CFQ_ERROR_ITERATION_LIMIT = 10,
    CFQ_ERROR_SHAPE = 11,              /* internal invariant violation */
    CFQ_ERROR_IO = 12,
    CFQ_ERROR_INTERNAL = 13
} cfq_status;

const char* cfq_status_name(cfq_status status);

/* Message describing the calling thread's most recent failure. */
const char* cfq_last_error(void);

void cfq_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Rationals and finite continued fractions                            */
/* ------------------------------------------------------------------ */

/* Continued fraction of num/den as a JSON array, e.g. ["4","2","6","7"]. */
cfq_status cfq_rational_cf(const char* num, const char* den, char** out_json);

/* Exact value of a digit array (trailing 1 allowed). */
cfq_status cfq_cf_eval(const char* digits_json, char** out_num, char** out_den);

/* The other member of the two-representation pair: [.., a] <-> [.., a-1, 1]. */
cfq_status cfq_cf_alternate(const char* digits_json, char** out_json);

/* Largest t with t*t <= m. */
cfq_status cfq_isqrt(const char* m, char** out);

/* ------------------------------------------------------------------ */
/* Quadratic surds (p + sqrt(d)) / q                                   */
/* ------------------------------------------------------------------ */

typedef struct cfq_surd cfq_surd; /* opaque; canonical form is kept inside */

cfq_status cfq_surd_create(const char* p, const char* d, const char* q, cfq_surd** out);
cfq_status cfq_surd_from_sqrt(const char* n, cfq_surd** out);

/* Chosen root of A x^2 + B x + C (larger_root != 0 picks the bigger one). */
cfq_status cfq_surd_from_polynomial(const char* a, const char* b, const char* c, int larger_root,
                                    cfq_surd** out);

void cfq_surd_free(cfq_surd* s);

/* Canonical triple as {"p":..,"d":..,"q":..}. */
cfq_status cfq_surd_json(const cfq_surd* s, char** out_json);

cfq_status cfq_surd_conjugate(const cfq_surd* s, cfq_surd** out);
cfq_status cfq_surd_floor(const cfq_surd* s, char** out);

/* Galois criterion: s > 1 and conjugate in (-1, 0). */
cfq_status cfq_surd_is_reduced(const cfq_surd* s, int* out);

/* Expansion as {"preperiod":[..],"period":[..]}; d must not be a square. */
cfq_status cfq_surd_expand(const cfq_surd* s, char** out_json);

/* ------------------------------------------------------------------ */
/* sqrt(N)                                                             */
/* ------------------------------------------------------------------ */

/* {"N":..,"n":..,"j":..,"body":[..],"last":..,"period_length":..} */
cfq_status cfq_sqrt_cf(const char* n, char** out_json);

cfq_status cfq_sqrt_period_length(const char* n, unsigned long long* out);

/* Radicand of the fraction [n, (body.., 2n) repeated]; body must be a
 * palindrome given as a JSON array. Result is num/den in lowest terms. */
cfq_status cfq_sqrt_reconstruct(const char* n, const char* body_json, char** out_num,
                                char** out_den);

/* ------------------------------------------------------------------ */
/* Batch verification                                                  */
/* ------------------------------------------------------------------ */

/* Compares every catalogue rule against the expansion for all n <= n_max. */
cfq_status cfq_verify_observations(const char* n_max, char** out_json);

/* Best-approximation, 1/(2q^2) and Legendre checks against sqrt(N). */
cfq_status cfq_approx_check(const char* n, unsigned upto_index, const char* q_max,
                            char** out_json);

typedef struct cfq_scan_config {
    const char* n_min;         /* decimal, >= 2 */
    const char* n_max;         /* decimal, >= n_min */
    const char* checks;        /* comma-separated predicate names; NULL = all */
    const char* out_path;      /* JSONL record file; NULL = summary only */
    int emit_digits_max;       /* <= 0 means the default of 64 */
    int jobs;                  /* <= 0 means 1 */
} cfq_scan_config;

/* Runs the range scan and returns the summary JSON. Predicate failures are
 * data in the summary, not errors. */
cfq_status cfq_scan_run(const cfq_scan_config* config, char** out_summary_json);

#ifdef __cplusplus
}
#endif

#endif /* CFQUAD_H */
