#ifndef FSLR_FSLR_H
#define FSLR_FSLR_H

/*
 * C interface to the factorial Schur / Littlewood-Richardson engine.
 *
 * Conventions
 *   - Every function returns an fslr_status.  On failure the context keeps a
 *     human-readable message, retrievable with fslr_last_error().
 *   - Objects are opaque handles created by the library and released with
 *     the matching *_free function.  Passing NULL to a *_free is a no-op.
 *   - Strings returned through char** are heap-allocated by the library and
 *     must be released with fslr_string_free().
 *   - Partitions are passed as (parts, length); trailing zeros are allowed.
 *     A multishape is passed as a flat array of all parts plus an array of
 *     per-diagram lengths, diagrams in order lambda^(1), lambda^(2), ...
 *   - A context may be shared between threads; it serialises access to its
 *     memo tables internally.  The last-error message is per context, so
 *     threads that need reliable messages should use separate contexts.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FSLR_BUILDING_LIBRARY)
#    define FSLR_API __declspec(dllexport)
#  else
#    define FSLR_API __declspec(dllimport)
#  endif
#else
#  define FSLR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fslr_status {
  FSLR_OK = 0,
  FSLR_INVALID_ARGUMENT = 1, /* malformed partition, shape, n, suite name, ... */
  FSLR_PARSE_ERROR = 2,      /* malformed JSON or specialization text */
  FSLR_OUT_OF_RANGE = 3,     /* index outside its documented range */
  FSLR_CHECK_FAILED = 4,     /* a requested cross-check or verification failed */
  FSLR_INTERNAL_ERROR = 5,   /* unexpected failure inside the engine */
  FSLR_NULL_ARGUMENT = 6     /* a required pointer argument was NULL */
} fslr_status;

typedef enum fslr_format {
  FSLR_FORMAT_JSON = 0,
  FSLR_FORMAT_LATEX = 1,
  FSLR_FORMAT_PLAIN = 2
} fslr_format;

typedef enum fslr_direction {
  FSLR_SCHUR_TO_FACTORIAL = 0, /* s_lambda(x) = sum_mu d^mu s_mu(x | y) */
  FSLR_FACTORIAL_TO_SCHUR = 1  /* s_lambda(x | y) = sum_mu c^mu s_mu(x) */
} fslr_direction;

typedef enum fslr_method {
  FSLR_METHOD_DET = 0,     /* direct determinant */
  FSLR_METHOD_DUAL = 1,    /* determinant of the complementary partitions */
  FSLR_METHOD_TABLEAU = 2  /* barred-tableau rule (through the duality for d) */
} fslr_method;

typedef enum fslr_tableau_set {
  FSLR_TABLEAUX_ALL = 0, /* every barred tableau of the shape */
  FSLR_TABLEAUX_LR = 1   /* Yamanouchi tableaux, optionally of a fixed content */
} fslr_tableau_set;

typedef struct fslr_context fslr_context;
typedef struct fslr_poly fslr_poly;
typedef struct fslr_table fslr_table;
typedef struct fslr_tableau_list fslr_tableau_list;
typedef struct fslr_specialization fslr_specialization;

/* ---- library and context ---------------------------------------------- */

FSLR_API const char* fslr_version(void);
FSLR_API fslr_status fslr_context_new(fslr_context** out);
FSLR_API void fslr_context_free(fslr_context* ctx);
/* Message describing the most recent failure on ctx ("" if none). */
FSLR_API const char* fslr_last_error(const fslr_context* ctx);
FSLR_API void fslr_string_free(char* s);

/* ---- polynomials ---------------------------------------------------------- */

FSLR_API void fslr_poly_free(fslr_poly* p);
FSLR_API fslr_status fslr_poly_to_string(fslr_context* ctx, const fslr_poly* p, fslr_format format, char** out);
FSLR_API fslr_status fslr_poly_from_json(fslr_context* ctx, const char* json, fslr_poly** out);
FSLR_API int fslr_poly_equal(const fslr_poly* a, const fslr_poly* b);
FSLR_API int fslr_poly_is_zero(const fslr_poly* p);

/* ---- coefficient tables --------------------------------------------------- */

FSLR_API void fslr_table_free(fslr_table* t);
FSLR_API fslr_status fslr_table_to_string(fslr_context* ctx, const fslr_table* t, fslr_format format, char** out);
FSLR_API fslr_status fslr_table_from_json(fslr_context* ctx, const char* json, fslr_table** out);
/* Number of nonzero entries. */
FSLR_API size_t fslr_table_size(const fslr_table* t);
/* Coefficient of mu (a new polynomial, zero when absent). */
FSLR_API fslr_status fslr_table_get(fslr_context* ctx, const fslr_table* t, const int* mu, size_t mu_len,
                                    fslr_poly** out);
/* Compares coefficients only (shape, n and basis labels are ignored). */
FSLR_API int fslr_table_equal(const fslr_table* a, const fslr_table* b);

/* ---- y specializations ------------------------------------------------------ */

FSLR_API fslr_status fslr_specialization_new(fslr_context* ctx, fslr_specialization** out);
FSLR_API void fslr_specialization_free(fslr_specialization* s);
/* "y<i>=0" zeroes family i; "y<i>_<j>=<int>" sets one variable. */
FSLR_API fslr_status fslr_specialization_add(fslr_context* ctx, fslr_specialization* s, const char* assignment);
FSLR_API fslr_status fslr_specialize_table(fslr_context* ctx, const fslr_table* t, const fslr_specialization* s,
                                           fslr_table** out);
FSLR_API fslr_status fslr_specialize_poly(fslr_context* ctx, const fslr_poly* p, const fslr_specialization* s,
                                          fslr_poly** out);

/* ---- Littlewood-Richardson expansion -------------------------------------- */

/* mu -> c^mu(y) for the product s_{lambda^(1)}(x | y^(1)) ... s_{lambda^(r)}(x | y^(r)). */
FSLR_API fslr_status fslr_expand(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                                 fslr_table** out);
/* The same table computed by alternant extraction, without tableaux. */
FSLR_API fslr_status fslr_expand_oracle(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                                        fslr_table** out);
/* A single coefficient c^mu(y) by the tableau rule. */
FSLR_API fslr_status fslr_coefficient(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                                      const int* mu, size_t mu_len, fslr_poly** out);
FSLR_API fslr_status fslr_coefficient_oracle(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r,
                                             int n, const int* mu, size_t mu_len, fslr_poly** out);
/* Coefficient of s_mu(x | y^(target_family)) in the product. */
FSLR_API fslr_status fslr_e_coefficient(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                                        const int* mu, size_t mu_len, int target_family, fslr_poly** out);

/* ---- tableaux ---------------------------------------------------------------- */

/* mu may be NULL (any content).  With FSLR_TABLEAUX_ALL a non-NULL mu keeps
 * only tableaux of that unbarred content. */
FSLR_API fslr_status fslr_tableaux(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                                   fslr_tableau_set set, const int* mu, size_t mu_len, fslr_tableau_list** out);
FSLR_API void fslr_tableau_list_free(fslr_tableau_list* list);
FSLR_API size_t fslr_tableau_list_size(const fslr_tableau_list* list);
/* JSON object (format JSON) or ASCII drawing (format PLAIN) of entry k. */
FSLR_API fslr_status fslr_tableau_list_get(fslr_context* ctx, const fslr_tableau_list* list, size_t k,
                                           fslr_format format, char** out);

/* ---- change of basis --------------------------------------------------------- */

/* m <= 0 selects the smallest admissible m for FSLR_METHOD_DUAL. */
FSLR_API fslr_status fslr_change_basis(fslr_context* ctx, const int* lambda, size_t lambda_len, int n,
                                       fslr_direction direction, fslr_method method, int m, int family,
                                       fslr_table** out);

/* ---- verification ------------------------------------------------------------ */

typedef struct fslr_verify_bounds {
  int max_boxes;
  int max_size;
  int n;
  int r;
  uint64_t seed;
  int random_samples;
} fslr_verify_bounds;

/* max_boxes 6, max_size 4, n 3, r 3, seed 1, random_samples 0. */
FSLR_API fslr_verify_bounds fslr_verify_default_bounds(void);
/* Runs the named suite ("all" for every suite).  The report (JSON array of
 * per-suite objects, or plain text) is written to *report even when a check
 * fails, in which case FSLR_CHECK_FAILED is returned. */
FSLR_API fslr_status fslr_verify(fslr_context* ctx, const char* suite, const fslr_verify_bounds* bounds,
                                 fslr_format format, char** report);

#ifdef __cplusplus
}
#endif

#endif /* FSLR_FSLR_H */
