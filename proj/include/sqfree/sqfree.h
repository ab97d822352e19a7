/*
 * sqfree C API.
 *
 * Square-free decomposition of univariate polynomials over the rationals
 * through the roots-multiplicity polynomial M_f, built either from the
 * companion matrix of the radical or as a modular product.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return sqf_status; on failure a
 * message is available from sqf_last_error() on the same thread. Output
 * pointers are written only on success.
 */
#ifndef SQFREE_SQFREE_H
#define SQFREE_SQFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(SQF_BUILDING_LIBRARY)
#define SQF_API __attribute__((visibility("default")))
#else
#define SQF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqf_status {
  SQF_OK = 0,
  SQF_ERR_PARSE = 1,     /* malformed polynomial text */
  SQF_ERR_INVALID = 2,   /* argument violates a precondition */
  SQF_ERR_INTEGRITY = 3, /* internal consistency check failed */
  SQF_ERR_IO = 4,        /* file or stream failure */
  SQF_ERR_RANGE = 5,     /* index out of range */
  SQF_ERR_INTERNAL = 6   /* unexpected exception */
} sqf_status;

typedef enum sqf_formula {
  SQF_FORMULA_COMPANION = 0, /* [M_f] = P(C_r) * [g] */
  SQF_FORMULA_MODMUL = 1,    /* M_f = P*g mod r */
  SQF_FORMULA_YUN = 2        /* Yun's algorithm; decomposition only */
} sqf_formula;

typedef struct sqf_poly sqf_poly;
typedef struct sqf_decomposition sqf_decomposition;
typedef struct sqf_bench sqf_bench;

SQF_API const char* sqf_version(void);

/* Message of the last failed call on this thread, "" if none. */
SQF_API const char* sqf_last_error(void);
/* Byte offset of the last SQF_ERR_PARSE on this thread. */
SQF_API size_t sqf_last_error_position(void);

/* Strings returned through char** are released with sqf_string_free. */
SQF_API void sqf_string_free(char* s);

/* ---- polynomials ---- */

SQF_API sqf_status sqf_poly_parse(const char* text, sqf_poly** out);
/* coeffs[i] is the coefficient of X^i as "n" or "n/d". */
SQF_API sqf_status sqf_poly_from_coeffs(const char* const* coeffs, size_t count, sqf_poly** out);
SQF_API void sqf_poly_free(sqf_poly* p);
SQF_API sqf_status sqf_poly_format(const sqf_poly* p, char** out);
SQF_API int sqf_poly_is_zero(const sqf_poly* p);
/* SQF_ERR_INVALID for the zero polynomial, which has no degree. */
SQF_API sqf_status sqf_poly_degree(const sqf_poly* p, size_t* out);
/* Number of stored coefficients (degree + 1, or 0 for zero). */
SQF_API size_t sqf_poly_size(const sqf_poly* p);
SQF_API sqf_status sqf_poly_coeff(const sqf_poly* p, size_t power, char** out);
SQF_API int sqf_poly_equal(const sqf_poly* a, const sqf_poly* b);

/* ---- square-free decomposition ---- */

/*
 * Roots-multiplicity polynomial of f (nonzero, any leading coefficient;
 * f is made monic first). scalar_muls, if non-NULL, receives the number of
 * rational multiplications spent building M_f. SQF_FORMULA_YUN is
 * rejected.
 */
SQF_API sqf_status sqf_mf(const sqf_poly* f, sqf_formula formula, sqf_poly** out,
                          uint64_t* scalar_muls);

SQF_API sqf_status sqf_decompose(const sqf_poly* f, sqf_formula formula,
                                 sqf_decomposition** out);
SQF_API void sqf_decomposition_free(sqf_decomposition* d);
/* Number of levels m, including interior levels where P_k = 1. */
SQF_API size_t sqf_decomposition_count(const sqf_decomposition* d);
SQF_API sqf_status sqf_decomposition_factor(const sqf_decomposition* d, size_t index,
                                            unsigned* exponent, sqf_poly** factor);
SQF_API sqf_status sqf_decomposition_lead(const sqf_decomposition* d, char** out);
/* *valid = 1 iff d is a square-free decomposition of f. */
SQF_API sqf_status sqf_decomposition_verify(const sqf_decomposition* d, const sqf_poly* f,
                                            int* valid);

/* ---- random instances and benchmarking ---- */

typedef struct sqf_profile {
  unsigned num_factors;
  unsigned max_factor_degree;
  unsigned max_exponent;
  unsigned coeff_bound;
  uint64_t seed;
} sqf_profile;

/* Benchmark defaults: 3 factors with exponents 1, 2, 3. */
SQF_API void sqf_profile_default(sqf_profile* profile, uint64_t seed);

SQF_API sqf_status sqf_random_instance(const sqf_profile* profile, sqf_poly** out);

typedef struct sqf_bench_record {
  unsigned degree;
  unsigned trial;
  sqf_formula formula;
  size_t s;
  uint64_t wall_ns;
  uint64_t scalar_muls;
} sqf_bench_record;

typedef struct sqf_bench_summary_row {
  unsigned degree;
  double mean_seconds_companion;
  double mean_seconds_modmul;
  double mean_muls_companion;
  double mean_muls_modmul;
} sqf_bench_summary_row;

/* Runs sequentially on the calling thread. */
SQF_API sqf_status sqf_bench_run(const unsigned* degrees, size_t num_degrees, unsigned trials,
                                 const sqf_profile* profile, sqf_bench** out);
SQF_API void sqf_bench_free(sqf_bench* b);
SQF_API size_t sqf_bench_count(const sqf_bench* b);
SQF_API sqf_status sqf_bench_record_at(const sqf_bench* b, size_t index, sqf_bench_record* out);
SQF_API size_t sqf_bench_summary_count(const sqf_bench* b);
SQF_API sqf_status sqf_bench_summary_at(const sqf_bench* b, size_t index,
                                        sqf_bench_summary_row* out);
SQF_API sqf_status sqf_bench_csv(const sqf_bench* b, char** out);
SQF_API sqf_status sqf_bench_write_csv(const sqf_bench* b, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* SQFREE_SQFREE_H */
