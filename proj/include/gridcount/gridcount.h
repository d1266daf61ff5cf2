/*
 * gridcount: exact and asymptotic counts of lines and segments through the
 * points of an n x n integer grid.
 *
 * Plain C interface to the gridcount library. Every fallible call returns a
 * gc_status; on failure the message is available from gc_last_error() on the
 * calling thread until the next failing call on that thread.
 *
 * Exact counts exceed 64 bits for n above roughly 4e4 and are passed as
 * gc_int128 (two's complement, split into halves). Use gc_int128_format for
 * decimal output.
 */
#ifndef GRIDCOUNT_GRIDCOUNT_H
#define GRIDCOUNT_GRIDCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GRIDCOUNT_BUILDING)
#    define GC_API __declspec(dllexport)
#  else
#    define GC_API __declspec(dllimport)
#  endif
#else
#  define GC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
    GC_OK = 0,
    GC_ERR_INVALID_ARGUMENT = 1,
    GC_ERR_PRECONDITION = 2,
    GC_ERR_RESOURCE_LIMIT = 3,
    GC_ERR_INTERNAL = 4
} gc_status;

typedef struct gc_int128 {
    uint64_t lo;
    int64_t hi;
} gc_int128;

/* Immutable totient table; safe to share between threads once created. */
typedef struct gc_table gc_table;

typedef struct gc_lemma {
    uint64_t m;
    uint64_t t;
    gc_int128 s1_doubled;
    gc_int128 s2_doubled;
} gc_lemma;

typedef struct gc_count_set {
    uint64_t n;
    uint64_t q;
    gc_int128 f;
    gc_int128 segments;
    int has_lines; /* lines_* are set only when q >= 2 */
    gc_int128 lines_at_least;
    gc_int128 lines_exactly;
} gc_count_set;

typedef struct gc_scan_row {
    uint64_t n;
    uint64_t q;
    gc_int128 exact;
    double main;
    double residual;
    double normalized;
} gc_scan_row;

typedef struct gc_slope_fit {
    double slope;
    double intercept;
    uint64_t points_used;
    uint64_t n_min;
    uint64_t n_max;
} gc_slope_fit;

typedef enum gc_slope_class {
    GC_SLOPE_BELOW_RH = 0,
    GC_SLOPE_BETWEEN_RH_AND_ENVELOPE = 1,
    GC_SLOPE_ABOVE_ENVELOPE = 2
} gc_slope_class;

typedef struct gc_rh_report {
    gc_slope_class classification;
    const char* label;      /* static storage */
    const char* disclaimer; /* static storage */
} gc_rh_report;

/* Errors and formatting */
GC_API const char* gc_last_error(void);
GC_API const char* gc_status_name(gc_status status);
GC_API gc_status gc_int128_format(gc_int128 value, char* buffer, size_t buffer_size);
GC_API uint64_t gc_max_grid_side(void);

/* Totient table */
GC_API size_t gc_table_footprint(uint64_t limit);
/* memory_budget_bytes = 0 selects the default budget (1 GiB). */
GC_API gc_status gc_table_create(uint64_t limit, size_t memory_budget_bytes, gc_table** out);
GC_API void gc_table_destroy(gc_table* table);
GC_API uint64_t gc_table_limit(const gc_table* table);
GC_API gc_status gc_phi(const gc_table* table, uint64_t i, uint32_t* out);
GC_API gc_status gc_summatory_phi(const gc_table* table, uint64_t i, uint64_t* out);
GC_API gc_status gc_e_phi(const gc_table* table, uint64_t i, double* out);
GC_API gc_status gc_e_r(const gc_table* table, uint64_t i, double* out);
GC_API gc_status gc_check_partial_summation(const double* a, const double* b, size_t length,
                                            int* out);

/* Exact counts */
GC_API uint64_t gc_required_limit(uint64_t n, uint64_t q);
GC_API gc_status gc_f_direct(uint64_t n, uint64_t q, gc_int128* out);
GC_API gc_status gc_f_fast(const gc_table* table, uint64_t n, uint64_t q, gc_int128* out);
GC_API gc_status gc_decompose_lemma(const gc_table* table, uint64_t n, uint64_t q, gc_lemma* out);
GC_API gc_status gc_segments_count(const gc_table* table, uint64_t n, uint64_t p, gc_int128* out);
GC_API gc_status gc_lines_at_least(const gc_table* table, uint64_t n, uint64_t q, gc_int128* out);
GC_API gc_status gc_lines_exactly(const gc_table* table, uint64_t n, uint64_t q, gc_int128* out);
GC_API gc_status gc_threshold_count(const gc_table* table, uint64_t n, gc_int128* out);
GC_API gc_status gc_count_set_compute(const gc_table* table, uint64_t n, uint64_t q,
                                      gc_count_set* out);

/* Brute-force oracles. `counts` receives counts[p] for p = 0..n and must hold
 * n + 1 entries; indices 0 and 1 are always 0. */
GC_API gc_status gc_oracle_line_histogram(uint64_t n, int force, uint64_t* counts,
                                          size_t counts_length);
GC_API gc_status gc_oracle_segment_census(uint64_t n, int force, uint64_t* counts,
                                          size_t counts_length);
GC_API gc_status gc_oracle_segments(uint64_t n, uint64_t p, int force, uint64_t* out);
GC_API gc_status gc_oracle_threshold_count(uint64_t n, int force, uint64_t* out);

/* Asymptotics */
GC_API gc_status gc_main_term_f(uint64_t n, uint64_t q, double* out);
GC_API gc_status gc_main_term_segments(uint64_t n, uint64_t q, double* out);
GC_API gc_status gc_main_term_lines_ge(uint64_t n, uint64_t q, double* out);
GC_API gc_status gc_main_term_lines_eq(uint64_t n, uint64_t q, double* out);
GC_API gc_status gc_residual(const gc_table* table, uint64_t n, uint64_t q, double* out);
/* rows must hold `count` entries. threads = 0 uses the hardware concurrency;
 * results are identical for every thread count. */
GC_API gc_status gc_scan_residuals(const gc_table* table, uint64_t q, const uint64_t* n_values,
                                   size_t count, double exponent, unsigned threads,
                                   gc_scan_row* rows);
GC_API gc_status gc_fit_log_exponent(const gc_scan_row* rows, size_t count, gc_slope_fit* out);
GC_API gc_status gc_rh_report_classify(const gc_slope_fit* fit, gc_rh_report* out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDCOUNT_GRIDCOUNT_H */
