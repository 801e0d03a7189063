/*
 * landaulab - zeta-zero exponential sums, cycle statistics and empirical
 * distributions, behind a C ABI.
 *
 * All functions returning ll_status report failure through the code and
 * leave outputs untouched; ll_last_error() returns a thread-local message
 * for the most recent failing call on this thread. Objects are opaque
 * handles owned by the caller via the matching *_free function. Handles are
 * immutable after creation and may be shared across threads.
 */

#ifndef LANDAULAB_H
#define LANDAULAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LL_API __declspec(dllexport)
#else
#define LL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ll_status {
    LL_OK = 0,
    LL_ERR_DOMAIN = 1,     /* argument outside the mathematical domain */
    LL_ERR_PARSE = 2,      /* malformed input text */
    LL_ERR_VALIDATION = 3, /* data violates a table invariant */
    LL_ERR_COVERAGE = 4,   /* request exceeds the zero table's height range */
    LL_ERR_INCOMPLETE = 5, /* zero search failed its completeness certificate */
    LL_ERR_GEOMETRY = 6,   /* histogram window/bin mismatch */
    LL_ERR_IO = 7,
    LL_ERR_INVALID = 8,    /* invalid argument */
    LL_ERR_INTERNAL = 9
} ll_status;

LL_API const char* ll_status_name(ll_status status);
LL_API const char* ll_last_error(void);

/* ------------------------------------------------------------------ zeros */

typedef struct ll_table ll_table;

/* First `count` zero ordinates, Gram-block certified, refined to 1e-9.
 * threads = 0 means hardware concurrency. */
LL_API ll_status ll_table_compute(uint64_t count, unsigned threads, ll_table** out);

/* Zero-table text: one decimal ordinate per non-comment line, '#' comments,
 * optional "BASE <decimal>" first data line. base_offset may be NULL. */
LL_API ll_status ll_table_parse_file(const char* path, double precision,
                                     const double* base_offset, ll_table** out);
LL_API ll_status ll_table_parse_text(const char* text, double precision,
                                     const double* base_offset, ll_table** out);

LL_API ll_status ll_table_write_file(const ll_table* table, const char* path);
LL_API void ll_table_free(ll_table* table);

LL_API uint64_t ll_table_size(const ll_table* table);
LL_API double ll_table_precision(const ll_table* table);
LL_API int ll_table_is_computed(const ll_table* table);
/* Borrowed pointer to ll_table_size() ascending ordinates; valid while the
 * table lives. */
LL_API const double* ll_table_ordinates(const ll_table* table);

/* N(T) restricted to the table; coverage error beyond the last ordinate. */
LL_API ll_status ll_table_count_below(const ll_table* table, double T, uint64_t* out);

LL_API double ll_main_term(double T);
LL_API ll_status ll_riemann_siegel_theta(double t, double* out);
LL_API ll_status ll_riemann_siegel_z(double t, double* out);
LL_API ll_status ll_gram_point(int64_t n, double* out);

/* ------------------------------------------------------------- arithmetic */

typedef struct ll_frequency {
    double a;        /* log x */
    double x;        /* e^a */
    double lambda_x; /* von Mangoldt value at x */
    int prime_power; /* nonzero iff x = p^k was certified */
    uint64_t p;
    unsigned k;
} ll_frequency;

LL_API ll_status ll_frequency_from_a(double a, ll_frequency* out);
LL_API ll_status ll_frequency_from_prime_power(uint64_t p, unsigned k, ll_frequency* out);
LL_API ll_status ll_frequency_from_integer(uint64_t x, ll_frequency* out);
LL_API ll_status ll_von_mangoldt(uint64_t m, double* out);
LL_API double ll_predicted_landau_limit(const ll_frequency* freq);
LL_API void ll_predicted_eta_mean(const ll_frequency* freq, double h, double* re, double* im);

/* ------------------------------------------------------------ landau sums */

typedef struct ll_scan_point {
    double a, T, lambda, normalized, predicted, residual;
} ll_scan_point;

LL_API ll_status ll_lambda_sum(const ll_table* table, double a, double T, unsigned threads,
                               double* out);
/* out must hold n_a entries; the grid must be strictly ascending. */
LL_API ll_status ll_landau_scan(const ll_table* table, const double* a_grid, uint64_t n_a,
                                double T, unsigned threads, ll_scan_point* out);
/* residuals must hold n_t entries; slope may be NULL. */
LL_API ll_status ll_landau_convergence(const ll_table* table, const ll_frequency* freq,
                                       const double* t_list, uint64_t n_t, unsigned threads,
                                       double* residuals, double* slope);

/* ------------------------------------------------------------ cycle stats */

typedef struct ll_cycle_sample {
    int64_t n;
    double a, h;
    double re, im; /* eta_{a,h}(n) */
} ll_cycle_sample;

typedef struct ll_orbit_sample {
    double tau, a;
    double re, im; /* H_a(tau) */
    int64_t nu;    /* window count nu_a(tau) */
    double center; /* orbit center */
    int boundary_hit;
} ll_orbit_sample;

/* out must hold n_max - n_min + 1 entries; n_min >= 1. */
LL_API ll_status ll_eta_series(const ll_table* table, double a, double h, int64_t n_min,
                               int64_t n_max, unsigned threads, ll_cycle_sample* out);
LL_API ll_status ll_h_sample(const ll_table* table, double a, double tau,
                             ll_orbit_sample* out);
/* Equally spaced, endpoints included; out must hold `samples` entries. */
LL_API ll_status ll_h_trace(const ll_table* table, double a, double tau_start, double tau_end,
                            uint64_t samples, unsigned threads, ll_orbit_sample* out);
LL_API ll_status ll_nu_count(const ll_table* table, double a, double tau, int64_t* out);
LL_API ll_status ll_eta_h_gap(const ll_table* table, double a, double h, int64_t n,
                              double* out);
LL_API ll_status ll_nu_integral(const ll_table* table, double a, double T, double* out);

/* ---------------------------------------------------------- distributions */

typedef struct ll_histogram ll_histogram;

/* Mean +- 4 standard deviations per axis. */
LL_API ll_status ll_window_from_samples(const double* re, const double* im, uint64_t n,
                                        double window[4]);
/* window is {re_lo, re_hi, im_lo, im_hi}; bins are half-open [lo, hi). */
LL_API ll_status ll_histogram_build(const double* re, const double* im, uint64_t n,
                                    const double window[4], uint32_t nx, uint32_t ny,
                                    unsigned threads, ll_histogram** out);
/* Average over `steps` rotations of radius; mass leaving the window is added
 * to out_of_range, never dropped silently. */
LL_API ll_status ll_histogram_convolve(const ll_histogram* grid, double radius,
                                       uint32_t steps, ll_histogram** out);
/* Total-variation distance of the normalized in-window densities, in [0,1]. */
LL_API ll_status ll_histogram_distance(const ll_histogram* g1, const ll_histogram* g2,
                                       double* out);
LL_API void ll_histogram_free(ll_histogram* grid);

LL_API uint32_t ll_histogram_nx(const ll_histogram* grid);
LL_API uint32_t ll_histogram_ny(const ll_histogram* grid);
LL_API void ll_histogram_window(const ll_histogram* grid, double window[4]);
LL_API double ll_histogram_total(const ll_histogram* grid);
LL_API double ll_histogram_out_of_range(const ll_histogram* grid);
/* Borrowed pointer to nx*ny weights, row-major [ix + nx*iy]. */
LL_API const double* ll_histogram_weights(const ll_histogram* grid);

/* Pairwise total-variation distances between k contiguous blocks of the
 * stream, binned on a common window; out must hold k*(k-1)/2 entries. */
LL_API ll_status ll_stationarity_split(const double* re, const double* im, uint64_t n, int k,
                                       uint32_t nx, uint32_t ny, unsigned threads,
                                       double* out);

/* ----------------------------------------------------- artifact emission */

/* Deterministic CSV/SVG artifacts (12 significant digits, byte-stable across
 * runs and thread counts). */
LL_API ll_status ll_emit_landau_csv(const ll_scan_point* points, uint64_t n,
                                    const char* path);
LL_API ll_status ll_emit_eta_csv(const ll_cycle_sample* samples, uint64_t n,
                                 const char* path);
LL_API ll_status ll_emit_trace_csv(const ll_orbit_sample* samples, uint64_t n,
                                   const char* path);
LL_API ll_status ll_emit_hist_csv(const ll_histogram* grid, const char* path);
LL_API ll_status ll_emit_scatter_svg(const double* x, const double* y, uint64_t n,
                                     const char* path);

/* ----------------------------------------------------------------- verify */

/* Runs the verification suite: quick mode needs 1e4 zeros, full mode 1e5.
 * Writes a JSON report (caller frees with ll_string_free); all_pass is 1
 * only if every criterion ran and passed. scratch_dir (may be NULL) holds
 * determinism-check artifacts. */
LL_API ll_status ll_verify(const ll_table* table, int quick, unsigned threads,
                           const char* scratch_dir, char** json_report, int* all_pass);
LL_API void ll_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* LANDAULAB_H */
