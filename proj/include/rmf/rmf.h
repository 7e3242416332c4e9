/*
 * C API for the regionalized metric framework library.
 *
 * All functions returning rmf_status report RMF_OK on success; on failure
 * a human-readable message is available from rmf_last_error() until the
 * next failing call on the same thread. Objects returned through `out`
 * parameters are owned by the caller and released with the matching
 * _destroy function.
 */
#ifndef RMF_RMF_H
#define RMF_RMF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RMF_API __declspec(dllexport)
#else
#define RMF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rmf_status {
  RMF_OK = 0,
  RMF_ERROR_INVALID_ARGUMENT = 1, /* null handles, bad enum values */
  RMF_ERROR_DOMAIN = 2,           /* empty sets, degenerate geometry, bad dims */
  RMF_ERROR_PARSE = 3,            /* malformed input files */
  RMF_ERROR_IO = 4,               /* unreadable or unwritable paths */
  RMF_ERROR_INTERNAL = 5
} rmf_status;

typedef enum rmf_region {
  RMF_REGION_ON_FRONT = 0,
  RMF_REGION_1 = 1,
  RMF_REGION_2 = 2,
  RMF_REGION_3 = 3
} rmf_region;

typedef enum rmf_front_shape {
  RMF_FRONT_CONVEX_SQRT = 0, /* f2 = 1 - sqrt(f1) */
  RMF_FRONT_CONCAVE_QUAD = 1, /* f2 = 1 - f1^2 */
  RMF_FRONT_LINEAR = 2        /* f2 = 1 - f1 */
} rmf_front_shape;

typedef struct rmf_population rmf_population;
typedef struct rmf_reference_set rmf_reference_set;
typedef struct rmf_evaluation rmf_evaluation;

typedef struct rmf_window_stat {
  double start_f1; /* NaN for the catch-all entry */
  double end_f1;
  int is_catch_all;
  size_t cluster_count;
  double convergence;
  int has_diversity;
  double diversity; /* valid only when has_diversity != 0 */
} rmf_window_stat;

RMF_API const char* rmf_version(void);

/* Message describing the most recent failure on this thread. */
RMF_API const char* rmf_last_error(void);

/* ---- populations (solution sets) ---- */

/* coords holds count*dim doubles, row major; dim is 2 or 3. */
RMF_API rmf_status rmf_population_create(const double* coords, size_t count,
                                         int dim, rmf_population** out);
RMF_API rmf_status rmf_population_load_csv(const char* path,
                                           rmf_population** out);
RMF_API void rmf_population_destroy(rmf_population* pop);
RMF_API size_t rmf_population_size(const rmf_population* pop);
/* 0 for an empty population. */
RMF_API int rmf_population_dim(const rmf_population* pop);
RMF_API rmf_status rmf_population_point(const rmf_population* pop, size_t index,
                                        double* coords_out);

/* ---- reference sets ---- */

RMF_API rmf_status rmf_reference_set_create(const double* coords, size_t count,
                                            int dim, rmf_reference_set** out);
RMF_API rmf_status rmf_reference_set_load_csv(const char* path,
                                              rmf_reference_set** out);
RMF_API rmf_status rmf_reference_set_generate(rmf_front_shape shape,
                                              size_t n_points, double f1_lo,
                                              double f1_hi,
                                              rmf_reference_set** out);
RMF_API rmf_status rmf_reference_set_save_csv(const rmf_reference_set* ref,
                                              const char* path);
RMF_API void rmf_reference_set_destroy(rmf_reference_set* ref);
RMF_API size_t rmf_reference_set_size(const rmf_reference_set* ref);
RMF_API int rmf_reference_set_dim(const rmf_reference_set* ref);
RMF_API rmf_status rmf_reference_set_point(const rmf_reference_set* ref,
                                           size_t index, double* coords_out);
/* Distance from an arbitrary point to the nearest reference point. */
RMF_API rmf_status rmf_reference_set_min_distance(const rmf_reference_set* ref,
                                                  const double* coords, int dim,
                                                  double* out);

/* Loads a pairing file (two zero-based indices per line). Two-call
 * pattern: with pairs_out = NULL the pair count is written to *count_out;
 * otherwise *count_out must hold the buffer capacity in pairs on entry,
 * at most that many pairs (2 indices each) are written, and *count_out is
 * set to the number available in the file. */
RMF_API rmf_status rmf_load_pairs(const char* path, size_t* pairs_out,
                                  size_t* count_out);

/* ---- evaluation ---- */

/*
 * Clusters and grades a population against a reference set.
 *
 * pairs: 2*n_pairs zero-based reference indices, or NULL for the default
 * stride-2 tiling (3D sets require explicit pairs). window_bounds:
 * 2*n_windows f1 bounds (start, end per window) for the local report, or
 * NULL for none.
 */
RMF_API rmf_status rmf_evaluate(const rmf_population* pop,
                                const rmf_reference_set* ref,
                                const size_t* pairs, size_t n_pairs,
                                const double* window_bounds, size_t n_windows,
                                rmf_evaluation** out);
RMF_API void rmf_evaluation_destroy(rmf_evaluation* eval);

RMF_API double rmf_evaluation_convergence(const rmf_evaluation* eval);
RMF_API double rmf_evaluation_diversity(const rmf_evaluation* eval);
RMF_API size_t rmf_evaluation_solution_count(const rmf_evaluation* eval);
RMF_API size_t rmf_evaluation_cluster_count(const rmf_evaluation* eval);

/* Grade of one solution; any output pointer may be NULL. cluster_out is
 * -1 for unclustered solutions. */
RMF_API rmf_status rmf_evaluation_solution(const rmf_evaluation* eval,
                                           size_t index, double* grade_out,
                                           double* raw_grade_out,
                                           rmf_region* region_out,
                                           int64_t* cluster_out);
RMF_API rmf_status rmf_evaluation_cluster(const rmf_evaluation* eval,
                                          size_t index, size_t* member_count_out,
                                          double* mean_grade_out);
/* counts_out[4], indexed by rmf_region. */
RMF_API rmf_status rmf_evaluation_region_counts(const rmf_evaluation* eval,
                                                size_t* counts_out);

RMF_API size_t rmf_evaluation_window_count(const rmf_evaluation* eval);
RMF_API rmf_status rmf_evaluation_window(const rmf_evaluation* eval,
                                         size_t index, rmf_window_stat* out);

/* Writes the JSON report plus the companion plot-data CSV. */
RMF_API rmf_status rmf_evaluation_save_report(const rmf_evaluation* eval,
                                              const char* path);

/* ---- baseline metric and comparison ---- */

RMF_API rmf_status rmf_igd(const rmf_population* pop,
                           const rmf_reference_set* ref, double* out);

/*
 * Combined score over n algorithms given their convergence and diversity
 * values. Outputs (each may be NULL) are indexed like the inputs except
 * ranking_out, where ranking_out[k] is the input index of the rank-k
 * algorithm (best first).
 */
RMF_API rmf_status rmf_combined_score(const double* convergence,
                                      const double* diversity, size_t n,
                                      double alpha, double beta, double* s1_out,
                                      double* s2_out, double* score_out,
                                      size_t* ranking_out);

/* Ranks and writes a comparison report as JSON. */
RMF_API rmf_status rmf_save_comparison(const char* const* names,
                                       const double* convergence,
                                       const double* diversity, size_t n,
                                       double alpha, double beta,
                                       const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RMF_RMF_H */
