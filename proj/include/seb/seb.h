// Copyright 2026 The SEB Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the smallest-enclosing-ball toolkit.
 *
 * Objects are opaque handles created by *_create / *_from_* functions and
 * released by the matching *_destroy. Every fallible call returns a
 * seb_status; on failure seb_last_error_message() describes the cause for
 * the calling thread. Vectors are passed as contiguous doubles, point sets
 * row-major (one point per row). String outputs follow the size-query
 * convention: *size receives the required length including the terminating
 * NUL; with buffer == NULL only the size is reported.
 */

#ifndef SEB_SEB_H_
#define SEB_SEB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SEB_API __declspec(dllexport)
#else
#define SEB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum seb_status {
  SEB_OK = 0,
  SEB_ERR_INVALID_ARGUMENT = 1,
  SEB_ERR_DIMENSION_MISMATCH = 2,
  SEB_ERR_PARSE = 3,
  SEB_ERR_NON_CONVERGENCE = 4,
  SEB_ERR_EMPTY_INTERIOR = 5,
  SEB_ERR_UNSUPPORTED_REGIME = 6,
  SEB_ERR_SINGULAR_MATRIX = 7,
  SEB_ERR_SINGULAR_TRANSFORM = 8,
  SEB_ERR_COMBINATORIAL_BLOWUP = 9,
  SEB_ERR_DIMENSION_TOO_LARGE = 10,
  SEB_ERR_VALIDATION_FAILURE = 11,
  SEB_ERR_EMPTY_CLOUD = 12,
  SEB_ERR_BUFFER_TOO_SMALL = 13,
  SEB_ERR_INTERNAL = 14
} seb_status;

typedef enum seb_regime {
  SEB_REGIME_CONVEX = 0,
  SEB_REGIME_CRITICAL = 1,
  SEB_REGIME_UNSUPPORTED = 2
} seb_regime;

typedef enum seb_solution_status {
  SEB_SOLUTION_CERTIFIED_OPTIMAL = 0,
  SEB_SOLUTION_UPPER_BOUND_ONLY = 1,
  SEB_SOLUTION_EMPTY_INTERIOR = 2,
  SEB_SOLUTION_DEGENERATE_POINT = 3
} seb_solution_status;

typedef enum seb_sampling_method {
  SEB_SAMPLING_REJECTION = 0,
  SEB_SAMPLING_HIT_AND_RUN = 1
} seb_sampling_method;

typedef struct seb_instance seb_instance;
typedef struct seb_solution seb_solution;
typedef struct seb_map seb_map;

/* Errors */
SEB_API const char* seb_status_name(seb_status status);
SEB_API const char* seb_last_error_message(void);

/* Instances. centers holds count rows of length dimension. */
SEB_API seb_status seb_instance_create(size_t dimension, size_t count,
                                       const double* centers,
                                       const double* radii,
                                       seb_instance** out);
SEB_API seb_status seb_instance_from_json(const char* text,
                                          seb_instance** out);
SEB_API seb_status seb_instance_read_file(const char* path,
                                          seb_instance** out);
SEB_API seb_status seb_instance_to_json(const seb_instance* instance,
                                        int pretty, char* buffer,
                                        size_t* size);
SEB_API void seb_instance_destroy(seb_instance* instance);
SEB_API size_t seb_instance_dimension(const seb_instance* instance);
SEB_API size_t seb_instance_count(const seb_instance* instance);
/* Optional "target" ball of an instance file; 0 when absent. */
SEB_API int seb_instance_has_target(const seb_instance* instance);
SEB_API seb_status seb_instance_target(const seb_instance* instance,
                                       double* center, double* radius);

/* Regime from rank{a_1, ..., a_m}. */
SEB_API seb_status seb_classify(const seb_instance* instance,
                                int* rank_centers, seb_regime* regime);
SEB_API seb_status seb_numerical_rank(const double* vectors, size_t count,
                                      size_t dimension, double tol,
                                      int* rank);

/* Solving */
typedef struct seb_solve_options {
  double tol_gap; /* <= 0 selects 1e-10 (1 + |q(uniform)|) */
  int max_iter;   /* <= 0 selects 200 m + 10000 */
  int refine;     /* support refinement after each Frank-Wolfe step */
} seb_solve_options;

typedef struct seb_solution_info {
  seb_solution_status status;
  double radius;
  double qp_value;
  double fw_gap;
  int iterations;
  int converged;
  int rank_centers;
  int rank_shifted;
  seb_regime regime;
} seb_solution_info;

typedef struct seb_certificate_info {
  double alpha;
  double offdiag_norm;
  double beta;
  int psd_ok;
  double residual;
} seb_certificate_info;

SEB_API void seb_solve_options_init(seb_solve_options* options);
/* On SEB_ERR_NON_CONVERGENCE *out still receives the unconverged solution. */
SEB_API seb_status seb_solve(const seb_instance* instance,
                             const seb_solve_options* options,
                             seb_solution** out);
SEB_API void seb_solution_destroy(seb_solution* solution);
SEB_API seb_status seb_solution_get_info(const seb_solution* solution,
                                         seb_solution_info* info);
SEB_API seb_status seb_solution_center(const seb_solution* solution,
                                       double* center);
SEB_API seb_status seb_solution_multipliers(const seb_solution* solution,
                                            double* multipliers);
SEB_API const char* seb_solution_status_name(seb_solution_status status);
SEB_API const char* seb_regime_name(seb_regime regime);

SEB_API seb_status seb_build_certificate(const seb_instance* instance,
                                         const seb_solution* solution,
                                         seb_certificate_info* out);
/* slater_point (length n) may be NULL. */
SEB_API seb_status seb_check_interior(const seb_instance* instance,
                                      const seb_solution* solution,
                                      int* nonempty, double* slater_point);
SEB_API seb_status seb_identity_residual(const seb_instance* instance,
                                         const seb_solution* solution,
                                         const double* x, double* out);
/* Full JSON solve report. verify_count > 0 adds a hit-and-run containment
 * check with that many points. */
SEB_API seb_status seb_solution_report_json(const seb_instance* instance,
                                            const seb_solution* solution,
                                            uint64_t seed,
                                            size_t verify_count, int pretty,
                                            char* buffer, size_t* size);

/* Joint numerical range of (-g, g_1, ..., g_m), g the target ball. */
SEB_API seb_status seb_map_create(const seb_instance* instance,
                                  const double* target_center,
                                  double target_radius, seb_map** out);
SEB_API void seb_map_destroy(seb_map* map);
SEB_API seb_status seb_map_shifted_regime(const seb_map* map, int* rank,
                                          seb_regime* regime);
/* z has length m + 1. */
SEB_API seb_status seb_map_eval(const seb_map* map, const double* x,
                                double* z);
/* count rows of G(x) at Gaussian x, row-major count x (m + 1). */
SEB_API seb_status seb_map_sample(const seb_map* map, size_t count,
                                  uint64_t seed, double* values);

typedef struct seb_verdict {
  int member;
  double margin;
  int has_witness;
} seb_verdict;

/* witness (length n) may be NULL. */
SEB_API seb_status seb_membership_g(const seb_map* map, const double* z,
                                    seb_verdict* verdict, double* witness);
SEB_API seb_status seb_membership_g_bullet(const seb_map* map,
                                           const double* z,
                                           seb_verdict* verdict);

typedef struct seb_probe_options {
  size_t samples;
  uint64_t seed;
  double radius; /* <= 0 selects three times the spread of the centers */
  int threads;
  const double* extra_points; /* extra_count rows of length n, or NULL */
  size_t extra_count;
} seb_probe_options;

SEB_API void seb_probe_options_init(seb_probe_options* options);
/* first_counterexample (length m + 1) may be NULL. */
SEB_API seb_status seb_convexity_probe(const seb_map* map,
                                       const seb_probe_options* options,
                                       size_t* tested,
                                       size_t* counterexamples,
                                       double* first_counterexample);
SEB_API seb_status seb_separation_probe(const seb_map* map,
                                        const seb_probe_options* options,
                                        size_t* tested, size_t* g_hits,
                                        size_t* bullet_hits);

/* Sampling and brute-force oracles. points is count x n, row-major. */
SEB_API seb_status seb_sample_intersection(const seb_instance* instance,
                                           size_t count, uint64_t seed,
                                           seb_sampling_method method,
                                           double* points);
SEB_API seb_status seb_cloud_meb(const double* points, size_t count,
                                 size_t dimension, int iterations,
                                 double* center, double* radius);
SEB_API seb_status seb_farthest_distance(const double* points, size_t count,
                                         size_t dimension,
                                         const double* center, double* out);
/* minimizer (length m) may be NULL. */
SEB_API seb_status seb_grid_oracle(const seb_instance* instance, int k,
                                   double* value, double* minimizer);
/* bound (may be NULL) receives the lattice resolution bound. */
SEB_API seb_status seb_grid_min_maxg(const seb_instance* instance,
                                     int resolution, const double* lo,
                                     const double* hi, double* value,
                                     double* bound);

#ifdef __cplusplus
}
#endif

#endif /* SEB_SEB_H_ */
