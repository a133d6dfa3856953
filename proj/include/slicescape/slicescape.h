/*
 * Copyright 2026 The Slicescape Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the slicescape landscape toolkit.
 *
 * Every object is an opaque handle created by a *_create or producing call and
 * released with the matching *_free. Functions that can fail return an
 * ssc_status; on failure ssc_last_error() describes the problem for the
 * calling thread. Output pointers are written only on success.
 *
 * Handles are immutable after creation and may be shared across threads,
 * with the exception that a handle must not be freed while in use.
 */

#ifndef SLICESCAPE_SLICESCAPE_H_
#define SLICESCAPE_SLICESCAPE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SLICESCAPE_BUILDING)
#define SSC_API __declspec(dllexport)
#else
#define SSC_API __declspec(dllimport)
#endif
#else
#define SSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssc_status {
  SSC_OK = 0,
  SSC_INVALID_ARGUMENT = 1,
  SSC_NUMERIC_FAILURE = 2,
  SSC_UNDEFINED_RESULT = 3,
  SSC_IO_ERROR = 4,
  SSC_INTERNAL_ERROR = 5
} ssc_status;

/* Message for the last failed call on this thread ("" if none). */
SSC_API const char* ssc_last_error(void);
SSC_API const char* ssc_version(void);
SSC_API const char* ssc_status_name(ssc_status status);

/* ---- byte buffers ------------------------------------------------------ */

typedef struct ssc_buffer ssc_buffer;

SSC_API const char* ssc_buffer_data(const ssc_buffer* buffer);
SSC_API size_t ssc_buffer_size(const ssc_buffer* buffer);
SSC_API void ssc_buffer_free(ssc_buffer* buffer);

/* ---- objectives -------------------------------------------------------- */

typedef struct ssc_objective ssc_objective;

SSC_API ssc_status ssc_objective_create_quadratic_k(size_t d, size_t k, double eps,
                                                    ssc_objective** out);
SSC_API ssc_status ssc_objective_create_rastrigin(size_t d, ssc_objective** out);
SSC_API ssc_status ssc_objective_create_bimodal(size_t d, ssc_objective** out);
SSC_API void ssc_objective_free(ssc_objective* objective);

SSC_API size_t ssc_objective_dimension(const ssc_objective* objective);
SSC_API const char* ssc_objective_name(const ssc_objective* objective);
/* 1 when larger values are better (only the bimodal test function). */
SSC_API int ssc_objective_is_maximize(const ssc_objective* objective);
/* Writes the known optimum into out[0..n) when one exists; *has_optimum is
 * set either way. n must equal the dimension. */
SSC_API ssc_status ssc_objective_known_optimum(const ssc_objective* objective,
                                               double* out, size_t n,
                                               int* has_optimum);
SSC_API ssc_status ssc_objective_evaluate(const ssc_objective* objective,
                                          const double* x, size_t n,
                                          uint64_t seed, double* out);
/* Evaluates count points stored row-major in xs (count x n). Point r uses
 * seed + r. Results are independent of the worker count (0 = all cores). */
SSC_API ssc_status ssc_objective_evaluate_batch(const ssc_objective* objective,
                                                const double* xs, size_t count,
                                                size_t n, uint64_t seed,
                                                size_t workers, double* out);

/* The two Gaussian terms of the bimodal function at x[0..n): the dominant
 * term around +1 and the secondary term around -1 before its 0.8 weight. */
SSC_API ssc_status ssc_bimodal_terms(const double* x, size_t n, double* dominant,
                                     double* secondary);

/* ---- pendulum ---------------------------------------------------------- */

typedef enum ssc_action_kind {
  SSC_ACTION_TORQUE = 0,
  SSC_ACTION_TARGET_ANGLE = 1,
  SSC_ACTION_SPLINE_TARGET_ANGLE = 2
} ssc_action_kind;

typedef enum ssc_objective_mode { SSC_MODE_COST = 0, SSC_MODE_REWARD = 1 } ssc_objective_mode;

typedef enum ssc_termination_mode {
  SSC_TERMINATION_NONE = 0,
  SSC_TERMINATION_PLAIN = 1,
  SSC_TERMINATION_ALIVE_BONUS = 2,
  SSC_TERMINATION_PENALTY = 3
} ssc_termination_mode;

typedef struct ssc_task {
  double delta;
  double length;
  double gravity;
  size_t horizon;
  double action_weight;
  ssc_action_kind action_kind;
  double kp;
  double kd;
  size_t spline_spacing;
  ssc_objective_mode objective_mode;
  int termination_enabled;
  double termination_threshold;
  ssc_termination_mode termination_mode;
  double alive_bonus;
  double penalty_per_step;
  double initial_alpha;
  double initial_omega;
} ssc_task;

/* Fills the defaults: delta 0.1, l 0.2, g 0.981, T 100, w 1, torque actions,
 * kp 1, kd -1, spline spacing 10, cost mode, termination off (threshold 2,
 * alive bonus 1, penalty 4), upright start. */
SSC_API void ssc_task_default(ssc_task* task);

/* Number of optimized variables for the task's action parameterization. */
SSC_API ssc_status ssc_task_action_dimension(const ssc_task* task, size_t* out);

SSC_API ssc_status ssc_objective_create_trajectory(const ssc_task* task,
                                                   ssc_objective** out);
/* P-controller policy objective over theta (dimension 1) or (theta, w)
 * (dimension 2, vary_weight != 0). angles may be NULL for the default 10
 * start angles evenly spaced on [-1, 1]. Reward-mode handles are negated. */
SSC_API ssc_status ssc_objective_create_policy(const ssc_task* task,
                                               const double* angles,
                                               size_t n_angles, int vary_weight,
                                               ssc_objective** out);

typedef struct ssc_trajectory ssc_trajectory;

SSC_API ssc_status ssc_rollout(const ssc_task* task, const double* actions,
                               size_t n, ssc_trajectory** out);
SSC_API void ssc_trajectory_free(ssc_trajectory* trajectory);
SSC_API double ssc_trajectory_total(const ssc_trajectory* trajectory);
/* Number of states, including the initial one. */
SSC_API size_t ssc_trajectory_state_count(const ssc_trajectory* trajectory);
SSC_API ssc_status ssc_trajectory_state(const ssc_trajectory* trajectory,
                                        size_t index, double* alpha,
                                        double* omega);
/* Returns 1 and writes *step when the rollout terminated early. */
SSC_API int ssc_trajectory_terminated_at(const ssc_trajectory* trajectory,
                                         size_t* step);

/* Mean episode total (raw, not negated) of the policy theta * alpha. */
SSC_API ssc_status ssc_policy_objective(const ssc_task* task, double theta,
                                        const double* angles, size_t n_angles,
                                        double* out);

/* ---- analysis ---------------------------------------------------------- */

typedef struct ssc_hessian_report ssc_hessian_report;

SSC_API ssc_status ssc_hessian_report_create(const ssc_objective* objective,
                                             const double* x, size_t n, double h,
                                             size_t workers, double rank_tol,
                                             ssc_hessian_report** out);
/* Report for a caller-supplied symmetric n x n row-major matrix. */
SSC_API ssc_status ssc_hessian_report_from_matrix(const double* matrix, size_t n,
                                                  double rank_tol,
                                                  ssc_hessian_report** out);
SSC_API void ssc_hessian_report_free(ssc_hessian_report* report);
SSC_API size_t ssc_hessian_report_dimension(const ssc_hessian_report* report);
/* Ascending eigenvalues into out[0..n). */
SSC_API ssc_status ssc_hessian_report_eigenvalues(const ssc_hessian_report* report,
                                                  double* out, size_t n);
/* Row-major matrix into out[0..n*n). */
SSC_API ssc_status ssc_hessian_report_matrix(const ssc_hessian_report* report,
                                             double* out, size_t n);
SSC_API void ssc_hessian_report_kappa(const ssc_hessian_report* report,
                                      double* kappa, int* infinite,
                                      int* indefinite);
SSC_API double ssc_hessian_report_separability(const ssc_hessian_report* report);
SSC_API ssc_status ssc_hessian_report_to_json(const ssc_hessian_report* report,
                                              int include_matrix,
                                              ssc_buffer** out);

/* Condition number of eigenvalues[0..n): |l|max / |l|min. */
SSC_API ssc_status ssc_condition_number(const double* eigenvalues, size_t n,
                                        double rank_tol, double* kappa,
                                        int* infinite, int* indefinite);

/* 2x2 restriction matrix (row-major into out[4]) of |x[:k]|^2 on span(u, v). */
SSC_API ssc_status ssc_slice_restriction_matrix(const double* u, const double* v,
                                                size_t d, size_t k, double* out);
SSC_API ssc_status ssc_slice_condition_number(const ssc_objective* objective,
                                              const double* center,
                                              const double* u, const double* v,
                                              size_t d, double h, double rank_tol,
                                              double* kappa, int* infinite);

/* ---- slices ------------------------------------------------------------ */

typedef enum ssc_basis_mode {
  SSC_BASIS_ORTHONORMAL = 0,
  SSC_BASIS_UNNORMALIZED = 1
} ssc_basis_mode;

/* Visualization protocol defaults: grid resolution, episodes per cell, and
 * blur sigma. Any pointer may be NULL. */
SSC_API void ssc_visualization_defaults(size_t* resolution, size_t* episodes,
                                        double* blur_sigma);

SSC_API ssc_status ssc_sample_basis(size_t d, uint64_t seed, ssc_basis_mode mode,
                                    double* u, double* v);

typedef struct ssc_grid ssc_grid;

typedef struct ssc_plane {
  const double* center;
  const double* u;
  const double* v;
  size_t dimension;
  double extent;
  size_t resolution;
} ssc_plane;

SSC_API ssc_status ssc_grid_evaluate(const ssc_objective* objective,
                                     const ssc_plane* plane, size_t episodes,
                                     uint64_t seed, size_t workers,
                                     ssc_grid** out);
/* values: resolution^2 entries, index i * resolution + j (i along p1). */
SSC_API ssc_status ssc_grid_from_values(const ssc_plane* plane,
                                        const double* values, const char* label,
                                        ssc_grid** out);
SSC_API ssc_status ssc_grid_from_documents(const char* csv, const char* metadata_json,
                                           ssc_grid** out);
SSC_API void ssc_grid_free(ssc_grid* grid);

SSC_API ssc_status ssc_grid_blur(const ssc_grid* grid, double sigma, ssc_grid** out);
SSC_API ssc_status ssc_grid_normalize(const ssc_grid* grid, ssc_grid** out);

SSC_API size_t ssc_grid_resolution(const ssc_grid* grid);
SSC_API double ssc_grid_extent(const ssc_grid* grid);
SSC_API size_t ssc_grid_failed_count(const ssc_grid* grid);
SSC_API ssc_status ssc_grid_value(const ssc_grid* grid, size_t i, size_t j,
                                  double* value, int* failed);
SSC_API ssc_status ssc_grid_values(const ssc_grid* grid, double* out, size_t count);
SSC_API ssc_status ssc_grid_argmin(const ssc_grid* grid, size_t* i, size_t* j);
SSC_API ssc_status ssc_grid_argmax(const ssc_grid* grid, size_t* i, size_t* j);
/* *passes = 1 when every row, column and main diagonal has discrete second
 * differences >= -tol. */
SSC_API ssc_status ssc_grid_convexity_check(const ssc_grid* grid, double tol,
                                            int* passes);
SSC_API ssc_status ssc_grid_to_csv(const ssc_grid* grid, ssc_buffer** out);
SSC_API ssc_status ssc_grid_metadata_json(const ssc_grid* grid, ssc_buffer** out);

/* ---- rendering --------------------------------------------------------- */

typedef enum ssc_colormap { SSC_COLORMAP_GRAY = 0, SSC_COLORMAP_VIRIDIS = 1 } ssc_colormap;

/* Contour SVG. levels may be NULL (n_levels ignored) for the default 15
 * quantile levels. overlay_xy holds n_overlay (p1, p2) pairs or is NULL. */
SSC_API ssc_status ssc_grid_contour_svg(const ssc_grid* grid, const double* levels,
                                        size_t n_levels, const double* overlay_xy,
                                        size_t n_overlay, ssc_buffer** out);
/* Number of contour chains extracted at the given levels (NULL = default). */
SSC_API ssc_status ssc_grid_contour_count(const ssc_grid* grid, const double* levels,
                                          size_t n_levels, size_t* chains);
SSC_API ssc_status ssc_grid_heightmap_ppm(const ssc_grid* grid, ssc_colormap colormap,
                                          ssc_buffer** out);
SSC_API ssc_status ssc_matrix_heatmap_ppm(const double* matrix, size_t rows,
                                          size_t cols, ssc_buffer** out);
/* Multi-curve line chart. Curve c has lengths[c] points xs[c][k], ys[c][k]. */
SSC_API ssc_status ssc_curves_svg(size_t n_curves, const char* const* labels,
                                  const double* const* xs, const double* const* ys,
                                  const size_t* lengths, const char* title,
                                  const char* x_label, const char* y_label,
                                  int log_y, ssc_buffer** out);

/* ---- optimization ------------------------------------------------------ */

typedef struct ssc_cmaes_config {
  size_t population;
  double sigma0;
  size_t max_evals;
  uint64_t seed;
  size_t workers;
} ssc_cmaes_config;

/* population 100, sigma0 0.5, 1e5 evaluations, seed 1, one worker. */
SSC_API void ssc_cmaes_config_default(ssc_cmaes_config* config);

typedef struct ssc_run ssc_run;

SSC_API ssc_status ssc_cmaes_minimize(const ssc_objective* objective,
                                      const double* x0, size_t n,
                                      const ssc_cmaes_config* config,
                                      ssc_run** out);
SSC_API void ssc_run_free(ssc_run* run);
SSC_API double ssc_run_best_f(const ssc_run* run);
SSC_API ssc_status ssc_run_best_x(const ssc_run* run, double* out, size_t n);
SSC_API size_t ssc_run_history_length(const ssc_run* run);
SSC_API ssc_status ssc_run_history_entry(const ssc_run* run, size_t index,
                                         size_t* evals, double* best_f,
                                         double* distance, int* has_distance);
SSC_API int ssc_run_stopped_early(const ssc_run* run);
SSC_API ssc_status ssc_run_to_csv(const ssc_run* run, const char* label,
                                  ssc_buffer** out);

typedef struct ssc_comparison ssc_comparison;

/* optimum may be NULL to use each run's recorded distances. */
SSC_API ssc_status ssc_compare_runs(const ssc_run* const* runs, size_t n_runs,
                                    const double* optimum, size_t d,
                                    ssc_comparison** out);
SSC_API void ssc_comparison_free(ssc_comparison* comparison);
SSC_API size_t ssc_comparison_length(const ssc_comparison* comparison);
SSC_API ssc_status ssc_comparison_row(const ssc_comparison* comparison, size_t index,
                                      size_t* evals, double* mean_distance,
                                      double* std_distance, double* mean_best_f);
SSC_API ssc_status ssc_comparison_to_csv(const ssc_comparison* comparison,
                                         const char* label, ssc_buffer** out);

typedef struct ssc_path ssc_path;

SSC_API ssc_status ssc_gradient_descent_path(const ssc_objective* objective,
                                             const double* x0, size_t n,
                                             double step, size_t iters, double h,
                                             ssc_path** out);
SSC_API void ssc_path_free(ssc_path* path);
SSC_API size_t ssc_path_length(const ssc_path* path);
SSC_API ssc_status ssc_path_point(const ssc_path* path, size_t index, double* out,
                                  size_t n);
SSC_API int ssc_path_diverged(const ssc_path* path);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SLICESCAPE_SLICESCAPE_H_ */
