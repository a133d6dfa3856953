// Copyright 2026 The Slicescape Authors
//
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

// Exercises the public C interface only; links against the shared library.

#include "slicescape/slicescape.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

namespace {

struct ObjectiveDeleter {
  void operator()(ssc_objective* p) const { ssc_objective_free(p); }
};
struct GridDeleter {
  void operator()(ssc_grid* p) const { ssc_grid_free(p); }
};
struct BufferDeleter {
  void operator()(ssc_buffer* p) const { ssc_buffer_free(p); }
};
struct RunDeleter {
  void operator()(ssc_run* p) const { ssc_run_free(p); }
};
using ObjectiveHandle = std::unique_ptr<ssc_objective, ObjectiveDeleter>;
using GridHandle = std::unique_ptr<ssc_grid, GridDeleter>;
using BufferHandle = std::unique_ptr<ssc_buffer, BufferDeleter>;
using RunHandle = std::unique_ptr<ssc_run, RunDeleter>;

std::string Text(const ssc_buffer* b) {
  return std::string(ssc_buffer_data(b), ssc_buffer_size(b));
}

ObjectiveHandle Quadratic(size_t d, size_t k, double eps) {
  ssc_objective* raw = nullptr;
  EXPECT_EQ(ssc_objective_create_quadratic_k(d, k, eps, &raw), SSC_OK);
  return ObjectiveHandle(raw);
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(ssc_version(), "1.0.0");
  EXPECT_STREQ(ssc_status_name(SSC_UNDEFINED_RESULT), "undefined_result");
}

TEST(CApi, ErrorsReportStatusAndMessage) {
  ssc_objective* raw = nullptr;
  EXPECT_EQ(ssc_objective_create_quadratic_k(3, 5, 0.0, &raw), SSC_INVALID_ARGUMENT);
  EXPECT_EQ(raw, nullptr);
  EXPECT_NE(std::string(ssc_last_error()), "");
  EXPECT_EQ(ssc_objective_create_quadratic_k(3, 2, 0.0, nullptr), SSC_INVALID_ARGUMENT);
  auto f = Quadratic(3, 2, 0.0);
  EXPECT_STREQ(ssc_last_error(), "");
  double out = 0.0;
  const double x[2] = {1.0, 2.0};
  EXPECT_EQ(ssc_objective_evaluate(f.get(), x, 2, 0, &out), SSC_INVALID_ARGUMENT);
}

TEST(CApi, LastErrorIsPerThread) {
  ssc_objective* raw = nullptr;
  ASSERT_EQ(ssc_objective_create_rastrigin(0, &raw), SSC_INVALID_ARGUMENT);
  std::string other;
  std::thread([&] { other = ssc_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(ssc_last_error()), "");
}

TEST(CApi, ObjectivesEvaluate) {
  auto q = Quadratic(3, 2, 0.01);
  const double ones[3] = {1.0, 1.0, 1.0};
  double v = 0.0;
  ASSERT_EQ(ssc_objective_evaluate(q.get(), ones, 3, 0, &v), SSC_OK);
  EXPECT_NEAR(v, 2.01, 1e-15);
  EXPECT_EQ(ssc_objective_dimension(q.get()), 3u);
  EXPECT_STREQ(ssc_objective_name(q.get()), "quadratic_k");

  ssc_objective* raw = nullptr;
  ASSERT_EQ(ssc_objective_create_bimodal(5, &raw), SSC_OK);
  ObjectiveHandle b(raw);
  EXPECT_EQ(ssc_objective_is_maximize(b.get()), 1);
  double opt[5];
  int has = 0;
  ASSERT_EQ(ssc_objective_known_optimum(b.get(), opt, 5, &has), SSC_OK);
  EXPECT_EQ(has, 1);
  for (double o : opt) EXPECT_EQ(o, 1.0);
}

TEST(CApi, BatchMatchesSingleEvaluation) {
  ssc_objective* raw = nullptr;
  ASSERT_EQ(ssc_objective_create_rastrigin(2, &raw), SSC_OK);
  ObjectiveHandle f(raw);
  std::vector<double> xs;
  for (int k = 0; k < 50; ++k) {
    xs.push_back(0.1 * k);
    xs.push_back(-0.05 * k);
  }
  std::vector<double> serial(50), parallel(50);
  ASSERT_EQ(ssc_objective_evaluate_batch(f.get(), xs.data(), 50, 2, 9, 1, serial.data()), SSC_OK);
  ASSERT_EQ(ssc_objective_evaluate_batch(f.get(), xs.data(), 50, 2, 9, 4, parallel.data()),
            SSC_OK);
  EXPECT_EQ(serial, parallel);
  double single = 0.0;
  ASSERT_EQ(ssc_objective_evaluate(f.get(), xs.data() + 20, 2, 19, &single), SSC_OK);
  EXPECT_EQ(single, serial[10]);
}

TEST(CApi, PendulumRollout) {
  ssc_task task;
  ssc_task_default(&task);
  EXPECT_EQ(task.horizon, 100u);
  EXPECT_EQ(task.kd, -1.0);
  task.horizon = 1;
  const double action = 1.0;
  ssc_trajectory* traj = nullptr;
  ASSERT_EQ(ssc_rollout(&task, &action, 1, &traj), SSC_OK);
  EXPECT_NEAR(ssc_trajectory_total(traj), 1.0001, 1e-14);
  ASSERT_EQ(ssc_trajectory_state_count(traj), 2u);
  double alpha = 0.0, omega = 0.0;
  ASSERT_EQ(ssc_trajectory_state(traj, 1, &alpha, &omega), SSC_OK);
  EXPECT_NEAR(alpha, 0.01, 1e-15);
  EXPECT_NEAR(omega, 0.1, 1e-15);
  EXPECT_EQ(ssc_trajectory_terminated_at(traj, nullptr), 0);
  ssc_trajectory_free(traj);

  task.objective_mode = SSC_MODE_REWARD;
  ASSERT_EQ(ssc_rollout(&task, &action, 1, &traj), SSC_OK);
  EXPECT_NEAR(ssc_trajectory_total(traj), 1.3677794461712756, 1e-14);
  ssc_trajectory_free(traj);

  task.action_kind = static_cast<ssc_action_kind>(7);
  EXPECT_EQ(ssc_rollout(&task, &action, 1, &traj), SSC_INVALID_ARGUMENT);
}

TEST(CApi, TrajectoryAndPolicyObjectives) {
  ssc_task task;
  ssc_task_default(&task);
  task.action_kind = SSC_ACTION_SPLINE_TARGET_ANGLE;
  size_t dim = 0;
  ASSERT_EQ(ssc_task_action_dimension(&task, &dim), SSC_OK);
  EXPECT_EQ(dim, 11u);
  ssc_objective* raw = nullptr;
  ASSERT_EQ(ssc_objective_create_trajectory(&task, &raw), SSC_OK);
  ObjectiveHandle traj(raw);
  EXPECT_EQ(ssc_objective_dimension(traj.get()), 11u);

  ssc_task_default(&task);
  task.horizon = 50;
  ASSERT_EQ(ssc_objective_create_policy(&task, nullptr, 0, 0, &raw), SSC_OK);
  ObjectiveHandle policy(raw);
  const double theta = -0.1;
  double via_handle = 0.0, direct = 0.0;
  ASSERT_EQ(ssc_objective_evaluate(policy.get(), &theta, 1, 0, &via_handle), SSC_OK);
  ASSERT_EQ(ssc_policy_objective(&task, theta, nullptr, 0, &direct), SSC_OK);
  EXPECT_EQ(via_handle, direct);
}

TEST(CApi, HessianReport) {
  auto q = Quadratic(3, 2, 0.01);
  const double x[3] = {0.0, 0.0, 0.0};
  ssc_hessian_report* report = nullptr;
  ASSERT_EQ(ssc_hessian_report_create(q.get(), x, 3, 1e-5, 1, 1e-10, &report), SSC_OK);
  EXPECT_EQ(ssc_hessian_report_dimension(report), 3u);
  double eig[3];
  ASSERT_EQ(ssc_hessian_report_eigenvalues(report, eig, 3), SSC_OK);
  EXPECT_NEAR(eig[0], 0.02, 1e-6);
  double kappa = 0.0;
  int infinite = 1, indefinite = 1;
  ssc_hessian_report_kappa(report, &kappa, &infinite, &indefinite);
  EXPECT_NEAR(kappa, 100.0, 0.1);
  EXPECT_EQ(infinite, 0);
  EXPECT_EQ(indefinite, 0);
  ssc_buffer* json = nullptr;
  ASSERT_EQ(ssc_hessian_report_to_json(report, 0, &json), SSC_OK);
  EXPECT_NE(Text(json).find("\"separability_index\""), std::string::npos);
  ssc_buffer_free(json);
  ssc_hessian_report_free(report);

  const double singular[4] = {0.0, 0.0, 0.0, 1.0};
  ASSERT_EQ(ssc_hessian_report_from_matrix(singular, 2, 1e-10, &report), SSC_OK);
  ssc_hessian_report_kappa(report, &kappa, &infinite, nullptr);
  EXPECT_EQ(infinite, 1);
  ssc_hessian_report_free(report);

  const double zeros[2] = {0.0, 0.0};
  EXPECT_EQ(ssc_condition_number(zeros, 2, 1e-10, &kappa, nullptr, nullptr),
            SSC_UNDEFINED_RESULT);
}

TEST(CApi, SliceConditioning) {
  const double u[3] = {1.0, 0.0, 0.0};
  const double v[3] = {0.0, M_SQRT1_2, M_SQRT1_2};
  double a[4];
  ASSERT_EQ(ssc_slice_restriction_matrix(u, v, 3, 2, a), SSC_OK);
  EXPECT_DOUBLE_EQ(a[0], 1.0);
  EXPECT_NEAR(a[3], 0.5, 1e-15);
  const double w[3] = {1.0, 1.0, 0.0};
  EXPECT_EQ(ssc_slice_restriction_matrix(u, w, 3, 2, a), SSC_INVALID_ARGUMENT);

  auto q = Quadratic(3, 1, 0.0);
  const double center[3] = {0.0, 0.0, 0.0};
  const double e2[3] = {0.0, 1.0, 0.0};
  double kappa = 0.0;
  int infinite = 0;
  ASSERT_EQ(ssc_slice_condition_number(q.get(), center, u, e2, 3, 1e-5, 1e-10, &kappa, &infinite),
            SSC_OK);
  EXPECT_EQ(infinite, 1);
}

TEST(CApi, GridLifecycle) {
  auto q = Quadratic(4, 4, 0.0);
  double u[4], v[4];
  ASSERT_EQ(ssc_sample_basis(4, 3, SSC_BASIS_ORTHONORMAL, u, v), SSC_OK);
  const double center[4] = {0.0, 0.0, 0.0, 0.0};
  const ssc_plane plane{center, u, v, 4, 1.0, 21};
  ssc_grid* raw = nullptr;
  ASSERT_EQ(ssc_grid_evaluate(q.get(), &plane, 2, 5, 2, &raw), SSC_OK);
  GridHandle grid(raw);
  EXPECT_EQ(ssc_grid_resolution(grid.get()), 21u);
  EXPECT_EQ(ssc_grid_extent(grid.get()), 1.0);
  EXPECT_EQ(ssc_grid_failed_count(grid.get()), 0u);
  size_t i = 0, j = 0;
  ASSERT_EQ(ssc_grid_argmin(grid.get(), &i, &j), SSC_OK);
  EXPECT_EQ(i, 10u);
  EXPECT_EQ(j, 10u);
  int passes = 0;
  ASSERT_EQ(ssc_grid_convexity_check(grid.get(), 1e-9, &passes), SSC_OK);
  EXPECT_EQ(passes, 1);

  ssc_buffer* csv = nullptr;
  ssc_buffer* meta = nullptr;
  ASSERT_EQ(ssc_grid_to_csv(grid.get(), &csv), SSC_OK);
  ASSERT_EQ(ssc_grid_metadata_json(grid.get(), &meta), SSC_OK);
  BufferHandle csv_h(csv), meta_h(meta);
  ASSERT_EQ(ssc_grid_from_documents(Text(csv).c_str(), Text(meta).c_str(), &raw), SSC_OK);
  GridHandle back(raw);
  std::vector<double> a(441), b(441);
  ASSERT_EQ(ssc_grid_values(grid.get(), a.data(), 441), SSC_OK);
  ASSERT_EQ(ssc_grid_values(back.get(), b.data(), 441), SSC_OK);
  EXPECT_EQ(a, b);

  ASSERT_EQ(ssc_grid_blur(grid.get(), 1.0, &raw), SSC_OK);
  GridHandle blurred(raw);
  ASSERT_EQ(ssc_grid_normalize(blurred.get(), &raw), SSC_OK);
  GridHandle normalized(raw);
  double value = -1.0;
  int failed = 1;
  ASSERT_EQ(ssc_grid_value(normalized.get(), 0, 0, &value, &failed), SSC_OK);
  EXPECT_EQ(failed, 0);
  EXPECT_GE(value, 0.0);
  EXPECT_LE(value, 1.0);
  EXPECT_EQ(ssc_grid_value(normalized.get(), 21, 0, &value, nullptr), SSC_INVALID_ARGUMENT);
}

TEST(CApi, Rendering) {
  std::vector<double> values(9);
  for (int k = 0; k < 9; ++k) values[k] = k;
  const double center[2] = {0.0, 0.0}, u[2] = {1.0, 0.0}, v[2] = {0.0, 1.0};
  const ssc_plane plane{center, u, v, 2, 1.0, 3};
  ssc_grid* raw = nullptr;
  ASSERT_EQ(ssc_grid_from_values(&plane, values.data(), "ramp", &raw), SSC_OK);
  GridHandle grid(raw);
  ssc_buffer* out = nullptr;
  ASSERT_EQ(ssc_grid_heightmap_ppm(grid.get(), SSC_COLORMAP_GRAY, &out), SSC_OK);
  EXPECT_EQ(Text(out).substr(0, 11), "P6\n3 3\n255\n");
  ssc_buffer_free(out);
  const double overlay[4] = {0.5, 0.5, 0.0, 0.0};
  ASSERT_EQ(ssc_grid_contour_svg(grid.get(), nullptr, 0, overlay, 2, &out), SSC_OK);
  EXPECT_NE(Text(out).find("<svg"), std::string::npos);
  ssc_buffer_free(out);
  size_t chains = 0;
  const double level = 4.5;
  ASSERT_EQ(ssc_grid_contour_count(grid.get(), &level, 1, &chains), SSC_OK);
  EXPECT_EQ(chains, 1u);

  const double xs0[3] = {1, 2, 3}, ys0[3] = {1, 0.1, 0.01};
  const double* xs[1] = {xs0};
  const double* ys[1] = {ys0};
  const size_t lengths[1] = {3};
  const char* labels[1] = {"a"};
  ASSERT_EQ(ssc_curves_svg(1, labels, xs, ys, lengths, "t", "x", "y", 1, &out), SSC_OK);
  EXPECT_NE(Text(out).find("class=\"curve\""), std::string::npos);
  ssc_buffer_free(out);

  const double m[4] = {1.0, -1.0, 0.5, 0.0};
  ASSERT_EQ(ssc_matrix_heatmap_ppm(m, 2, 2, &out), SSC_OK);
  EXPECT_EQ(ssc_buffer_size(out), 11u + 12u);
  ssc_buffer_free(out);

  const double flat[4] = {1.0, 1.0, 1.0, 1.0};
  const ssc_plane small{center, u, v, 2, 1.0, 2};
  ASSERT_EQ(ssc_grid_from_values(&small, flat, nullptr, &raw), SSC_OK);
  GridHandle constant(raw);
  EXPECT_EQ(ssc_grid_heightmap_ppm(constant.get(), SSC_COLORMAP_VIRIDIS, &out),
            SSC_UNDEFINED_RESULT);
}

TEST(CApi, CmaesAndComparison) {
  auto sphere = Quadratic(5, 5, 0.0);
  ssc_cmaes_config cfg;
  ssc_cmaes_config_default(&cfg);
  EXPECT_EQ(cfg.population, 100u);
  EXPECT_EQ(cfg.sigma0, 0.5);
  cfg.max_evals = 2000;
  cfg.population = 20;
  const double x0[5] = {1, 1, 1, 1, 1};
  std::vector<RunHandle> runs;
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    cfg.seed = seed;
    ssc_run* raw = nullptr;
    ASSERT_EQ(ssc_cmaes_minimize(sphere.get(), x0, 5, &cfg, &raw), SSC_OK);
    runs.emplace_back(raw);
  }
  EXPECT_EQ(ssc_run_history_length(runs[0].get()), 100u);
  size_t evals = 0;
  double best_f = 0.0, dist = 0.0;
  int has_dist = 0;
  ASSERT_EQ(ssc_run_history_entry(runs[0].get(), 99, &evals, &best_f, &dist, &has_dist), SSC_OK);
  EXPECT_EQ(evals, 2000u);
  EXPECT_EQ(has_dist, 1);
  EXPECT_EQ(best_f, ssc_run_best_f(runs[0].get()));
  double best_x[5];
  ASSERT_EQ(ssc_run_best_x(runs[0].get(), best_x, 5), SSC_OK);

  const ssc_run* ptrs[3] = {runs[0].get(), runs[1].get(), runs[2].get()};
  ssc_comparison* cmp = nullptr;
  ASSERT_EQ(ssc_compare_runs(ptrs, 3, nullptr, 0, &cmp), SSC_OK);
  EXPECT_EQ(ssc_comparison_length(cmp), 100u);
  double mean = 0.0, spread = 0.0, mean_f = 0.0;
  ASSERT_EQ(ssc_comparison_row(cmp, 99, &evals, &mean, &spread, &mean_f), SSC_OK);
  EXPECT_LT(mean, 1e-3);
  ssc_buffer* csv = nullptr;
  ASSERT_EQ(ssc_comparison_to_csv(cmp, "sphere", &csv), SSC_OK);
  EXPECT_NE(Text(csv).find("evals,mean_dist,std_dist,mean_best_f"), std::string::npos);
  ssc_buffer_free(csv);
  ssc_comparison_free(cmp);
  EXPECT_EQ(ssc_compare_runs(nullptr, 0, nullptr, 0, &cmp), SSC_INVALID_ARGUMENT);
}

TEST(CApi, GradientDescentPath) {
  auto sphere = Quadratic(2, 2, 0.0);
  const double x0[2] = {1.0, -2.0};
  ssc_path* path = nullptr;
  ASSERT_EQ(ssc_gradient_descent_path(sphere.get(), x0, 2, 0.4, 5, 1e-5, &path), SSC_OK);
  EXPECT_EQ(ssc_path_length(path), 6u);
  double p[2];
  ASSERT_EQ(ssc_path_point(path, 2, p, 2), SSC_OK);
  EXPECT_NEAR(p[0], 0.04, 1e-15);
  EXPECT_EQ(ssc_path_diverged(path), 0);
  ssc_path_free(path);
}

TEST(CApi, NullHandlesAreHarmless) {
  ssc_objective_free(nullptr);
  ssc_grid_free(nullptr);
  ssc_buffer_free(nullptr);
  EXPECT_EQ(ssc_objective_dimension(nullptr), 0u);
  EXPECT_EQ(ssc_buffer_size(nullptr), 0u);
  double v = 0.0;
  EXPECT_EQ(ssc_objective_evaluate(nullptr, nullptr, 0, 0, &v), SSC_INVALID_ARGUMENT);
}

}  // namespace
