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

#include "slicescape/slicescape.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/analysis.h"
#include "core/common.h"
#include "core/objectives.h"
#include "core/optimize.h"
#include "core/parallel.h"
#include "core/pendulum.h"
#include "core/render.h"
#include "core/slices.h"

struct ssc_buffer {
  std::string bytes;
};

struct ssc_objective {
  slicescape::ObjectivePtr objective;
};

struct ssc_trajectory {
  slicescape::pendulum::Trajectory trajectory;
};

struct ssc_hessian_report {
  slicescape::HessianReport report;
};

struct ssc_grid {
  slicescape::LandscapeGrid grid;
};

struct ssc_run {
  slicescape::OptimizerRun run;
};

struct ssc_comparison {
  std::vector<slicescape::ComparisonRow> rows;
};

struct ssc_path {
  slicescape::GradientPath path;
};

namespace {

namespace pd = slicescape::pendulum;
using slicescape::ErrorCode;
using slicescape::Vector;

constexpr char kVersion[] = "1.0.0";

thread_local std::string last_error;

ssc_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return SSC_INVALID_ARGUMENT;
    case ErrorCode::kNumericFailure: return SSC_NUMERIC_FAILURE;
    case ErrorCode::kUndefinedResult: return SSC_UNDEFINED_RESULT;
    case ErrorCode::kIo: return SSC_IO_ERROR;
  }
  return SSC_INTERNAL_ERROR;
}

// Runs body, mapping exceptions to status codes and recording the message.
template <typename Body>
ssc_status Guard(Body&& body) noexcept {
  try {
    body();
    last_error.clear();
    return SSC_OK;
  } catch (const slicescape::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SSC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SSC_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return SSC_INTERNAL_ERROR;
  }
}

void NotNull(const void* p, const char* name) {
  slicescape::Require(p != nullptr, std::string(name) + " must not be null");
}

std::span<const double> Span(const double* p, std::size_t n, const char* name) {
  if (n > 0) NotNull(p, name);
  return {p, n};
}

Vector Copy(const double* p, std::size_t n, const char* name) {
  const auto s = Span(p, n, name);
  return Vector(s.begin(), s.end());
}

template <typename T>
void Emit(T** out, T value) {
  NotNull(out, "out");
  *out = new T(std::move(value));
}

void EmitBytes(ssc_buffer** out, std::string bytes) {
  Emit(out, ssc_buffer{std::move(bytes)});
}

pd::Task ToTask(const ssc_task* t) {
  NotNull(t, "task");
  pd::Task task;
  task.params = {t->delta, t->length, t->gravity};
  task.horizon = t->horizon;
  task.action_weight = t->action_weight;
  switch (t->action_kind) {
    case SSC_ACTION_TORQUE: task.action_space.kind = pd::ActionKind::kTorque; break;
    case SSC_ACTION_TARGET_ANGLE:
      task.action_space.kind = pd::ActionKind::kTargetAngle;
      break;
    case SSC_ACTION_SPLINE_TARGET_ANGLE:
      task.action_space.kind = pd::ActionKind::kSplineTargetAngle;
      break;
    default: slicescape::Fail(ErrorCode::kInvalidArgument, "unknown action kind");
  }
  task.action_space.kp = t->kp;
  task.action_space.kd = t->kd;
  task.action_space.spline_spacing = t->spline_spacing;
  switch (t->objective_mode) {
    case SSC_MODE_COST: task.objective = pd::ObjectiveMode::kCost; break;
    case SSC_MODE_REWARD: task.objective = pd::ObjectiveMode::kReward; break;
    default: slicescape::Fail(ErrorCode::kInvalidArgument, "unknown objective mode");
  }
  task.termination.enabled = t->termination_enabled != 0;
  task.termination.threshold = t->termination_threshold;
  switch (t->termination_mode) {
    case SSC_TERMINATION_NONE: task.termination.mode = pd::TerminationMode::kNone; break;
    case SSC_TERMINATION_PLAIN: task.termination.mode = pd::TerminationMode::kPlain; break;
    case SSC_TERMINATION_ALIVE_BONUS:
      task.termination.mode = pd::TerminationMode::kAliveBonus;
      break;
    case SSC_TERMINATION_PENALTY:
      task.termination.mode = pd::TerminationMode::kPenalty;
      break;
    default: slicescape::Fail(ErrorCode::kInvalidArgument, "unknown termination mode");
  }
  task.termination.alive_bonus = t->alive_bonus;
  task.termination.penalty_per_step = t->penalty_per_step;
  task.initial_state = {t->initial_alpha, t->initial_omega};
  pd::Validate(task);
  return task;
}

Vector Angles(const double* angles, std::size_t n) {
  if (angles == nullptr) return pd::DefaultInitialAngles();
  return Copy(angles, n, "angles");
}

slicescape::SlicePlane ToPlane(const ssc_plane* p) {
  NotNull(p, "plane");
  slicescape::SlicePlane plane;
  plane.center = Copy(p->center, p->dimension, "plane.center");
  plane.u = Copy(p->u, p->dimension, "plane.u");
  plane.v = Copy(p->v, p->dimension, "plane.v");
  plane.extent = p->extent;
  plane.resolution = p->resolution;
  slicescape::Validate(plane);
  return plane;
}

std::vector<double> Levels(const slicescape::LandscapeGrid& grid, const double* levels,
                           std::size_t n) {
  if (levels == nullptr) return slicescape::DefaultContourLevels(grid);
  return Copy(levels, n, "levels");
}

}  // namespace

extern "C" {

const char* ssc_last_error(void) { return last_error.c_str(); }

const char* ssc_version(void) { return kVersion; }

const char* ssc_status_name(ssc_status status) {
  switch (status) {
    case SSC_OK: return "ok";
    case SSC_INVALID_ARGUMENT: return "invalid_argument";
    case SSC_NUMERIC_FAILURE: return "numeric_failure";
    case SSC_UNDEFINED_RESULT: return "undefined_result";
    case SSC_IO_ERROR: return "io_error";
    case SSC_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* ssc_buffer_data(const ssc_buffer* buffer) {
  return buffer ? buffer->bytes.data() : nullptr;
}

size_t ssc_buffer_size(const ssc_buffer* buffer) {
  return buffer ? buffer->bytes.size() : 0;
}

void ssc_buffer_free(ssc_buffer* buffer) { delete buffer; }

// ---- objectives -----------------------------------------------------------

ssc_status ssc_objective_create_quadratic_k(size_t d, size_t k, double eps,
                                            ssc_objective** out) {
  return Guard([&] {
    Emit(out, ssc_objective{slicescape::MakeObjective(
                  slicescape::ObjectiveKind::kQuadraticK, {d, k, eps})});
  });
}

ssc_status ssc_objective_create_rastrigin(size_t d, ssc_objective** out) {
  return Guard([&] {
    Emit(out, ssc_objective{slicescape::MakeObjective(
                  slicescape::ObjectiveKind::kRastrigin, {d, 1, 0.0})});
  });
}

ssc_status ssc_objective_create_bimodal(size_t d, ssc_objective** out) {
  return Guard([&] {
    Emit(out, ssc_objective{slicescape::MakeObjective(
                  slicescape::ObjectiveKind::kBimodal, {d, 1, 0.0})});
  });
}

void ssc_objective_free(ssc_objective* objective) { delete objective; }

size_t ssc_objective_dimension(const ssc_objective* objective) {
  return objective ? objective->objective->dimension() : 0;
}

const char* ssc_objective_name(const ssc_objective* objective) {
  return objective ? objective->objective->name().c_str() : "";
}

int ssc_objective_is_maximize(const ssc_objective* objective) {
  return objective && objective->objective->sense() == slicescape::Sense::kMaximize;
}

ssc_status ssc_objective_known_optimum(const ssc_objective* objective, double* out,
                                       size_t n, int* has_optimum) {
  return Guard([&] {
    NotNull(objective, "objective");
    NotNull(has_optimum, "has_optimum");
    const auto& opt = objective->objective->known_optimum();
    slicescape::Require(n == objective->objective->dimension(),
                        "optimum buffer length must equal the dimension");
    if (opt) {
      NotNull(out, "out");
      std::copy(opt->begin(), opt->end(), out);
    }
    *has_optimum = opt.has_value();
  });
}

ssc_status ssc_objective_evaluate(const ssc_objective* objective, const double* x,
                                  size_t n, uint64_t seed, double* out) {
  return Guard([&] {
    NotNull(objective, "objective");
    NotNull(out, "out");
    *out = objective->objective->Evaluate(Span(x, n, "x"), seed);
  });
}

ssc_status ssc_objective_evaluate_batch(const ssc_objective* objective,
                                        const double* xs, size_t count, size_t n,
                                        uint64_t seed, size_t workers, double* out) {
  return Guard([&] {
    NotNull(objective, "objective");
    const auto all = Span(xs, count * n, "xs");
    if (count > 0) NotNull(out, "out");
    std::vector<double> results(count);
    slicescape::ParallelFor(count, slicescape::ResolveWorkers(workers, count),
                            [&](std::size_t r) {
                              results[r] = objective->objective->Evaluate(
                                  all.subspan(r * n, n), seed + r);
                            });
    std::copy(results.begin(), results.end(), out);
  });
}

ssc_status ssc_bimodal_terms(const double* x, size_t n, double* dominant,
                             double* secondary) {
  return Guard([&] {
    const auto terms = slicescape::BimodalTermsAt(Span(x, n, "x"));
    if (dominant != nullptr) *dominant = terms.dominant;
    if (secondary != nullptr) *secondary = terms.secondary;
  });
}

// ---- pendulum -------------------------------------------------------------

void ssc_task_default(ssc_task* task) {
  if (task == nullptr) return;
  const pd::Task d;
  task->delta = d.params.delta;
  task->length = d.params.length;
  task->gravity = d.params.gravity;
  task->horizon = d.horizon;
  task->action_weight = d.action_weight;
  task->action_kind = SSC_ACTION_TORQUE;
  task->kp = d.action_space.kp;
  task->kd = d.action_space.kd;
  task->spline_spacing = d.action_space.spline_spacing;
  task->objective_mode = SSC_MODE_COST;
  task->termination_enabled = 0;
  task->termination_threshold = d.termination.threshold;
  task->termination_mode = SSC_TERMINATION_NONE;
  task->alive_bonus = d.termination.alive_bonus;
  task->penalty_per_step = d.termination.penalty_per_step;
  task->initial_alpha = d.initial_state.alpha;
  task->initial_omega = d.initial_state.omega;
}

ssc_status ssc_task_action_dimension(const ssc_task* task, size_t* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = pd::ActionDimension(ToTask(task));
  });
}

ssc_status ssc_objective_create_trajectory(const ssc_task* task, ssc_objective** out) {
  return Guard([&] { Emit(out, ssc_objective{pd::TrajectoryObjective(ToTask(task))}); });
}

ssc_status ssc_objective_create_policy(const ssc_task* task, const double* angles,
                                       size_t n_angles, int vary_weight,
                                       ssc_objective** out) {
  return Guard([&] {
    Emit(out, ssc_objective{pd::PolicyObjectiveHandle(
                  ToTask(task), Angles(angles, n_angles), vary_weight != 0)});
  });
}

ssc_status ssc_rollout(const ssc_task* task, const double* actions, size_t n,
                       ssc_trajectory** out) {
  return Guard([&] {
    Emit(out, ssc_trajectory{pd::Rollout(ToTask(task), Span(actions, n, "actions"))});
  });
}

void ssc_trajectory_free(ssc_trajectory* trajectory) { delete trajectory; }

double ssc_trajectory_total(const ssc_trajectory* trajectory) {
  return trajectory ? trajectory->trajectory.total : 0.0;
}

size_t ssc_trajectory_state_count(const ssc_trajectory* trajectory) {
  return trajectory ? trajectory->trajectory.states.size() : 0;
}

ssc_status ssc_trajectory_state(const ssc_trajectory* trajectory, size_t index,
                                double* alpha, double* omega) {
  return Guard([&] {
    NotNull(trajectory, "trajectory");
    NotNull(alpha, "alpha");
    NotNull(omega, "omega");
    const auto& states = trajectory->trajectory.states;
    slicescape::Require(index < states.size(), "state index out of range");
    *alpha = states[index].alpha;
    *omega = states[index].omega;
  });
}

int ssc_trajectory_terminated_at(const ssc_trajectory* trajectory, size_t* step) {
  if (trajectory == nullptr || !trajectory->trajectory.terminated_at) return 0;
  if (step != nullptr) *step = *trajectory->trajectory.terminated_at;
  return 1;
}

ssc_status ssc_policy_objective(const ssc_task* task, double theta,
                                const double* angles, size_t n_angles, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    const Vector a = Angles(angles, n_angles);
    *out = pd::PolicyObjective(theta, ToTask(task), a);
  });
}

// ---- analysis -------------------------------------------------------------

ssc_status ssc_hessian_report_create(const ssc_objective* objective, const double* x,
                                     size_t n, double h, size_t workers,
                                     double rank_tol, ssc_hessian_report** out) {
  return Guard([&] {
    NotNull(objective, "objective");
    Emit(out, ssc_hessian_report{slicescape::AnalyzeHessian(
                  *objective->objective, Span(x, n, "x"), h, workers, rank_tol)});
  });
}

ssc_status ssc_hessian_report_from_matrix(const double* matrix, size_t n,
                                          double rank_tol, ssc_hessian_report** out) {
  return Guard([&] {
    const auto values = Span(matrix, n * n, "matrix");
    slicescape::Matrix m(n, n);
    std::copy(values.begin(), values.end(), m.data().begin());
    Emit(out, ssc_hessian_report{slicescape::MakeHessianReport(std::move(m), rank_tol)});
  });
}

void ssc_hessian_report_free(ssc_hessian_report* report) { delete report; }

size_t ssc_hessian_report_dimension(const ssc_hessian_report* report) {
  return report ? report->report.eigenvalues.size() : 0;
}

ssc_status ssc_hessian_report_eigenvalues(const ssc_hessian_report* report,
                                          double* out, size_t n) {
  return Guard([&] {
    NotNull(report, "report");
    const auto& ev = report->report.eigenvalues;
    slicescape::Require(n == ev.size(), "eigenvalue buffer length mismatch");
    if (n > 0) NotNull(out, "out");
    std::copy(ev.begin(), ev.end(), out);
  });
}

ssc_status ssc_hessian_report_matrix(const ssc_hessian_report* report, double* out,
                                     size_t n) {
  return Guard([&] {
    NotNull(report, "report");
    const auto& m = report->report.matrix;
    slicescape::Require(n == m.rows(), "matrix dimension mismatch");
    if (n > 0) NotNull(out, "out");
    std::copy(m.data().begin(), m.data().end(), out);
  });
}

void ssc_hessian_report_kappa(const ssc_hessian_report* report, double* kappa,
                              int* infinite, int* indefinite) {
  if (report == nullptr) return;
  const auto& k = report->report.kappa;
  if (kappa) *kappa = k.value;
  if (infinite) *infinite = k.infinite;
  if (indefinite) *indefinite = k.indefinite;
}

double ssc_hessian_report_separability(const ssc_hessian_report* report) {
  return report ? report->report.separability_index : 0.0;
}

ssc_status ssc_hessian_report_to_json(const ssc_hessian_report* report,
                                      int include_matrix, ssc_buffer** out) {
  return Guard([&] {
    NotNull(report, "report");
    EmitBytes(out, slicescape::HessianReportToJson(report->report, include_matrix != 0));
  });
}

ssc_status ssc_condition_number(const double* eigenvalues, size_t n, double rank_tol,
                                double* kappa, int* infinite, int* indefinite) {
  return Guard([&] {
    NotNull(kappa, "kappa");
    const auto k = slicescape::ComputeConditionNumber(
        Span(eigenvalues, n, "eigenvalues"), rank_tol);
    *kappa = k.value;
    if (infinite) *infinite = k.infinite;
    if (indefinite) *indefinite = k.indefinite;
  });
}

ssc_status ssc_slice_restriction_matrix(const double* u, const double* v, size_t d,
                                        size_t k, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto m = slicescape::SliceRestrictionMatrix(Span(u, d, "u"), Span(v, d, "v"), k);
    std::copy(m.data().begin(), m.data().end(), out);
  });
}

ssc_status ssc_slice_condition_number(const ssc_objective* objective,
                                      const double* center, const double* u,
                                      const double* v, size_t d, double h,
                                      double rank_tol, double* kappa, int* infinite) {
  return Guard([&] {
    NotNull(objective, "objective");
    NotNull(kappa, "kappa");
    const auto k = slicescape::SliceConditionNumber(
        *objective->objective, Span(center, d, "center"), Span(u, d, "u"),
        Span(v, d, "v"), h, rank_tol);
    *kappa = k.value;
    if (infinite) *infinite = k.infinite;
  });
}

// ---- slices ---------------------------------------------------------------

void ssc_visualization_defaults(size_t* resolution, size_t* episodes,
                                double* blur_sigma) {
  if (resolution != nullptr) *resolution = slicescape::kDefaultResolution;
  if (episodes != nullptr) *episodes = slicescape::kDefaultEpisodes;
  if (blur_sigma != nullptr) *blur_sigma = slicescape::kDefaultBlurSigma;
}

ssc_status ssc_sample_basis(size_t d, uint64_t seed, ssc_basis_mode mode, double* u,
                            double* v) {
  return Guard([&] {
    NotNull(u, "u");
    NotNull(v, "v");
    slicescape::BasisMode m;
    switch (mode) {
      case SSC_BASIS_ORTHONORMAL: m = slicescape::BasisMode::kOrthonormal; break;
      case SSC_BASIS_UNNORMALIZED: m = slicescape::BasisMode::kUnnormalized; break;
      default: slicescape::Fail(ErrorCode::kInvalidArgument, "unknown basis mode");
    }
    const auto basis = slicescape::SampleBasis(m, d, seed);
    std::copy(basis.u.begin(), basis.u.end(), u);
    std::copy(basis.v.begin(), basis.v.end(), v);
  });
}

ssc_status ssc_grid_evaluate(const ssc_objective* objective, const ssc_plane* plane,
                             size_t episodes, uint64_t seed, size_t workers,
                             ssc_grid** out) {
  return Guard([&] {
    NotNull(objective, "objective");
    Emit(out, ssc_grid{slicescape::EvaluateGrid(*objective->objective, ToPlane(plane),
                                                episodes, seed, workers)});
  });
}

ssc_status ssc_grid_from_values(const ssc_plane* plane, const double* values,
                                const char* label, ssc_grid** out) {
  return Guard([&] {
    auto p = ToPlane(plane);
    const std::size_t count = p.resolution * p.resolution;
    Emit(out, ssc_grid{slicescape::GridFromValues(std::move(p),
                                                  Copy(values, count, "values"),
                                                  label ? label : "values")});
  });
}

ssc_status ssc_grid_from_documents(const char* csv, const char* metadata_json,
                                   ssc_grid** out) {
  return Guard([&] {
    NotNull(csv, "csv");
    NotNull(metadata_json, "metadata_json");
    Emit(out, ssc_grid{slicescape::GridFromDocuments(csv, metadata_json)});
  });
}

void ssc_grid_free(ssc_grid* grid) { delete grid; }

ssc_status ssc_grid_blur(const ssc_grid* grid, double sigma, ssc_grid** out) {
  return Guard([&] {
    NotNull(grid, "grid");
    Emit(out, ssc_grid{slicescape::GaussianBlur(grid->grid, sigma)});
  });
}

ssc_status ssc_grid_normalize(const ssc_grid* grid, ssc_grid** out) {
  return Guard([&] {
    NotNull(grid, "grid");
    Emit(out, ssc_grid{slicescape::NormalizeGrid(grid->grid)});
  });
}

size_t ssc_grid_resolution(const ssc_grid* grid) {
  return grid ? grid->grid.resolution() : 0;
}

double ssc_grid_extent(const ssc_grid* grid) {
  return grid ? grid->grid.plane.extent : 0.0;
}

size_t ssc_grid_failed_count(const ssc_grid* grid) {
  return grid ? grid->grid.failed_count() : 0;
}

ssc_status ssc_grid_value(const ssc_grid* grid, size_t i, size_t j, double* value,
                          int* failed) {
  return Guard([&] {
    NotNull(grid, "grid");
    NotNull(value, "value");
    const std::size_t res = grid->grid.resolution();
    slicescape::Require(i < res && j < res, "cell index out of range");
    *value = grid->grid.at(i, j);
    if (failed) *failed = grid->grid.is_failed(i, j);
  });
}

ssc_status ssc_grid_values(const ssc_grid* grid, double* out, size_t count) {
  return Guard([&] {
    NotNull(grid, "grid");
    const auto& values = grid->grid.values;
    slicescape::Require(count == values.size(), "value buffer length mismatch");
    NotNull(out, "out");
    std::copy(values.begin(), values.end(), out);
  });
}

ssc_status ssc_grid_argmin(const ssc_grid* grid, size_t* i, size_t* j) {
  return Guard([&] {
    NotNull(grid, "grid");
    NotNull(i, "i");
    NotNull(j, "j");
    const auto c = slicescape::ArgMin(grid->grid);
    *i = c.i;
    *j = c.j;
  });
}

ssc_status ssc_grid_argmax(const ssc_grid* grid, size_t* i, size_t* j) {
  return Guard([&] {
    NotNull(grid, "grid");
    NotNull(i, "i");
    NotNull(j, "j");
    const auto c = slicescape::ArgMax(grid->grid);
    *i = c.i;
    *j = c.j;
  });
}

ssc_status ssc_grid_convexity_check(const ssc_grid* grid, double tol, int* passes) {
  return Guard([&] {
    NotNull(grid, "grid");
    NotNull(passes, "passes");
    *passes = slicescape::PassesConvexityCheck(grid->grid, tol);
  });
}

ssc_status ssc_grid_to_csv(const ssc_grid* grid, ssc_buffer** out) {
  return Guard([&] {
    NotNull(grid, "grid");
    EmitBytes(out, slicescape::GridToCsv(grid->grid));
  });
}

ssc_status ssc_grid_metadata_json(const ssc_grid* grid, ssc_buffer** out) {
  return Guard([&] {
    NotNull(grid, "grid");
    EmitBytes(out, slicescape::GridMetadataToJson(grid->grid));
  });
}

// ---- rendering ------------------------------------------------------------

ssc_status ssc_grid_contour_svg(const ssc_grid* grid, const double* levels,
                                size_t n_levels, const double* overlay_xy,
                                size_t n_overlay, ssc_buffer** out) {
  return Guard([&] {
    NotNull(grid, "grid");
    const auto lv = Levels(grid->grid, levels, n_levels);
    std::vector<slicescape::Point2> overlay;
    if (overlay_xy != nullptr) {
      for (std::size_t k = 0; k < n_overlay; ++k)
        overlay.push_back({overlay_xy[2 * k], overlay_xy[2 * k + 1]});
    }
    EmitBytes(out, slicescape::ContourSvg(slicescape::MarchingSquares(grid->grid, lv),
                                          overlay));
  });
}

ssc_status ssc_grid_contour_count(const ssc_grid* grid, const double* levels,
                                  size_t n_levels, size_t* chains) {
  return Guard([&] {
    NotNull(grid, "grid");
    NotNull(chains, "chains");
    const auto lv = Levels(grid->grid, levels, n_levels);
    *chains = slicescape::MarchingSquares(grid->grid, lv).chain_count();
  });
}

ssc_status ssc_grid_heightmap_ppm(const ssc_grid* grid, ssc_colormap colormap,
                                  ssc_buffer** out) {
  return Guard([&] {
    NotNull(grid, "grid");
    slicescape::Colormap map;
    switch (colormap) {
      case SSC_COLORMAP_GRAY: map = slicescape::Colormap::kGray; break;
      case SSC_COLORMAP_VIRIDIS: map = slicescape::Colormap::kViridis; break;
      default: slicescape::Fail(ErrorCode::kInvalidArgument, "unknown colormap");
    }
    EmitBytes(out, slicescape::HeightmapPpm(grid->grid, map));
  });
}

ssc_status ssc_matrix_heatmap_ppm(const double* matrix, size_t rows, size_t cols,
                                  ssc_buffer** out) {
  return Guard([&] {
    const auto values = Span(matrix, rows * cols, "matrix");
    slicescape::Matrix m(rows, cols);
    std::copy(values.begin(), values.end(), m.data().begin());
    EmitBytes(out, slicescape::MatrixHeatmapPpm(m));
  });
}

ssc_status ssc_curves_svg(size_t n_curves, const char* const* labels,
                          const double* const* xs, const double* const* ys,
                          const size_t* lengths, const char* title,
                          const char* x_label, const char* y_label, int log_y,
                          ssc_buffer** out) {
  return Guard([&] {
    std::vector<slicescape::Curve> curves(n_curves);
    if (n_curves > 0) {
      NotNull(xs, "xs");
      NotNull(ys, "ys");
      NotNull(lengths, "lengths");
    }
    for (std::size_t c = 0; c < n_curves; ++c) {
      curves[c].label = labels && labels[c] ? labels[c] : "";
      const auto x = Span(xs[c], lengths[c], "xs[c]");
      const auto y = Span(ys[c], lengths[c], "ys[c]");
      for (std::size_t k = 0; k < lengths[c]; ++k) curves[c].points.push_back({x[k], y[k]});
    }
    EmitBytes(out, slicescape::CurvesSvg(curves, title ? title : "",
                                         x_label ? x_label : "", y_label ? y_label : "",
                                         log_y != 0));
  });
}

// ---- optimization ---------------------------------------------------------

void ssc_cmaes_config_default(ssc_cmaes_config* config) {
  if (config == nullptr) return;
  const slicescape::CmaesConfig d;
  config->population = d.population;
  config->sigma0 = d.sigma0;
  config->max_evals = d.max_evals;
  config->seed = d.seed;
  config->workers = d.workers;
}

ssc_status ssc_cmaes_minimize(const ssc_objective* objective, const double* x0,
                              size_t n, const ssc_cmaes_config* config, ssc_run** out) {
  return Guard([&] {
    NotNull(objective, "objective");
    NotNull(config, "config");
    const slicescape::CmaesConfig cfg{config->population, config->sigma0,
                                      config->max_evals, config->seed, config->workers};
    Emit(out, ssc_run{slicescape::CmaesMinimize(*objective->objective,
                                                Span(x0, n, "x0"), cfg)});
  });
}

void ssc_run_free(ssc_run* run) { delete run; }

double ssc_run_best_f(const ssc_run* run) { return run ? run->run.best_f : 0.0; }

ssc_status ssc_run_best_x(const ssc_run* run, double* out, size_t n) {
  return Guard([&] {
    NotNull(run, "run");
    slicescape::Require(n == run->run.best_x.size(), "best_x buffer length mismatch");
    if (n > 0) NotNull(out, "out");
    std::copy(run->run.best_x.begin(), run->run.best_x.end(), out);
  });
}

size_t ssc_run_history_length(const ssc_run* run) {
  return run ? run->run.history.size() : 0;
}

ssc_status ssc_run_history_entry(const ssc_run* run, size_t index, size_t* evals,
                                 double* best_f, double* distance, int* has_distance) {
  return Guard([&] {
    NotNull(run, "run");
    slicescape::Require(index < run->run.history.size(), "history index out of range");
    const auto& e = run->run.history[index];
    if (evals) *evals = e.evals;
    if (best_f) *best_f = e.best_f;
    if (has_distance) *has_distance = e.distance.has_value();
    if (distance && e.distance) *distance = *e.distance;
  });
}

int ssc_run_stopped_early(const ssc_run* run) { return run && run->run.stopped_early; }

ssc_status ssc_run_to_csv(const ssc_run* run, const char* label, ssc_buffer** out) {
  return Guard([&] {
    NotNull(run, "run");
    EmitBytes(out, slicescape::RunHistoryToCsv(run->run, label ? label : ""));
  });
}

ssc_status ssc_compare_runs(const ssc_run* const* runs, size_t n_runs,
                            const double* optimum, size_t d, ssc_comparison** out) {
  return Guard([&] {
    if (n_runs > 0) NotNull(runs, "runs");
    std::vector<slicescape::OptimizerRun> copies;
    copies.reserve(n_runs);
    for (std::size_t r = 0; r < n_runs; ++r) {
      NotNull(runs[r], "runs[r]");
      copies.push_back(runs[r]->run);
    }
    std::optional<Vector> opt;
    if (optimum != nullptr) opt = Copy(optimum, d, "optimum");
    Emit(out, ssc_comparison{slicescape::CompareRuns(copies, opt)});
  });
}

void ssc_comparison_free(ssc_comparison* comparison) { delete comparison; }

size_t ssc_comparison_length(const ssc_comparison* comparison) {
  return comparison ? comparison->rows.size() : 0;
}

ssc_status ssc_comparison_row(const ssc_comparison* comparison, size_t index,
                              size_t* evals, double* mean_distance,
                              double* std_distance, double* mean_best_f) {
  return Guard([&] {
    NotNull(comparison, "comparison");
    slicescape::Require(index < comparison->rows.size(), "row index out of range");
    const auto& row = comparison->rows[index];
    if (evals) *evals = row.evals;
    if (mean_distance) *mean_distance = row.mean_distance;
    if (std_distance) *std_distance = row.std_distance;
    if (mean_best_f) *mean_best_f = row.mean_best_f;
  });
}

ssc_status ssc_comparison_to_csv(const ssc_comparison* comparison, const char* label,
                                 ssc_buffer** out) {
  return Guard([&] {
    NotNull(comparison, "comparison");
    EmitBytes(out, slicescape::ComparisonToCsv(comparison->rows, label ? label : ""));
  });
}

ssc_status ssc_gradient_descent_path(const ssc_objective* objective, const double* x0,
                                     size_t n, double step, size_t iters, double h,
                                     ssc_path** out) {
  return Guard([&] {
    NotNull(objective, "objective");
    Emit(out, ssc_path{slicescape::GradientDescentPath(*objective->objective,
                                                       Span(x0, n, "x0"), step, iters, h)});
  });
}

void ssc_path_free(ssc_path* path) { delete path; }

size_t ssc_path_length(const ssc_path* path) { return path ? path->path.points.size() : 0; }

ssc_status ssc_path_point(const ssc_path* path, size_t index, double* out, size_t n) {
  return Guard([&] {
    NotNull(path, "path");
    slicescape::Require(index < path->path.points.size(), "path index out of range");
    const auto& p = path->path.points[index];
    slicescape::Require(n == p.size(), "point buffer length mismatch");
    if (n > 0) NotNull(out, "out");
    std::copy(p.begin(), p.end(), out);
  });
}

int ssc_path_diverged(const ssc_path* path) { return path && path->path.diverged; }

}  // extern "C"
