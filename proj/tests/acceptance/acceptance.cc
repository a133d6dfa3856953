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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits 0 when
// every outcome matches expectations (all pass, except ids listed in
// --expect-fail). Uses the public C API only.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slicescape/slicescape.h"

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Thrown when a C API call fails unexpectedly.
struct ApiFailure {
  std::string what;
};

void Check(ssc_status status, const char* call) {
  if (status != SSC_OK) {
    throw ApiFailure{std::string(call) + ": " + ssc_status_name(status) + ": " +
                     ssc_last_error()};
  }
}

#define SSC_CHECK(expr) Check((expr), #expr)

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  ~Handle() { Free(ptr); }
  T* get() const { return ptr; }
  T** out() { return &ptr; }
};

using Objective = Handle<ssc_objective, ssc_objective_free>;
using Report = Handle<ssc_hessian_report, ssc_hessian_report_free>;
using Grid = Handle<ssc_grid, ssc_grid_free>;
using Buffer = Handle<ssc_buffer, ssc_buffer_free>;
using Run = Handle<ssc_run, ssc_run_free>;
using Comparison = Handle<ssc_comparison, ssc_comparison_free>;
using Rollout = Handle<ssc_trajectory, ssc_trajectory_free>;

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string Text(const Buffer& b) {
  return std::string(ssc_buffer_data(b.get()), ssc_buffer_size(b.get()));
}

Objective QuadraticK(size_t d, size_t k, double eps) {
  Objective f;
  SSC_CHECK(ssc_objective_create_quadratic_k(d, k, eps, f.out()));
  return f;
}

Objective TrajectoryObjective(const ssc_task& task) {
  Objective f;
  SSC_CHECK(ssc_objective_create_trajectory(&task, f.out()));
  return f;
}

ssc_task PendulumTask(size_t horizon, ssc_action_kind kind, ssc_objective_mode mode) {
  ssc_task task;
  ssc_task_default(&task);
  task.horizon = horizon;
  task.action_kind = kind;
  task.objective_mode = mode;
  return task;
}

Report HessianAt(const Objective& f, const std::vector<double>& x, double h) {
  Report r;
  SSC_CHECK(ssc_hessian_report_create(f.get(), x.data(), x.size(), h, 0, 1e-10, r.out()));
  return r;
}

struct Kappa {
  double value = 0.0;
  bool infinite = false;
  bool indefinite = false;
};

Kappa KappaOf(const Report& r) {
  Kappa k;
  int infinite = 0, indefinite = 0;
  ssc_hessian_report_kappa(r.get(), &k.value, &infinite, &indefinite);
  k.infinite = infinite != 0;
  k.indefinite = indefinite != 0;
  return k;
}

// 1. Slice condition number never exceeds the full condition number.
Outcome SliceKappaBound() {
  size_t checked = 0, violations = 0;
  double worst_ratio = 0.0;
  for (double eps : {0.01, 0.1}) {
    for (size_t d : {3, 10, 50}) {
      const size_t k = (d + 1) / 2;
      const Objective f = QuadraticK(d, k, eps);
      const std::vector<double> center(d, 0.0);
      std::vector<double> u(d), v(d);
      for (uint64_t b = 0; b < 500; ++b) {
        SSC_CHECK(ssc_sample_basis(d, 1000 * d + b, SSC_BASIS_ORTHONORMAL, u.data(), v.data()));
        double kappa = 0.0;
        int infinite = 0;
        SSC_CHECK(ssc_slice_condition_number(f.get(), center.data(), u.data(), v.data(), d,
                                             1e-5, 1e-10, &kappa, &infinite));
        const double ratio = infinite ? INFINITY : kappa * eps;
        worst_ratio = std::max(worst_ratio, ratio);
        if (ratio > 1.0 + 1e-3) ++violations;
        ++checked;
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " slices, " + std::to_string(violations) +
                               " violations, max kappa2d/kappa " + Fmt(worst_ratio)};
}

// 2. Restriction matrix extremes: k = 1 is singular, k = d is the identity.
Outcome RestrictionExtremes() {
  size_t singular = 0, isotropic = 0, total = 0;
  double worst = 0.0;
  for (size_t d : {3, 10, 50}) {
    std::vector<double> u(d), v(d);
    for (uint64_t b = 0; b < 100; ++b) {
      SSC_CHECK(ssc_sample_basis(d, 7000 * d + b, SSC_BASIS_ORTHONORMAL, u.data(), v.data()));
      double a[4];
      SSC_CHECK(ssc_slice_restriction_matrix(u.data(), v.data(), d, 1, a));
      Report low;
      SSC_CHECK(ssc_hessian_report_from_matrix(a, 2, 1e-10, low.out()));
      if (a[0] * a[3] - a[1] * a[2] < 1e-12 && KappaOf(low).infinite) ++singular;

      SSC_CHECK(ssc_slice_restriction_matrix(u.data(), v.data(), d, d, a));
      Report full;
      SSC_CHECK(ssc_hessian_report_from_matrix(a, 2, 1e-10, full.out()));
      const Kappa kf = KappaOf(full);
      const double err = kf.infinite ? INFINITY : std::abs(kf.value - 1.0);
      worst = std::max(worst, err);
      if (err <= 1e-6) ++isotropic;
      ++total;
    }
  }
  return {singular == total && isotropic == total,
          "k=1 flagged infinite " + std::to_string(singular) + "/" + std::to_string(total) +
              ", k=d kappa=1 " + std::to_string(isotropic) + "/" + std::to_string(total) +
              " (max |kappa-1| " + Fmt(worst) + ")"};
}

// 3. kappa = 1/eps from the closed-form and the finite-difference Hessian.
Outcome ClosedFormKappa() {
  const size_t d = 10, k = 5;
  const double eps = 0.01;
  std::vector<double> analytic(d * d, 0.0);
  for (size_t i = 0; i < d; ++i) analytic[i * d + i] = i < k ? 2.0 : 2.0 * eps;
  Report exact;
  SSC_CHECK(ssc_hessian_report_from_matrix(analytic.data(), d, 1e-10, exact.out()));
  const Objective f = QuadraticK(d, k, eps);
  const Report numeric = HessianAt(f, std::vector<double>(d, 0.0), 1e-5);
  const Kappa ka = KappaOf(exact), kn = KappaOf(numeric);
  const double ea = std::abs(ka.value - 100.0) / 100.0;
  const double en = std::abs(kn.value - 100.0) / 100.0;
  return {!ka.infinite && !kn.infinite && ea < 1e-3 && en < 1e-3,
          "analytic " + Fmt(ka.value) + ", numeric " + Fmt(kn.value)};
}

// 4. Torque-task kappa grows with the horizon; angle actions precondition.
Outcome HorizonConditioning() {
  std::string detail = "torque kappa:";
  std::vector<double> kappas;
  bool finite = true;
  for (size_t horizon : {1, 5, 10, 25, 50, 100}) {
    const Objective f = TrajectoryObjective(PendulumTask(horizon, SSC_ACTION_TORQUE, SSC_MODE_COST));
    const Kappa k = KappaOf(HessianAt(f, std::vector<double>(horizon, 0.0), 1e-4));
    finite = finite && !k.infinite && !k.indefinite;
    kappas.push_back(k.value);
    detail += " " + Fmt(k.value);
  }
  bool increasing = true;
  for (size_t i = 1; i < kappas.size(); ++i) increasing = increasing && kappas[i] > kappas[i - 1];
  const Objective angle = TrajectoryObjective(PendulumTask(100, SSC_ACTION_TARGET_ANGLE, SSC_MODE_COST));
  const Kappa ka = KappaOf(HessianAt(angle, std::vector<double>(100, 0.0), 1e-4));
  detail += "; angle kappa at T=100: " + Fmt(ka.value);
  return {finite && increasing && !ka.infinite && ka.value < kappas.back(), detail};
}

// 5. Cost and negated reward share the Hessian at the zero optimum.
Outcome CostRewardHessian() {
  const size_t horizon = 100;
  const std::vector<double> zero(horizon, 0.0);
  const Objective cost = TrajectoryObjective(PendulumTask(horizon, SSC_ACTION_TORQUE, SSC_MODE_COST));
  const Objective reward = TrajectoryObjective(PendulumTask(horizon, SSC_ACTION_TORQUE, SSC_MODE_REWARD));
  std::vector<double> hc(horizon * horizon), hr(horizon * horizon);
  SSC_CHECK(ssc_hessian_report_matrix(HessianAt(cost, zero, 1e-4).get(), hc.data(), horizon));
  SSC_CHECK(ssc_hessian_report_matrix(HessianAt(reward, zero, 1e-4).get(), hr.data(), horizon));
  double diff = 0.0, norm = 0.0;
  for (size_t i = 0; i < hc.size(); ++i) {
    diff += (hc[i] - hr[i]) * (hc[i] - hr[i]);
    norm += hc[i] * hc[i];
  }
  const double rel = std::sqrt(diff / norm);
  return {rel < 1e-3, "relative Frobenius difference " + Fmt(rel)};
}

// 6. PD rollouts match the substituted closed-form dynamics.
Outcome PdClosedForm() {
  const size_t horizon = 50;
  const ssc_task task = PendulumTask(horizon, SSC_ACTION_TARGET_ANGLE, SSC_MODE_COST);
  std::mt19937_64 rng(20261018);
  std::uniform_real_distribution<double> target(-1.0, 1.0);
  std::vector<double> targets(horizon);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    for (double& t : targets) t = target(rng);
    Rollout traj;
    SSC_CHECK(ssc_rollout(&task, targets.data(), horizon, traj.out()));
    double alpha = task.initial_alpha, omega = task.initial_omega;
    for (size_t t = 0; t < horizon; ++t) {
      omega = (1.0 + task.delta * task.kd) * omega +
              task.delta * (task.kp * (targets[t] - alpha) +
                            0.5 * task.length * task.gravity * std::sin(alpha));
      alpha += task.delta * omega;
      double a = 0.0, w = 0.0;
      SSC_CHECK(ssc_trajectory_state(traj.get(), t + 1, &a, &w));
      worst = std::max({worst, std::abs(a - alpha), std::abs(w - omega)});
    }
  }
  return {worst < 1e-12, "1000 sequences, max state deviation " + Fmt(worst)};
}

std::vector<double> PolicyScan(const ssc_task& task, const std::vector<double>& thetas) {
  Objective f;
  SSC_CHECK(ssc_objective_create_policy(&task, nullptr, 0, 0, f.out()));
  std::vector<double> values(thetas.size());
  SSC_CHECK(ssc_objective_evaluate_batch(f.get(), thetas.data(), thetas.size(), 1, 0, 0,
                                         values.data()));
  return values;
}

std::vector<size_t> LocalMinima(const std::vector<double>& f) {
  std::vector<size_t> minima;
  for (size_t i = 1; i + 1 < f.size(); ++i) {
    if (f[i] < f[i - 1] && f[i] < f[i + 1]) minima.push_back(i);
  }
  return minima;
}

std::string ThetaList(const std::vector<double>& thetas, const std::vector<size_t>& idx) {
  std::string s = "{";
  for (size_t n = 0; n < idx.size(); ++n) s += (n ? ", " : "") + Fmt(thetas[idx[n]]);
  return s + "}";
}

// Lowest local minimum with theta in [lo, hi], or npos.
size_t BestMinimumIn(const std::vector<double>& f, const std::vector<double>& thetas,
                     const std::vector<size_t>& minima, double lo, double hi) {
  size_t best = std::string::npos;
  for (size_t i : minima) {
    if (thetas[i] < lo - 1e-9 || thetas[i] > hi + 1e-9) continue;
    if (best == std::string::npos || f[i] < f[best]) best = i;
  }
  return best;
}

// Height of the highest point between i and j relative to the higher end.
double Barrier(const std::vector<double>& f, size_t i, size_t j) {
  const auto first = f.begin() + static_cast<std::ptrdiff_t>(std::min(i, j));
  const auto last = f.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)) + 1;
  const double ridge = *std::max_element(first, last);
  const double floor = std::max(f[i], f[j]);
  return (ridge - floor) / std::abs(floor);
}

// 7. Policy landscape: global optimum, termination basin, reward unimodality.
// Undamped oscillations and terminations on integer steps put small ripples
// on top of the basins. Basins are told apart from
// ripples by a barrier of at least 10% between them.
constexpr double kBasinBarrier = 0.1;

Outcome PolicyLandscape() {
  std::vector<double> thetas;
  for (int i = -100; i <= 100; ++i) thetas.push_back(0.01 * i);

  ssc_task task = PendulumTask(200, SSC_ACTION_TORQUE, SSC_MODE_COST);
  task.action_weight = 1.0;
  const std::vector<double> plain = PolicyScan(task, thetas);
  const size_t global =
      static_cast<size_t>(std::min_element(plain.begin(), plain.end()) - plain.begin());
  const bool a = std::abs(thetas[global] + 0.1) <= 0.1 + 1e-9;

  task.termination_enabled = 1;
  task.termination_mode = SSC_TERMINATION_PLAIN;
  const std::vector<double> terminated = PolicyScan(task, thetas);
  const std::vector<size_t> term_minima = LocalMinima(terminated);
  const size_t low = BestMinimumIn(terminated, thetas, term_minima, -0.2, 0.0);
  const size_t high = BestMinimumIn(terminated, thetas, term_minima, 0.35, 0.65);
  const bool b = low != std::string::npos && high != std::string::npos &&
                 Barrier(terminated, low, high) >= kBasinBarrier;
  std::string b_detail;
  if (b) {
    b_detail = "basins at theta " + Fmt(thetas[low]) + " (" + Fmt(terminated[low]) + ") and " +
               Fmt(thetas[high]) + " (" + Fmt(terminated[high]) + "), barrier " +
               Fmt(100.0 * Barrier(terminated, low, high)) + "% ok";
  } else {
    b_detail = "no separated basin near 0.5 among minima " + ThetaList(thetas, term_minima) +
               " FAILED";
  }

  task.objective_mode = SSC_MODE_REWARD;
  const std::vector<double> reward = PolicyScan(task, thetas);
  const std::vector<size_t> reward_optima = LocalMinima(reward);
  const bool c = reward_optima.size() == 1;
  const size_t best = static_cast<size_t>(
      std::min_element(reward.begin(), reward.end()) - reward.begin());
  double ripple = 0.0;
  for (size_t i : reward_optima) ripple = std::max(ripple, Barrier(reward, i, best));

  const std::string detail =
      "(a) global cost minimum at theta " + Fmt(thetas[global]) + (a ? " ok" : " FAILED") +
      "; (b) plain termination " + b_detail + "; (c) reward+termination local maxima " +
      ThetaList(thetas, reward_optima) +
      (c ? " ok" : " FAILED, not unimodal on the grid (largest barrier between them " +
                       Fmt(100.0 * ripple) + "%)");
  return {a && b && c, detail};
}

// 8. CMA-ES ordering on the pendulum at a fixed budget.
constexpr size_t kOrderingBudget = 100000;

double MeanFinalDistance(const ssc_task& task) {
  const size_t n = task.horizon;
  const Objective f = TrajectoryObjective(task);
  std::vector<double> x0(n);
  for (size_t i = 0; i < n; ++i) x0[i] = 0.3 * std::sin(0.1 * static_cast<double>(i + 1));
  ssc_cmaes_config cfg;
  ssc_cmaes_config_default(&cfg);
  cfg.max_evals = kOrderingBudget;
  cfg.workers = 0;
  std::vector<Run> runs;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    cfg.seed = seed;
    Run run;
    SSC_CHECK(ssc_cmaes_minimize(f.get(), x0.data(), n, &cfg, run.out()));
    runs.push_back(std::move(run));
  }
  std::vector<const ssc_run*> ptrs;
  for (const Run& r : runs) ptrs.push_back(r.get());
  const std::vector<double> optimum(n, 0.0);
  Comparison cmp;
  SSC_CHECK(ssc_compare_runs(ptrs.data(), ptrs.size(), optimum.data(), n, cmp.out()));
  double mean = 0.0;
  SSC_CHECK(ssc_comparison_row(cmp.get(), ssc_comparison_length(cmp.get()) - 1, nullptr, &mean,
                               nullptr, nullptr));
  return mean;
}

Outcome OptimizerOrdering() {
  const double torque_cost =
      MeanFinalDistance(PendulumTask(100, SSC_ACTION_TORQUE, SSC_MODE_COST));
  const double angle_cost =
      MeanFinalDistance(PendulumTask(100, SSC_ACTION_TARGET_ANGLE, SSC_MODE_COST));
  const double torque_reward =
      MeanFinalDistance(PendulumTask(100, SSC_ACTION_TORQUE, SSC_MODE_REWARD));
  return {angle_cost < torque_cost && torque_cost < torque_reward,
          "budget " + std::to_string(kOrderingBudget) + ", mean final distance angle-cost " +
              Fmt(angle_cost) + " < torque-cost " + Fmt(torque_cost) + " < torque-reward " +
              Fmt(torque_reward)};
}

// 9. Visualization protocol defaults, exact blur on constants, reproducibility.
Outcome VisualizationProtocol() {
  size_t resolution = 0, episodes = 0;
  double sigma = 0.0;
  ssc_visualization_defaults(&resolution, &episodes, &sigma);
  const bool defaults = resolution == 100 && episodes == 10 && sigma == 1.0;

  const std::vector<double> center2{0.0, 0.0}, e1{1.0, 0.0}, e2{0.0, 1.0};
  const ssc_plane flat_plane{center2.data(), e1.data(), e2.data(), 2, 1.0, resolution};
  const std::vector<double> constant(resolution * resolution, 0.7);
  Grid flat, blurred;
  SSC_CHECK(ssc_grid_from_values(&flat_plane, constant.data(), "constant", flat.out()));
  SSC_CHECK(ssc_grid_blur(flat.get(), sigma, blurred.out()));
  std::vector<double> out(constant.size());
  SSC_CHECK(ssc_grid_values(blurred.get(), out.data(), out.size()));
  const bool exact = out == constant;

  const ssc_task task = PendulumTask(100, SSC_ACTION_TORQUE, SSC_MODE_COST);
  const Objective f = TrajectoryObjective(task);
  const std::vector<double> center(100, 0.0);
  std::vector<double> u(100), v(100);
  SSC_CHECK(ssc_sample_basis(100, 42, SSC_BASIS_ORTHONORMAL, u.data(), v.data()));
  const ssc_plane plane{center.data(), u.data(), v.data(), 100, 1.0, resolution};
  std::string documents[2];
  for (int pass = 0; pass < 2; ++pass) {
    Grid raw, smooth;
    SSC_CHECK(ssc_grid_evaluate(f.get(), &plane, episodes, 42, pass == 0 ? 1 : 0, raw.out()));
    SSC_CHECK(ssc_grid_blur(raw.get(), sigma, smooth.out()));
    Buffer csv, meta, ppm;
    SSC_CHECK(ssc_grid_to_csv(smooth.get(), csv.out()));
    SSC_CHECK(ssc_grid_metadata_json(smooth.get(), meta.out()));
    SSC_CHECK(ssc_grid_heightmap_ppm(smooth.get(), SSC_COLORMAP_VIRIDIS, ppm.out()));
    documents[pass] = Text(csv) + Text(meta) + Text(ppm);
  }
  const bool reproducible = documents[0] == documents[1];
  return {defaults && exact && reproducible,
          "defaults " + std::to_string(resolution) + "x" + std::to_string(resolution) + ", " +
              std::to_string(episodes) + " episodes, sigma " + Fmt(sigma) +
              (defaults ? " ok" : " FAILED") + "; constant blur " +
              (exact ? "exact" : "NOT exact") + "; seeded grid artifacts " +
              (reproducible ? "byte-identical" : "DIFFER")};
}

// 10. The convexity check accepts quadratic slices and rejects Rastrigin ones.
Outcome ConvexitySpecificity() {
  size_t quad_total = 0, quad_pass = 0, rast_total = 0, rast_fail = 0;
  for (size_t d : {3, 10, 50}) {
    for (double eps : {0.0, 0.01, 0.1}) {
      const Objective f = QuadraticK(d, (d + 1) / 2, eps);
      const std::vector<double> center(d, 0.0);
      std::vector<double> u(d), v(d);
      for (uint64_t b = 0; b < 5; ++b) {
        SSC_CHECK(ssc_sample_basis(d, 300 * d + b, SSC_BASIS_ORTHONORMAL, u.data(), v.data()));
        const ssc_plane plane{center.data(), u.data(), v.data(), d, 1.0, 41};
        Grid g;
        SSC_CHECK(ssc_grid_evaluate(f.get(), &plane, 1, b, 0, g.out()));
        int passes = 0;
        SSC_CHECK(ssc_grid_convexity_check(g.get(), 1e-9, &passes));
        quad_pass += passes != 0;
        ++quad_total;
      }
    }
  }
  Objective rastrigin;
  SSC_CHECK(ssc_objective_create_rastrigin(2, rastrigin.out()));
  const std::vector<double> origin{0.0, 0.0};
  double u[2], v[2];
  for (uint64_t b = 0; b < 10; ++b) {
    SSC_CHECK(ssc_sample_basis(2, 900 + b, SSC_BASIS_ORTHONORMAL, u, v));
    const ssc_plane plane{origin.data(), u, v, 2, 5.12, 100};
    Grid g;
    SSC_CHECK(ssc_grid_evaluate(rastrigin.get(), &plane, 1, b, 0, g.out()));
    int passes = 1;
    SSC_CHECK(ssc_grid_convexity_check(g.get(), 1e-9, &passes));
    rast_fail += passes == 0;
    ++rast_total;
  }
  return {quad_pass == quad_total && rast_fail == rast_total,
          "quadratic_k slices convex " + std::to_string(quad_pass) + "/" +
              std::to_string(quad_total) + ", rastrigin slices rejected " +
              std::to_string(rast_fail) + "/" + std::to_string(rast_total)};
}

// 11. CMA-ES solves the 10-d sphere within 2e4 evaluations for every seed.
Outcome CmaesSphere() {
  const Objective sphere = QuadraticK(10, 10, 0.0);
  const std::vector<double> x0(10, 1.0);
  ssc_cmaes_config cfg;
  ssc_cmaes_config_default(&cfg);
  cfg.max_evals = 20000;
  size_t solved = 0;
  double worst = 0.0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    cfg.seed = seed;
    Run run;
    SSC_CHECK(ssc_cmaes_minimize(sphere.get(), x0.data(), 10, &cfg, run.out()));
    const double best = ssc_run_best_f(run.get());
    worst = std::max(worst, best);
    solved += best < 1e-10;
  }
  return {solved == 10, std::to_string(solved) + "/10 seeds below 1e-10, worst best_f " +
                            Fmt(worst)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slicescape acceptance suite"};
  std::vector<int> only;
  std::vector<int> expect_fail;
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  app.add_option("--expect-fail", expect_fail,
                 "Criteria known to fail; the exit status treats them as expected")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::function<Outcome()>> criteria = {
      {1, SliceKappaBound},        {2, RestrictionExtremes}, {3, ClosedFormKappa},
      {4, HorizonConditioning},    {5, CostRewardHessian},   {6, PdClosedForm},
      {7, PolicyLandscape},        {8, OptimizerOrdering},   {9, VisualizationProtocol},
      {10, ConvexitySpecificity},  {11, CmaesSphere},
  };
  const std::set<int> selected(only.begin(), only.end());
  const std::set<int> expected_failures(expect_fail.begin(), expect_fail.end());

  int passed = 0, failed = 0, unexpected = 0;
  for (const auto& [id, run] : criteria) {
    if (!selected.empty() && !selected.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const ApiFailure& e) {
      outcome = {false, "error: " + e.what};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool expected_fail = expected_failures.contains(id);
    std::printf("criterion %2d: %s  %s [%.1fs]%s\n", id, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str(), seconds,
                !outcome.pass && expected_fail ? " (known failure)" : "");
    std::fflush(stdout);
    (outcome.pass ? passed : failed) += 1;
    if (outcome.pass == expected_fail) ++unexpected;
  }
  std::printf("summary: %d passed, %d failed, %d unexpected\n", passed, failed, unexpected);
  return unexpected == 0 ? 0 : 1;
}
