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

#include "core/optimize.h"

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "core/common.h"
#include "core/objectives.h"

namespace slicescape {
namespace {

ObjectivePtr Sphere(std::size_t d) {
  return MakeObjective(ObjectiveKind::kQuadraticK, {d, d, 0.0});
}

ObjectivePtr Custom(std::size_t d, Objective::EvalFn fn, std::optional<Vector> opt = {}) {
  Objective::Spec spec;
  spec.name = "custom";
  spec.dimension = d;
  spec.evaluate = std::move(fn);
  spec.known_optimum = std::move(opt);
  return std::make_shared<const Objective>(std::move(spec));
}

TEST(Cmaes, SphereSanity) {
  CmaesConfig cfg;
  cfg.max_evals = 20000;
  cfg.seed = 3;
  const OptimizerRun run = CmaesMinimize(*Sphere(10), Vector(10, 1.0), cfg);
  EXPECT_LT(run.best_f, 1e-10);
  EXPECT_EQ(run.history.back().evals, 20000u);
  EXPECT_EQ(run.history.size(), 200u);
}

TEST(Cmaes, OneDimensionalShiftedQuadratic) {
  const auto f = Custom(1, [](std::span<const double> x, std::uint64_t) {
    return (x[0] - 3.0) * (x[0] - 3.0);
  });
  CmaesConfig cfg;
  cfg.max_evals = 5000;
  const OptimizerRun run = CmaesMinimize(*f, Vector{0.0}, cfg);
  EXPECT_NEAR(run.best_x[0], 3.0, 1e-5);
}

TEST(Cmaes, BudgetBelowOneGeneration) {
  CmaesConfig cfg;
  cfg.max_evals = 37;
  const OptimizerRun run = CmaesMinimize(*Sphere(4), Vector(4, 1.0), cfg);
  ASSERT_EQ(run.history.size(), 1u);
  EXPECT_EQ(run.history[0].evals, 37u);
  EXPECT_EQ(run.history[0].best_f, run.best_f);
  EXPECT_EQ(run.best_f, Sphere(4)->Evaluate(run.best_x));
}

TEST(Cmaes, TruncatesLastGeneration) {
  CmaesConfig cfg;
  cfg.max_evals = 250;
  const OptimizerRun run = CmaesMinimize(*Sphere(3), Vector(3, 1.0), cfg);
  ASSERT_EQ(run.history.size(), 3u);
  EXPECT_EQ(run.history[0].evals, 100u);
  EXPECT_EQ(run.history[2].evals, 250u);
}

TEST(Cmaes, BestSoFarMonotoneWithDistances) {
  CmaesConfig cfg;
  cfg.max_evals = 3000;
  cfg.population = 12;
  const OptimizerRun run = CmaesMinimize(*Sphere(5), Vector(5, 2.0), cfg);
  for (std::size_t g = 1; g < run.history.size(); ++g)
    EXPECT_LE(run.history[g].best_f, run.history[g - 1].best_f);
  for (std::size_t g = 0; g < run.history.size(); ++g) {
    ASSERT_TRUE(run.history[g].distance.has_value());
    EXPECT_DOUBLE_EQ(*run.history[g].distance, Norm(run.best_x_history[g]));
  }
}

TEST(Cmaes, SeedDeterminismAndWorkerIndependence) {
  CmaesConfig cfg;
  cfg.max_evals = 2000;
  cfg.seed = 17;
  const auto f = MakeObjective(ObjectiveKind::kRastrigin, {6, 1, 0.0});
  const OptimizerRun a = CmaesMinimize(*f, Vector(6, 0.5), cfg);
  cfg.workers = 4;
  const OptimizerRun b = CmaesMinimize(*f, Vector(6, 0.5), cfg);
  EXPECT_EQ(RunHistoryToCsv(a, "x"), RunHistoryToCsv(b, "x"));
  EXPECT_EQ(a.best_x, b.best_x);
  cfg.seed = 18;
  EXPECT_NE(CmaesMinimize(*f, Vector(6, 0.5), cfg).best_x, a.best_x);
}

TEST(Cmaes, NonFiniteValuesRankLast) {
  const auto f = Custom(2, [](std::span<const double> x, std::uint64_t) {
    if (x[0] < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (x[0] - 1.0) * (x[0] - 1.0) + x[1] * x[1];
  });
  CmaesConfig cfg;
  cfg.max_evals = 4000;
  cfg.population = 20;
  const OptimizerRun run = CmaesMinimize(*f, Vector{0.5, 0.5}, cfg);
  EXPECT_TRUE(std::isfinite(run.best_f));
  EXPECT_LT(run.best_f, 1e-8);
}

TEST(Cmaes, RejectsBadConfig) {
  CmaesConfig cfg;
  cfg.population = 3;
  EXPECT_THROW(CmaesMinimize(*Sphere(2), Vector(2, 0.0), cfg), Error);
  cfg = CmaesConfig{};
  cfg.sigma0 = 0.0;
  EXPECT_THROW(CmaesMinimize(*Sphere(2), Vector(2, 0.0), cfg), Error);
  EXPECT_THROW(CmaesMinimize(*Sphere(2), Vector(3, 0.0), CmaesConfig{}), Error);
}

TEST(GradientDescent, StationaryAtOptimum) {
  const auto f = MakeObjective(ObjectiveKind::kRastrigin, {3, 1, 0.0});
  const GradientPath path = GradientDescentPath(*f, Vector(3, 0.0), 0.01, 20, 1e-5);
  ASSERT_EQ(path.points.size(), 21u);
  for (const Vector& p : path.points) EXPECT_LT(Norm(p), 1e-8);
}

TEST(GradientDescent, SphereGeometricDecay) {
  const Vector x0 = {1.5, -0.5};
  const GradientPath path = GradientDescentPath(*Sphere(2), x0, 0.4, 10, 1e-5);
  for (std::size_t k = 0; k < path.points.size(); ++k) {
    const double factor = std::pow(0.2, static_cast<double>(k));
    EXPECT_NEAR(path.points[k][0], factor * x0[0], 1e-14);
    EXPECT_NEAR(path.points[k][1], factor * x0[1], 1e-14);
  }
}

TEST(GradientDescent, NumericGradientWhenNoAnalytic) {
  const auto f = Custom(2, [](std::span<const double> x, std::uint64_t) {
    return x[0] * x[0] + x[1] * x[1];
  });
  const Vector x0 = {1.5, -0.5};
  const GradientPath path = GradientDescentPath(*f, x0, 0.4, 10, 1e-5);
  for (std::size_t k = 0; k < path.points.size(); ++k)
    EXPECT_NEAR(path.points[k][0], std::pow(0.2, static_cast<double>(k)) * 1.5, 1e-9);
}

TEST(GradientDescent, ZigzagInStiffCoordinate) {
  const auto f = Custom(2, [](std::span<const double> x, std::uint64_t) {
    return 0.5 * (x[0] * x[0] + 100.0 * x[1] * x[1]);
  });
  // Stability limit for the stiff coordinate is 2 / 100.
  const GradientPath path = GradientDescentPath(*f, Vector{1.0, 1.0}, 0.019, 30, 1e-6);
  ASSERT_FALSE(path.diverged);
  for (std::size_t k = 2; k < path.points.size(); ++k) {
    const double d1 = path.points[k - 1][1] - path.points[k - 2][1];
    const double d2 = path.points[k][1] - path.points[k - 1][1];
    EXPECT_LT(d1 * d2, 0.0);
  }
}

TEST(GradientDescent, DivergenceTruncates) {
  const GradientPath path = GradientDescentPath(*Sphere(2), Vector{1.0, 1.0}, 5.0, 100, 1e-5);
  EXPECT_TRUE(path.diverged);
  EXPECT_LT(path.points.size(), 101u);
  EXPECT_LE(Norm(path.points.back()), 1e6);
}

TEST(CompareRuns, SingleRun) {
  CmaesConfig cfg;
  cfg.max_evals = 1000;
  cfg.population = 10;
  const std::vector<OptimizerRun> runs = {CmaesMinimize(*Sphere(3), Vector(3, 1.0), cfg)};
  const auto rows = CompareRuns(runs, std::nullopt);
  ASSERT_EQ(rows.size(), runs[0].history.size());
  for (std::size_t g = 0; g < rows.size(); ++g) {
    EXPECT_EQ(rows[g].evals, runs[0].history[g].evals);
    EXPECT_EQ(rows[g].mean_distance, *runs[0].history[g].distance);
    EXPECT_EQ(rows[g].mean_best_f, runs[0].history[g].best_f);
    EXPECT_EQ(rows[g].std_distance, 0.0);
  }
}

TEST(CompareRuns, IdenticalRunsHaveZeroSpread) {
  CmaesConfig cfg;
  cfg.max_evals = 800;
  cfg.population = 8;
  const OptimizerRun run = CmaesMinimize(*Sphere(3), Vector(3, 1.0), cfg);
  const std::vector<OptimizerRun> runs = {run, run};
  for (const auto& row : CompareRuns(runs, Vector(3, 0.0))) EXPECT_EQ(row.std_distance, 0.0);
}

TEST(CompareRuns, MeanDistanceDecreasesOnSphere) {
  std::vector<OptimizerRun> runs;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CmaesConfig cfg;
    cfg.max_evals = 3000;
    cfg.seed = seed;
    runs.push_back(CmaesMinimize(*Sphere(10), Vector(10, 1.0), cfg));
  }
  const auto rows = CompareRuns(runs, std::nullopt);
  for (std::size_t g = 1; g < rows.size(); ++g)
    EXPECT_LT(rows[g].mean_distance, rows[g - 1].mean_distance) << "generation " << g;
}

TEST(CompareRuns, EarlyStoppedRunHoldsLastEntry) {
  OptimizerRun full;
  OptimizerRun stopped;
  for (std::size_t g = 0; g < 3; ++g) {
    full.history.push_back({(g + 1) * 10, 1.0 / (g + 1), 1.0});
    full.best_x_history.push_back({1.0});
  }
  stopped.history.push_back({10, 0.5, 2.0});
  stopped.best_x_history.push_back({2.0});
  stopped.stopped_early = true;
  const std::vector<OptimizerRun> runs = {full, stopped};
  const auto rows = CompareRuns(runs, std::nullopt);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].evals, 30u);
  EXPECT_DOUBLE_EQ(rows[2].mean_distance, 1.5);
  EXPECT_DOUBLE_EQ(rows[2].std_distance, 0.5);

  stopped.stopped_early = false;
  const std::vector<OptimizerRun> bad = {full, stopped};
  EXPECT_THROW(CompareRuns(bad, std::nullopt), Error);
}

TEST(CompareRuns, EmptyInputRejected) {
  try {
    CompareRuns({}, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Csv, RunHistoryColumns) {
  OptimizerRun run;
  run.best_f = 0.25;
  run.history.push_back({100, 0.5, 0.1});
  run.history.push_back({200, 0.25, std::nullopt});
  const std::string csv = RunHistoryToCsv(run, "demo");
  EXPECT_NE(csv.find("# run: demo\n"), std::string::npos);
  EXPECT_NE(csv.find("evals,best_f,dist\n100,0.5,0.10000000000000001\n200,0.25,\n"),
            std::string::npos);
  const std::vector<ComparisonRow> rows = {{100, 1.0, 0.0, 2.0}};
  EXPECT_NE(ComparisonToCsv(rows, "v").find("evals,mean_dist,std_dist,mean_best_f\n100,1,0,2\n"),
            std::string::npos);
}

}  // namespace
}  // namespace slicescape
