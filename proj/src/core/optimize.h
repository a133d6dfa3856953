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

#ifndef SLICESCAPE_CORE_OPTIMIZE_H_
#define SLICESCAPE_CORE_OPTIMIZE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/common.h"
#include "core/objectives.h"

namespace slicescape {

struct CmaesConfig {
  std::size_t population = 100;  // lambda
  double sigma0 = 0.5;
  std::size_t max_evals = 100000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

void Validate(const CmaesConfig& cfg);

struct HistoryEntry {
  std::size_t evals = 0;
  double best_f = 0.0;
  std::optional<double> distance;  // to the objective's known optimum
};

struct OptimizerRun {
  Vector best_x;
  double best_f = 0.0;
  std::vector<HistoryEntry> history;
  // Best-so-far point at each history entry; lets distances be recomputed
  // against a different reference point.
  std::vector<Vector> best_x_history;
  bool stopped_early = false;  // the search distribution degenerated
};

// (mu/mu_w, lambda)-CMA-ES with cumulative step-size adaptation and rank-one
// plus rank-mu covariance updates, using the standard default learning rates.
// Runs until max_evals; the last generation is truncated to the remaining
// budget. Non-finite objective values rank as +infinity.
OptimizerRun CmaesMinimize(const Objective& f, std::span<const double> x0,
                           const CmaesConfig& cfg);

struct GradientPath {
  std::vector<Vector> points;  // points[0] = x0
  bool diverged = false;
};

// x_{k+1} = x_k - step * grad f(x_k). Uses the analytic gradient when the
// objective has one, central differences with step h otherwise. Stops early
// when |x| exceeds 1e6.
GradientPath GradientDescentPath(const Objective& f, std::span<const double> x0,
                                 double step, std::size_t iters, double h);

Vector CentralGradient(const Objective& f, std::span<const double> x, double h);

struct ComparisonRow {
  std::size_t evals = 0;
  double mean_distance = 0.0;
  double std_distance = 0.0;  // population standard deviation across runs
  double mean_best_f = 0.0;
};

// Aligns runs generation by generation. With a reference point the distance
// is recomputed from each run's best-so-far history; otherwise the recorded
// distances are used. Runs that stopped early hold their last entry.
std::vector<ComparisonRow> CompareRuns(std::span<const OptimizerRun> runs,
                                       const std::optional<Vector>& known_optimum);

// `evals,best_f,dist` with metadata comment lines.
std::string RunHistoryToCsv(const OptimizerRun& run, const std::string& label);
std::string ComparisonToCsv(std::span<const ComparisonRow> rows,
                            const std::string& label);

}  // namespace slicescape

#endif  // SLICESCAPE_CORE_OPTIMIZE_H_
