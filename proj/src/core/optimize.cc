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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "core/analysis.h"
#include "core/parallel.h"
#include "core/seeding.h"
#include "core/slices.h"

namespace slicescape {
namespace {

constexpr double kDivergenceNorm = 1e6;

// Strategy parameters derived from dimension and population size.
struct Strategy {
  std::size_t n = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;
  Vector weights;
  double mueff = 0.0;
  double cs = 0.0;
  double damps = 0.0;
  double cc = 0.0;
  double c1 = 0.0;
  double cmu = 0.0;
  double chi_n = 0.0;
  std::size_t eigen_interval = 1;  // generations between decompositions
};

Strategy MakeStrategy(std::size_t n, std::size_t lambda) {
  Strategy s;
  const double nd = static_cast<double>(n);
  s.n = n;
  s.lambda = lambda;
  s.mu = lambda / 2;
  s.weights.resize(s.mu);
  const double base = std::log((static_cast<double>(lambda) + 1.0) / 2.0);
  for (std::size_t i = 0; i < s.mu; ++i)
    s.weights[i] = base - std::log(static_cast<double>(i + 1));
  const double wsum = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
  for (double& w : s.weights) w /= wsum;
  s.mueff = 1.0 / SquaredNorm(s.weights);

  s.cs = (s.mueff + 2.0) / (nd + s.mueff + 5.0);
  s.damps = 1.0 + 2.0 * std::max(0.0, std::sqrt((s.mueff - 1.0) / (nd + 1.0)) - 1.0) +
            s.cs;
  s.cc = (4.0 + s.mueff / nd) / (nd + 4.0 + 2.0 * s.mueff / nd);
  s.c1 = 2.0 / ((nd + 1.3) * (nd + 1.3) + s.mueff);
  s.cmu = std::min(1.0 - s.c1, 2.0 * (s.mueff - 2.0 + 1.0 / s.mueff) /
                                   ((nd + 2.0) * (nd + 2.0) + s.mueff));
  s.chi_n = std::sqrt(nd) * (1.0 - 1.0 / (4.0 * nd) + 1.0 / (21.0 * nd * nd));
  const double interval =
      static_cast<double>(lambda) / (s.c1 + s.cmu) / nd / 10.0;
  s.eigen_interval = std::max<std::size_t>(1, static_cast<std::size_t>(interval));
  return s;
}

std::optional<double> DistanceToOptimum(const Objective& f,
                                        std::span<const double> x) {
  if (!f.known_optimum()) return std::nullopt;
  return Distance(x, *f.known_optimum());
}

}  // namespace

void Validate(const CmaesConfig& cfg) {
  Require(cfg.population >= 4, "CMA-ES population must be >= 4");
  Require(std::isfinite(cfg.sigma0) && cfg.sigma0 > 0.0, "sigma0 must be > 0");
  Require(cfg.max_evals >= 1, "CMA-ES budget must be >= 1");
}

OptimizerRun CmaesMinimize(const Objective& f, std::span<const double> x0,
                           const CmaesConfig& cfg) {
  Validate(cfg);
  Require(x0.size() == f.dimension(), "x0 has the wrong dimension");
  Require(AllFinite(x0), "x0 must be finite");
  const std::size_t n = f.dimension();
  const Strategy s = MakeStrategy(n, cfg.population);

  std::mt19937_64 rng = MakeEngine(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Vector mean(x0.begin(), x0.end());
  double sigma = cfg.sigma0;
  Matrix cov = Matrix::Identity(n);
  Matrix basis = Matrix::Identity(n);  // B: eigenvectors of cov
  Vector scales(n, 1.0);                // D: sqrt of eigenvalues
  Vector path_sigma(n, 0.0);
  Vector path_c(n, 0.0);

  OptimizerRun run;
  run.best_f = std::numeric_limits<double>::infinity();
  run.best_x = mean;

  std::vector<Vector> z(s.lambda, Vector(n));
  std::vector<Vector> y(s.lambda, Vector(n));
  std::vector<Vector> candidates(s.lambda, Vector(n));
  Vector fitness(s.lambda);
  std::vector<std::size_t> order(s.lambda);

  std::size_t evals = 0;
  for (std::size_t generation = 0; evals < cfg.max_evals; ++generation) {
    const std::size_t count = std::min(s.lambda, cfg.max_evals - evals);
    // Sampling is serial so the random stream does not depend on workers.
    for (std::size_t k = 0; k < count; ++k) {
      for (double& zi : z[k]) zi = normal(rng);
      for (std::size_t r = 0; r < n; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < n; ++c) acc += basis(r, c) * scales[c] * z[k][c];
        y[k][r] = acc;
        candidates[k][r] = mean[r] + sigma * acc;
      }
    }
    ParallelFor(count, cfg.workers, [&](std::size_t k) {
      const double v = f.Evaluate(candidates[k]);
      fitness[k] = std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    });
    evals += count;
    for (std::size_t k = 0; k < count; ++k) {
      if (fitness[k] < run.best_f) {
        run.best_f = fitness[k];
        run.best_x = candidates[k];
      }
    }
    run.history.push_back({evals, run.best_f, DistanceToOptimum(f, run.best_x)});
    run.best_x_history.push_back(run.best_x);
    if (count < s.lambda) break;

    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return fitness[a] < fitness[b];
    });

    // Recombination: y_w is the weighted mean step in the sampling frame.
    Vector y_w(n, 0.0);
    Vector z_w(n, 0.0);
    for (std::size_t i = 0; i < s.mu; ++i) {
      const std::size_t k = order[i];
      for (std::size_t r = 0; r < n; ++r) {
        y_w[r] += s.weights[i] * y[k][r];
        z_w[r] += s.weights[i] * z[k][r];
      }
    }
    for (std::size_t r = 0; r < n; ++r) mean[r] += sigma * y_w[r];

    // C^{-1/2} y_w = B z_w.
    const double ps_coeff = std::sqrt(s.cs * (2.0 - s.cs) * s.mueff);
    for (std::size_t r = 0; r < n; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) acc += basis(r, c) * z_w[c];
      path_sigma[r] = (1.0 - s.cs) * path_sigma[r] + ps_coeff * acc;
    }
    const double ps_norm = Norm(path_sigma);
    const double decay =
        1.0 - std::pow(1.0 - s.cs, 2.0 * static_cast<double>(generation + 1));
    const bool hsig = ps_norm / std::sqrt(decay) <
                      (1.4 + 2.0 / (static_cast<double>(n) + 1.0)) * s.chi_n;
    const double pc_coeff = std::sqrt(s.cc * (2.0 - s.cc) * s.mueff);
    for (std::size_t r = 0; r < n; ++r)
      path_c[r] = (1.0 - s.cc) * path_c[r] + (hsig ? pc_coeff * y_w[r] : 0.0);

    const double hsig_correction = hsig ? 0.0 : s.c1 * s.cc * (2.0 - s.cc);
    const double keep = 1.0 - s.c1 - s.cmu + hsig_correction;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c <= r; ++c) {
        double rank_mu = 0.0;
        for (std::size_t i = 0; i < s.mu; ++i) {
          const Vector& yi = y[order[i]];
          rank_mu += s.weights[i] * yi[r] * yi[c];
        }
        const double value =
            keep * cov(r, c) + s.c1 * path_c[r] * path_c[c] + s.cmu * rank_mu;
        cov(r, c) = cov(c, r) = value;
      }
    }
    sigma *= std::exp((s.cs / s.damps) * (ps_norm / s.chi_n - 1.0));

    if (!std::isfinite(sigma) || sigma <= 0.0 || !AllFinite(cov.data())) {
      run.stopped_early = true;
      break;
    }
    if ((generation + 1) % s.eigen_interval == 0) {
      const EigenDecomposition eig = JacobiEigen(cov);
      basis = eig.vectors;
      const double top = std::max(eig.values.back(), 0.0);
      for (std::size_t i = 0; i < n; ++i)
        scales[i] = std::sqrt(std::max(eig.values[i], 1e-300 + 1e-20 * top));
    }
    if (sigma * scales.back() < 1e-300) {
      run.stopped_early = true;
      break;
    }
  }
  return run;
}

Vector CentralGradient(const Objective& f, std::span<const double> x, double h) {
  Require(h > 0.0, "gradient step h must be > 0");
  Vector g(x.size());
  Vector probe(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = f.Evaluate(probe);
    probe[i] = x[i] - h;
    const double fm = f.Evaluate(probe);
    probe[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

GradientPath GradientDescentPath(const Objective& f, std::span<const double> x0,
                                 double step, std::size_t iters, double h) {
  Require(std::isfinite(step) && step > 0.0, "gradient descent step must be > 0");
  Require(x0.size() == f.dimension(), "x0 has the wrong dimension");
  GradientPath path;
  path.points.emplace_back(x0.begin(), x0.end());
  for (std::size_t k = 0; k < iters; ++k) {
    const Vector& x = path.points.back();
    const Vector g = f.has_gradient() ? f.Gradient(x) : CentralGradient(f, x, h);
    Vector next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) next[i] = x[i] - step * g[i];
    if (!AllFinite(next) || Norm(next) > kDivergenceNorm) {
      path.diverged = true;
      break;
    }
    path.points.push_back(std::move(next));
  }
  return path;
}

std::vector<ComparisonRow> CompareRuns(std::span<const OptimizerRun> runs,
                                       const std::optional<Vector>& known_optimum) {
  Require(!runs.empty(), "compare_runs needs at least one run");
  const OptimizerRun* longest = &runs.front();
  for (const OptimizerRun& run : runs) {
    Require(!run.history.empty(), "compare_runs needs non-empty histories");
    if (run.history.size() > longest->history.size()) longest = &run;
  }
  const std::size_t length = longest->history.size();
  for (const OptimizerRun& run : runs) {
    // A run whose search distribution collapsed keeps its final best-so-far
    // entry for the remaining generations.
    Require(run.history.size() == length || run.stopped_early,
            "runs do not share a budget axis");
    for (std::size_t g = 0; g < run.history.size(); ++g)
      Require(run.history[g].evals == longest->history[g].evals,
              "runs do not share a budget axis");
  }

  const double count = static_cast<double>(runs.size());
  std::vector<ComparisonRow> rows(length);
  for (std::size_t g = 0; g < length; ++g) {
    Vector dist(runs.size());
    double mean_f = 0.0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      const OptimizerRun& run = runs[r];
      const std::size_t at = std::min(g, run.history.size() - 1);
      if (known_optimum) {
        dist[r] = Distance(run.best_x_history.at(at), *known_optimum);
      } else {
        Require(run.history[at].distance.has_value(),
                "run has no distance to an optimum; pass a reference point");
        dist[r] = *run.history[at].distance;
      }
      mean_f += run.history[at].best_f;
    }
    const double mean = std::accumulate(dist.begin(), dist.end(), 0.0) / count;
    double var = 0.0;
    for (double d : dist) var += (d - mean) * (d - mean);
    rows[g] = {longest->history[g].evals, mean, std::sqrt(var / count),
               mean_f / count};
  }
  return rows;
}

std::string RunHistoryToCsv(const OptimizerRun& run, const std::string& label) {
  std::string out = "# run: " + label + "\n";
  out += "# best_f: " + FormatDouble(run.best_f) + "\n";
  out += "# stopped_early: " + std::string(run.stopped_early ? "true" : "false") + "\n";
  out += "evals,best_f,dist\n";
  for (const HistoryEntry& e : run.history) {
    out += std::to_string(e.evals) + "," + FormatDouble(e.best_f) + "," +
           (e.distance ? FormatDouble(*e.distance) : std::string("")) + "\n";
  }
  return out;
}

std::string ComparisonToCsv(std::span<const ComparisonRow> rows,
                            const std::string& label) {
  std::string out = "# variant: " + label + "\n";
  out += "evals,mean_dist,std_dist,mean_best_f\n";
  for (const ComparisonRow& r : rows) {
    out += std::to_string(r.evals) + "," + FormatDouble(r.mean_distance) + "," +
           FormatDouble(r.std_distance) + "," + FormatDouble(r.mean_best_f) + "\n";
  }
  return out;
}

}  // namespace slicescape
