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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cli/errors.h"
#include "cli/handles.h"
#include "slicescape/slicescape.h"

namespace slicescape::cli {
namespace {

using Vec = std::vector<double>;

ssc_termination_mode TerminationMode(const std::string& name) {
  if (name == "plain") return SSC_TERMINATION_PLAIN;
  if (name == "alive_bonus") return SSC_TERMINATION_ALIVE_BONUS;
  if (name == "penalty") return SSC_TERMINATION_PENALTY;
  return SSC_TERMINATION_NONE;
}

ssc_action_kind ActionKind(const std::string& space) {
  if (space == "angle") return SSC_ACTION_TARGET_ANGLE;
  if (space == "spline") return SSC_ACTION_SPLINE_TARGET_ANGLE;
  return SSC_ACTION_TORQUE;
}

ssc_task MakeTask(const TaskSection& s, std::size_t horizon, const std::string& space,
                  const std::string& objective, const std::string& termination) {
  ssc_task task;
  ssc_task_default(&task);
  task.horizon = horizon;
  task.action_kind = ActionKind(space);
  task.objective_mode = objective == "reward" ? SSC_MODE_REWARD : SSC_MODE_COST;
  task.action_weight = s.action_weight;
  task.spline_spacing = s.spline_spacing;
  task.termination_mode = TerminationMode(termination);
  task.termination_enabled = task.termination_mode != SSC_TERMINATION_NONE;
  task.termination_threshold = s.termination_threshold;
  task.alive_bonus = s.alive_bonus;
  task.penalty_per_step = s.penalty_per_step;
  return task;
}

ssc_task FirstTask(const ExperimentConfig& c) {
  return MakeTask(c.task, c.task.horizons.front(), c.task.action_spaces.front(), c.task.objective,
                  c.task.termination);
}

ObjectiveHandle TrajectoryObjective(const ssc_task& task) {
  ObjectiveHandle f;
  Check(ssc_objective_create_trajectory(&task, f.out()));
  return f;
}

Vec OptimumOrZero(const ObjectiveHandle& f) {
  Vec x(ssc_objective_dimension(f.get()), 0.0);
  int has = 0;
  Check(ssc_objective_known_optimum(f.get(), x.data(), x.size(), &has));
  if (!has) std::fill(x.begin(), x.end(), 0.0);
  return x;
}

struct Basis {
  Vec u;
  Vec v;
};

Basis SampleBasis(std::size_t d, std::uint64_t seed, const std::string& mode) {
  if (d < 2) throw ConfigError("a slice needs at least two dimensions, got " + std::to_string(d));
  Basis b{Vec(d), Vec(d)};
  Check(ssc_sample_basis(d, seed,
                         mode == "unnormalized" ? SSC_BASIS_UNNORMALIZED : SSC_BASIS_ORTHONORMAL,
                         b.u.data(), b.v.data()));
  return b;
}

GridHandle EvaluateGrid(const ObjectiveHandle& f, const Vec& center, const Basis& basis,
                        double extent, std::size_t resolution, std::size_t episodes,
                        std::uint64_t seed, std::size_t workers) {
  const ssc_plane plane{center.data(), basis.u.data(), basis.v.data(), center.size(), extent,
                        resolution};
  GridHandle grid;
  Check(ssc_grid_evaluate(f.get(), &plane, episodes, seed, workers, grid.out()));
  return grid;
}

Vec Values(const GridHandle& grid) {
  const std::size_t n = ssc_grid_resolution(grid.get());
  Vec values(n * n);
  Check(ssc_grid_values(grid.get(), values.data(), values.size()));
  return values;
}

// Raw values as CSV and metadata; contours and heightmap of the blurred grid.
void WriteGrid(OutputDir& out, const std::string& stem, const GridHandle& raw, double sigma,
               const std::string& colormap) {
  BufferHandle csv, meta, svg, ppm;
  Check(ssc_grid_to_csv(raw.get(), csv.out()));
  Check(ssc_grid_metadata_json(raw.get(), meta.out()));
  out.Write(stem + ".csv", Text(csv));
  out.Write(stem + ".json", Text(meta));
  GridHandle blurred;
  const ssc_grid* shown = raw.get();
  if (sigma > 0.0) {
    Check(ssc_grid_blur(raw.get(), sigma, blurred.out()));
    shown = blurred.get();
  }
  Check(ssc_grid_contour_svg(shown, nullptr, 0, nullptr, 0, svg.out()));
  Check(ssc_grid_heightmap_ppm(
      shown, colormap == "gray" ? SSC_COLORMAP_GRAY : SSC_COLORMAP_VIRIDIS, ppm.out()));
  out.Write(stem + ".svg", Text(svg));
  out.Write(stem + ".ppm", Text(ppm));
}

// Value at the plane origin, or NaN when the resolution is even.
double CenterValue(const GridHandle& grid) {
  const std::size_t n = ssc_grid_resolution(grid.get());
  if (n % 2 == 0) return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  Check(ssc_grid_value(grid.get(), n / 2, n / 2, &value, nullptr));
  return value;
}

std::size_t LocalMinima2d(const GridHandle& grid) {
  const std::size_t n = ssc_grid_resolution(grid.get());
  const Vec v = Values(grid);
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const double c = v[i * n + j];
      bool lowest = std::isfinite(c);
      for (int di = -1; di <= 1 && lowest; ++di) {
        for (int dj = -1; dj <= 1 && lowest; ++dj) {
          if (di == 0 && dj == 0) continue;
          lowest = c < v[(i + di) * n + (j + dj)];
        }
      }
      count += lowest;
    }
  }
  return count;
}

struct Curve {
  std::string label;
  Vec xs;
  Vec ys;
};

std::string CurvesSvg(const std::vector<Curve>& curves, const std::string& title,
                      const std::string& x_label, const std::string& y_label, bool log_y) {
  std::vector<const char*> labels;
  std::vector<const double*> xs, ys;
  std::vector<std::size_t> lengths;
  for (const Curve& c : curves) {
    labels.push_back(c.label.c_str());
    xs.push_back(c.xs.data());
    ys.push_back(c.ys.data());
    lengths.push_back(c.xs.size());
  }
  BufferHandle svg;
  Check(ssc_curves_svg(curves.size(), labels.data(), xs.data(), ys.data(), lengths.data(),
                       title.c_str(), x_label.c_str(), y_label.c_str(), log_y, svg.out()));
  return Text(svg);
}

std::string Join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + cells[i];
  return line + "\n";
}

std::string F(double v) { return FormatDouble(v); }
std::string U(std::size_t v) { return std::to_string(v); }

}  // namespace

void RunSlice(const ExperimentConfig& c, OutputDir& out, std::ostream& log) {
  const ssc_task task = FirstTask(c);
  const ObjectiveHandle f = TrajectoryObjective(task);
  const Vec center = OptimumOrZero(f);
  std::string summary = "seed,argmin_i,argmin_j,min_value,center_value,failed_cells\n";
  for (std::size_t s = 0; s < c.slice.seeds; ++s) {
    const std::uint64_t seed = c.experiment.seed + s;
    const Basis basis = SampleBasis(center.size(), seed, c.slice.basis);
    const GridHandle grid = EvaluateGrid(f, center, basis, c.slice.extent, c.slice.resolution,
                                         c.slice.episodes, seed, c.experiment.workers);
    WriteGrid(out, "slice_seed" + std::to_string(seed), grid, c.slice.sigma, c.slice.colormap);
    std::size_t i = 0, j = 0;
    Check(ssc_grid_argmin(grid.get(), &i, &j));
    double min_value = 0.0;
    Check(ssc_grid_value(grid.get(), i, j, &min_value, nullptr));
    summary += Join({std::to_string(seed), U(i), U(j), F(min_value), F(CenterValue(grid)),
                     U(ssc_grid_failed_count(grid.get()))});
    log << "slice seed " << seed << ": minimum " << F(min_value) << " at cell (" << i << ", "
        << j << ")\n";
  }
  out.Write("slice_summary.csv", summary);
}

void RunSweepT(const ExperimentConfig& c, OutputDir& out, std::ostream& log) {
  const double step = c.hessian.step > 0.0 ? c.hessian.step : 1e-4;
  std::string table = "T,action_space,kappa,separability\n";
  std::vector<Curve> curves;
  for (const std::string& space : c.task.action_spaces) {
    Curve curve{space, {}, {}};
    for (std::size_t horizon : c.task.horizons) {
      const ssc_task task =
          MakeTask(c.task, horizon, space, c.task.objective, c.task.termination);
      const ObjectiveHandle f = TrajectoryObjective(task);
      const Vec center = OptimumOrZero(f);
      ReportHandle report;
      Check(ssc_hessian_report_create(f.get(), center.data(), center.size(), step,
                                      c.experiment.workers, c.hessian.rank_tol, report.out()));
      BufferHandle json;
      Check(ssc_hessian_report_to_json(report.get(), c.hessian.include_matrix, json.out()));
      const std::string stem = space + "_T" + std::to_string(horizon);
      out.Write("hessian_" + stem + ".json", Text(json));
      double kappa = 0.0;
      int infinite = 0;
      ssc_hessian_report_kappa(report.get(), &kappa, &infinite, nullptr);
      if (infinite) kappa = std::numeric_limits<double>::infinity();
      const double separability = ssc_hessian_report_separability(report.get());
      table += Join({std::to_string(horizon), space, F(kappa), F(separability)});
      if (!infinite) {
        curve.xs.push_back(static_cast<double>(horizon));
        curve.ys.push_back(kappa);
      }
      if (center.size() >= 2) {
        const Basis basis = SampleBasis(center.size(), c.experiment.seed, c.slice.basis);
        const GridHandle grid =
            EvaluateGrid(f, center, basis, c.slice.extent, c.slice.resolution, c.slice.episodes,
                         c.experiment.seed, c.experiment.workers);
        WriteGrid(out, "sweep_" + stem, grid, c.slice.sigma, c.slice.colormap);
      }
      log << "sweep-T " << space << " T=" << horizon << ": kappa " << F(kappa)
          << ", separability " << F(separability) << "\n";
    }
    curves.push_back(std::move(curve));
  }
  out.Write("sweep_T.csv", table);
  out.Write("sweep_T_kappa.svg",
            CurvesSvg(curves, "Hessian condition number at the optimum", "T", "kappa", true));
}

void RunPolicyLandscape(const ExperimentConfig& c, OutputDir& out, std::ostream& log) {
  const auto& p = c.policy;
  const std::size_t count =
      static_cast<std::size_t>(std::llround((p.theta_max - p.theta_min) / p.theta_step)) + 1;
  Vec thetas(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snapped to 12 decimals so grid points print as typed (-0.1, not
    // -0.09999999999999998).
    thetas[i] = std::round((p.theta_min + static_cast<double>(i) * p.theta_step) * 1e12) / 1e12;
  }
  std::string landscape = "mode,w,theta,value\n";
  std::string extrema = "mode,w,kind,theta,value,global\n";
  for (const std::string& mode : p.modes) {
    const auto plus = mode.find('+');
    const std::string objective = mode.substr(0, plus);
    const std::string termination = plus == std::string::npos ? "none" : mode.substr(plus + 1);
    const bool reward = objective == "reward";
    std::vector<Curve> curves;
    for (double w : p.weights) {
      ssc_task task = MakeTask(c.task, c.task.horizons.front(), "torque", objective, termination);
      task.action_weight = w;
      ObjectiveHandle f;
      Check(ssc_objective_create_policy(&task, p.angles.empty() ? nullptr : p.angles.data(),
                                        p.angles.size(), 0, f.out()));
      Vec handle_values(count);
      Check(ssc_objective_evaluate_batch(f.get(), thetas.data(), count, 1, c.experiment.seed,
                                         c.experiment.workers, handle_values.data()));
      Curve curve{"w = " + F(w), thetas, {}};
      for (std::size_t i = 0; i < count; ++i) {
        const double value = reward ? -handle_values[i] : handle_values[i];
        curve.ys.push_back(value);
        landscape += Join({mode, F(w), F(thetas[i]), F(value)});
      }
      // Interior grid points below both neighbours of the minimized handle.
      const std::size_t global = static_cast<std::size_t>(
          std::min_element(handle_values.begin(), handle_values.end()) - handle_values.begin());
      std::string found;
      for (std::size_t i = 1; i + 1 < count; ++i) {
        if (handle_values[i] < handle_values[i - 1] && handle_values[i] < handle_values[i + 1]) {
          extrema += Join({mode, F(w), reward ? "max" : "min", F(thetas[i]), F(curve.ys[i]),
                           i == global ? "1" : "0"});
          found += (found.empty() ? "" : " ") + F(thetas[i]);
        }
      }
      log << "policy-landscape " << mode << " w=" << F(w) << ": global "
          << (reward ? "maximum" : "minimum") << " at theta " << F(thetas[global])
          << "; local " << (reward ? "maxima" : "minima") << " {" << found << "}\n";
      curves.push_back(std::move(curve));
    }
    std::string file = mode;
    std::replace(file.begin(), file.end(), '+', '_');
    out.Write("policy_" + file + ".svg",
              CurvesSvg(curves, "Policy landscape (" + mode + ")", "theta",
                        reward ? "mean reward" : "mean cost", false));
  }
  out.Write("policy_landscape.csv", landscape);
  out.Write("policy_extrema.csv", extrema);
}

void RunTermination(const ExperimentConfig& c, OutputDir& out, std::ostream& log) {
  const std::string& space = c.task.action_spaces.front();
  const std::size_t horizon = c.task.horizons.front();
  std::string summary = "termination,min_value,max_value,center_value,local_minima\n";
  for (const std::string& mode : c.slice.terminations) {
    const ssc_task task = MakeTask(c.task, horizon, space, c.task.objective, mode);
    const ObjectiveHandle f = TrajectoryObjective(task);
    const Vec center = OptimumOrZero(f);
    const Basis basis = SampleBasis(center.size(), c.experiment.seed, c.slice.basis);
    const GridHandle grid = EvaluateGrid(f, center, basis, c.slice.extent, c.slice.resolution,
                                         c.slice.episodes, c.experiment.seed,
                                         c.experiment.workers);
    WriteGrid(out, "termination_" + mode, grid, c.slice.sigma, c.slice.colormap);
    std::size_t i = 0, j = 0;
    double lo = 0.0, hi = 0.0;
    Check(ssc_grid_argmin(grid.get(), &i, &j));
    Check(ssc_grid_value(grid.get(), i, j, &lo, nullptr));
    Check(ssc_grid_argmax(grid.get(), &i, &j));
    Check(ssc_grid_value(grid.get(), i, j, &hi, nullptr));
    const std::size_t minima = LocalMinima2d(grid);
    summary += Join({mode, F(lo), F(hi), F(CenterValue(grid)), U(minima)});
    log << "termination " << mode << ": range [" << F(lo) << ", " << F(hi) << "], " << minima
        << " local minima\n";
  }
  out.Write("termination_summary.csv", summary);
}

void RunOptCompare(const ExperimentConfig& c, OutputDir& out, std::ostream& log) {
  const auto& o = c.optimizer;
  std::string summary = "variant,evals,mean_distance,std_distance,mean_best_f\n";
  std::vector<Curve> curves;
  for (const std::string& variant : o.variants) {
    const auto dash = variant.find('-');
    const ssc_task task = MakeTask(c.task, c.task.horizons.front(), variant.substr(0, dash),
                                   variant.substr(dash + 1), c.task.termination);
    const ObjectiveHandle f = TrajectoryObjective(task);
    const Vec optimum = OptimumOrZero(f);
    Vec x0(optimum.size());
    for (std::size_t i = 0; i < x0.size(); ++i) {
      x0[i] = optimum[i] + o.x0_amplitude * std::sin(0.1 * static_cast<double>(i + 1));
    }
    ssc_cmaes_config cfg;
    ssc_cmaes_config_default(&cfg);
    cfg.population = o.population;
    cfg.sigma0 = o.sigma0;
    cfg.max_evals = o.budget;
    cfg.workers = c.experiment.workers;
    std::vector<RunHandle> runs;
    for (std::size_t s = 0; s < o.seeds; ++s) {
      cfg.seed = c.experiment.seed + s;
      RunHandle run;
      Check(ssc_cmaes_minimize(f.get(), x0.data(), x0.size(), &cfg, run.out()));
      BufferHandle csv;
      Check(ssc_run_to_csv(run.get(), variant.c_str(), csv.out()));
      out.Write("runs/" + variant + "_seed" + std::to_string(cfg.seed) + ".csv", Text(csv));
      runs.push_back(std::move(run));
    }
    std::vector<const ssc_run*> ptrs;
    for (const RunHandle& r : runs) ptrs.push_back(r.get());
    ComparisonHandle cmp;
    Check(ssc_compare_runs(ptrs.data(), ptrs.size(), optimum.data(), optimum.size(), cmp.out()));
    BufferHandle csv;
    Check(ssc_comparison_to_csv(cmp.get(), variant.c_str(), csv.out()));
    out.Write("compare_" + variant + ".csv", Text(csv));
    Curve curve{variant, {}, {}};
    const std::size_t rows = ssc_comparison_length(cmp.get());
    std::size_t evals = 0;
    double mean = 0.0, spread = 0.0, best = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      Check(ssc_comparison_row(cmp.get(), r, &evals, &mean, &spread, &best));
      curve.xs.push_back(static_cast<double>(evals));
      curve.ys.push_back(mean);
    }
    summary += Join({variant, U(evals), F(mean), F(spread), F(best)});
    log << "opt-compare " << variant << ": mean final distance " << F(mean) << " (std "
        << F(spread) << ") after " << evals << " evaluations\n";
    curves.push_back(std::move(curve));
  }
  out.Write("opt_compare.csv", summary);
  out.Write("opt_compare.svg", CurvesSvg(curves, "CMA-ES distance to the optimum", "evaluations",
                                         "mean distance", true));
}

void RunTheory(const ExperimentConfig& c, OutputDir& out, std::ostream& log) {
  const auto& t = c.theory;
  const double h = c.hessian.step > 0.0 ? c.hessian.step : 1e-5;
  std::string kappas = "d,k,eps,basis,bases,median_kappa,min_kappa,max_kappa,infinite\n";
  std::string convexity = "function,d,k,basis,convex\n";
  auto convex = [](const GridHandle& grid) {
    int passes = 0;
    Check(ssc_grid_convexity_check(grid.get(), 1e-9, &passes));
    return passes != 0;
  };
  for (std::size_t d : t.dims) {
    for (std::size_t k : t.ks) {
      if (k == 0 || k > d) {
        throw ConfigError("theory.ks: k = " + U(k) + " is outside [1, " + U(d) + "]");
      }
      ObjectiveHandle f;
      Check(ssc_objective_create_quadratic_k(d, k, t.eps, f.out()));
      const Vec center(d, 0.0);
      for (const std::string& mode : t.basis_modes) {
        Vec values;
        std::size_t infinite_count = 0;
        for (std::size_t b = 0; b < t.bases; ++b) {
          const Basis basis = SampleBasis(d, c.experiment.seed + b, mode);
          double kappa = 0.0;
          int infinite = 0;
          Check(ssc_slice_condition_number(f.get(), center.data(), basis.u.data(),
                                           basis.v.data(), d, h, c.hessian.rank_tol, &kappa,
                                           &infinite));
          if (infinite) {
            kappa = std::numeric_limits<double>::infinity();
            ++infinite_count;
          }
          values.push_back(kappa);
        }
        std::sort(values.begin(), values.end());
        const double median = values.empty() ? std::numeric_limits<double>::quiet_NaN()
                              : values.size() % 2 ? values[values.size() / 2]
                                                  : 0.5 * (values[values.size() / 2 - 1] +
                                                           values[values.size() / 2]);
        const double lo = values.empty() ? median : values.front();
        const double hi = values.empty() ? median : values.back();
        kappas += Join({U(d), U(k), F(t.eps), mode, U(t.bases), F(median), F(lo), F(hi),
                        U(infinite_count)});
        log << "theory quadratic_k d=" << d << " k=" << k << " (" << mode << "): median slice kappa "
            << F(median) << ", " << infinite_count << "/" << t.bases << " infinite\n";

        const Basis basis = SampleBasis(d, c.experiment.seed, mode);
        const GridHandle grid = EvaluateGrid(f, center, basis, t.extent, t.resolution, 1,
                                             c.experiment.seed, c.experiment.workers);
        const std::string stem = "quadratic_d" + U(d) + "_k" + U(k) + "_" + mode;
        WriteGrid(out, stem, grid, 0.0, c.slice.colormap);
        convexity += Join({"quadratic_k", U(d), U(k), mode, convex(grid) ? "1" : "0"});
      }
    }
  }

  ObjectiveHandle rastrigin;
  Check(ssc_objective_create_rastrigin(2, rastrigin.out()));
  {
    const Vec origin(2, 0.0);
    const Basis basis = SampleBasis(2, c.experiment.seed, "orthonormal");
    const GridHandle grid = EvaluateGrid(rastrigin, origin, basis, t.rastrigin_extent,
                                         t.resolution, 1, c.experiment.seed,
                                         c.experiment.workers);
    WriteGrid(out, "rastrigin_d2", grid, 0.0, c.slice.colormap);
    const bool is_convex = convex(grid);
    convexity += Join({"rastrigin", "2", "", "orthonormal", is_convex ? "1" : "0"});
    log << "theory rastrigin d=2: convexity check " << (is_convex ? "passes" : "fails") << "\n";
  }

  std::string terms = "d,center,max_dominant,max_secondary_contribution\n";
  for (std::size_t d : t.bimodal_dims) {
    ObjectiveHandle bimodal;
    Check(ssc_objective_create_bimodal(d, bimodal.out()));
    for (const bool at_mode : {false, true}) {
      const Vec center(d, at_mode ? 1.0 : 0.0);
      const std::string name = at_mode ? "mode" : "origin";
      const Basis basis = SampleBasis(d, c.experiment.seed, t.basis_modes.front());
      const GridHandle grid = EvaluateGrid(bimodal, center, basis, t.extent, t.resolution, 1,
                                           c.experiment.seed, c.experiment.workers);
      WriteGrid(out, "bimodal_d" + U(d) + "_" + name, grid, 0.0, c.slice.colormap);
      // Same plane coordinates as the grid evaluation.
      const std::size_t n = t.resolution;
      const double last = static_cast<double>(n - 1);
      double max_dominant = 0.0, max_secondary = 0.0;
      Vec x(d);
      for (std::size_t i = 0; i < n; ++i) {
        const double p1 = t.extent * (2.0 * static_cast<double>(i) - last) / last;
        for (std::size_t j = 0; j < n; ++j) {
          const double p2 = t.extent * (2.0 * static_cast<double>(j) - last) / last;
          for (std::size_t q = 0; q < d; ++q) {
            x[q] = center[q] + p1 * basis.u[q] + p2 * basis.v[q];
          }
          double dominant = 0.0, secondary = 0.0;
          Check(ssc_bimodal_terms(x.data(), d, &dominant, &secondary));
          max_dominant = std::max(max_dominant, dominant);
          max_secondary = std::max(max_secondary, 0.8 * secondary);
        }
      }
      terms += Join({U(d), name, F(max_dominant), F(max_secondary)});
      log << "theory bimodal d=" << d << " centered at " << name
          << ": max secondary contribution " << F(max_secondary) << "\n";
    }
  }
  out.Write("theory_kappa.csv", kappas);
  out.Write("theory_convexity.csv", convexity);
  out.Write("bimodal_terms.csv", terms);
}

void RunHessianReport(const ExperimentConfig& c, OutputDir& out, std::ostream& log) {
  const auto& hs = c.hessian;
  ObjectiveHandle f;
  double step = hs.step;
  if (hs.objective == "pendulum") {
    f = TrajectoryObjective(FirstTask(c));
    if (step <= 0.0) step = 1e-4;
  } else {
    if (hs.objective == "quadratic_k") {
      Check(ssc_objective_create_quadratic_k(hs.d, hs.k, hs.eps, f.out()));
    } else if (hs.objective == "rastrigin") {
      Check(ssc_objective_create_rastrigin(hs.d, f.out()));
    } else {
      Check(ssc_objective_create_bimodal(hs.d, f.out()));
    }
    if (step <= 0.0) step = 1e-5;
  }
  const Vec x = OptimumOrZero(f);
  ReportHandle report;
  Check(ssc_hessian_report_create(f.get(), x.data(), x.size(), step, c.experiment.workers,
                                  hs.rank_tol, report.out()));
  BufferHandle json;
  Check(ssc_hessian_report_to_json(report.get(), hs.include_matrix, json.out()));
  out.Write("hessian_report.json", Text(json));

  const std::size_t n = ssc_hessian_report_dimension(report.get());
  Vec eigenvalues(n), matrix(n * n);
  Check(ssc_hessian_report_eigenvalues(report.get(), eigenvalues.data(), n));
  Check(ssc_hessian_report_matrix(report.get(), matrix.data(), n));
  std::string csv = "index,eigenvalue\n";
  for (std::size_t i = 0; i < n; ++i) csv += Join({U(i), F(eigenvalues[i])});
  out.Write("eigenvalues.csv", csv);
  BufferHandle ppm;
  Check(ssc_matrix_heatmap_ppm(matrix.data(), n, n, ppm.out()));
  out.Write("hessian_heatmap.ppm", Text(ppm));

  double kappa = 0.0;
  int infinite = 0, indefinite = 0;
  ssc_hessian_report_kappa(report.get(), &kappa, &infinite, &indefinite);
  log << "hessian-report " << ssc_objective_name(f.get()) << " (d=" << n << "): kappa "
      << (infinite ? std::string("inf") : F(kappa)) << (indefinite ? ", indefinite" : "")
      << ", separability " << F(ssc_hessian_report_separability(report.get())) << "\n";
}

void RunCommand(const ExperimentConfig& config, OutputDir& out, std::ostream& log) {
  switch (config.experiment.command) {
    case Command::kSlice: return RunSlice(config, out, log);
    case Command::kSweepT: return RunSweepT(config, out, log);
    case Command::kPolicyLandscape: return RunPolicyLandscape(config, out, log);
    case Command::kTermination: return RunTermination(config, out, log);
    case Command::kOptCompare: return RunOptCompare(config, out, log);
    case Command::kTheory: return RunTheory(config, out, log);
    case Command::kHessianReport: return RunHessianReport(config, out, log);
  }
}

}  // namespace slicescape::cli
