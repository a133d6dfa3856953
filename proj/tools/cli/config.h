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

#ifndef SLICESCAPE_TOOLS_CLI_CONFIG_H_
#define SLICESCAPE_TOOLS_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace slicescape::cli {

enum class Command {
  kSlice,
  kSweepT,
  kPolicyLandscape,
  kTermination,
  kOptCompare,
  kTheory,
  kHessianReport,
};

const char* CommandName(Command command);
Command ParseCommand(const std::string& name);

struct ExperimentSection {
  Command command = Command::kSlice;
  std::string name = "experiment";
  std::uint64_t seed = 1;
  std::size_t workers = 0;  // 0 = all cores
  friend bool operator==(const ExperimentSection&, const ExperimentSection&) = default;
};

// Pendulum task. Names are validated at load time.
struct TaskSection {
  std::vector<std::size_t> horizons{100};
  std::vector<std::string> action_spaces{"torque"};  // torque, angle, spline
  std::string objective = "cost";                    // cost, reward
  double action_weight = 1.0;
  std::string termination = "none";  // none, plain, alive_bonus, penalty
  double termination_threshold = 2.0;
  double alive_bonus = 1.0;
  double penalty_per_step = 4.0;
  std::size_t spline_spacing = 10;
  friend bool operator==(const TaskSection&, const TaskSection&) = default;
};

struct SliceSection {
  double extent = 1.0;
  std::size_t resolution = 100;
  std::size_t episodes = 10;
  double sigma = 1.0;  // 0 disables the blur
  std::string basis = "orthonormal";
  std::string colormap = "viridis";
  std::size_t seeds = 1;
  std::vector<std::string> terminations{"none", "plain", "alive_bonus", "penalty"};
  friend bool operator==(const SliceSection&, const SliceSection&) = default;
};

struct PolicySection {
  double theta_min = -1.0;
  double theta_max = 1.0;
  double theta_step = 0.01;
  std::vector<double> weights{1.0};
  std::vector<std::string> modes{"cost", "cost+plain", "reward+plain"};
  std::vector<double> angles;  // empty = library default
  friend bool operator==(const PolicySection&, const PolicySection&) = default;
};

struct OptimizerSection {
  std::vector<std::string> variants{"torque-cost", "angle-cost", "torque-reward"};
  std::size_t population = 100;
  double sigma0 = 0.5;
  std::size_t budget = 100000;
  std::size_t seeds = 10;
  double x0_amplitude = 0.3;
  friend bool operator==(const OptimizerSection&, const OptimizerSection&) = default;
};

struct TheorySection {
  std::vector<std::size_t> dims{10};
  std::vector<std::size_t> ks{1, 5, 10};
  double eps = 0.0;
  std::size_t bases = 200;
  std::vector<std::string> basis_modes{"orthonormal"};
  std::vector<std::size_t> bimodal_dims{2, 20};
  double extent = 1.0;
  std::size_t resolution = 61;
  double rastrigin_extent = 5.12;
  friend bool operator==(const TheorySection&, const TheorySection&) = default;
};

struct HessianSection {
  std::string objective = "pendulum";  // pendulum, quadratic_k, rastrigin, bimodal
  std::size_t d = 10;
  std::size_t k = 5;
  double eps = 0.01;
  double step = 0.0;  // 0 = 1e-4 for pendulum tasks, 1e-5 otherwise
  double rank_tol = 1e-10;
  bool include_matrix = true;
  friend bool operator==(const HessianSection&, const HessianSection&) = default;
};

struct ExperimentConfig {
  ExperimentSection experiment;
  TaskSection task;
  SliceSection slice;
  PolicySection policy;
  OptimizerSection optimizer;
  TheorySection theory;
  HessianSection hessian;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Parses the sectioned key = value format. Missing keys keep their defaults;
// unknown sections or keys and malformed values raise ConfigError.
ExperimentConfig ParseConfig(const std::string& text);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Writes every field, so ParseConfig(SerializeConfig(c)) == c.
std::string SerializeConfig(const ExperimentConfig& config);

// FNV-1a 64 of the serialized config, as 16 hex digits.
std::string ConfigHash(const ExperimentConfig& config);

}  // namespace slicescape::cli

#endif  // SLICESCAPE_TOOLS_CLI_CONFIG_H_
