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

#ifndef SLICESCAPE_CORE_PENDULUM_H_
#define SLICESCAPE_CORE_PENDULUM_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/common.h"
#include "core/objectives.h"

namespace slicescape::pendulum {

struct Params {
  double delta = 0.1;  // timestep (s)
  double length = 0.2;
  double gravity = 0.981;
};

// alpha is the deviation from upright (rad), omega the angular velocity.
struct State {
  double alpha = 0.0;
  double omega = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

enum class ActionKind { kTorque, kTargetAngle, kSplineTargetAngle };

struct ActionSpace {
  ActionKind kind = ActionKind::kTorque;
  double kp = 1.0;
  double kd = -1.0;
  std::size_t spline_spacing = 10;  // spline kind only
};

enum class ObjectiveMode { kCost, kReward };

enum class TerminationMode { kNone, kPlain, kAliveBonus, kPenalty };

struct TerminationConfig {
  bool enabled = false;
  double threshold = 2.0;
  TerminationMode mode = TerminationMode::kNone;
  double alive_bonus = 1.0;       // per non-terminal step
  double penalty_per_step = 4.0;  // per remaining step after termination

  bool active() const { return enabled && mode != TerminationMode::kNone; }
};

struct Task {
  Params params;
  std::size_t horizon = 100;  // T
  double action_weight = 1.0;  // w
  ActionSpace action_space;
  ObjectiveMode objective = ObjectiveMode::kCost;
  TerminationConfig termination;
  State initial_state;
};

void Validate(const Params& params);
void Validate(const ActionSpace& space);
void Validate(const TerminationConfig& termination);
void Validate(const Task& task);

struct Trajectory {
  std::vector<State> states;      // states[0] is the initial state
  std::vector<double> torques;    // torques[t - 1] drives states[t]
  std::vector<double> per_step_values;
  std::optional<std::size_t> terminated_at;
  double total = 0.0;
};

// Semi-implicit Euler: omega first, then alpha from the new omega.
State Step(const State& state, double torque, const Params& params);

// kp * (target - alpha) + kd * omega on the state preceding the step.
double PdTorque(double target, const State& state, const ActionSpace& space);

// Number of spline control points covering a horizon: ceil(T / spacing) + 1.
std::size_t SplineControlPointCount(std::size_t horizon, std::size_t spacing);

// Uniform Catmull-Rom interpolation. Output i (the action for step i + 1)
// sits at knot coordinate i / spacing; the first and last control points
// are duplicated to close the end segments.
Vector SplineExpand(std::span<const double> control_points, std::size_t horizon,
                    std::size_t spacing);

// Number of optimized variables for a task's action parameterization.
std::size_t ActionDimension(const Task& task);

Trajectory Rollout(const Task& task, std::span<const double> actions);

// Closed-loop rollout where the torque at step t is policy(state_{t-1}).
// The task's action space is ignored.
Trajectory RolloutPolicy(const Task& task, const State& initial,
                         const std::function<double(const State&)>& policy);

inline double PPolicyAction(double theta, const State& state) {
  return theta * state.alpha;
}

// Default episode start angles: 10 values evenly spaced on [-1, 1] rad.
Vector DefaultInitialAngles();

// Mean episode total of the P-controller policy theta over the given start
// angles (omega_0 = 0). Episodes are summed in index order.
double PolicyObjective(double theta, const Task& task,
                       std::span<const double> initial_angles);

// Rollout total as a minimized objective over the action vector. Reward-mode
// tasks are negated.
ObjectivePtr TrajectoryObjective(const Task& task);

// The P-controller objective as a minimized function of theta (dimension 1),
// or of (theta, w) when vary_weight is set (dimension 2).
ObjectivePtr PolicyObjectiveHandle(const Task& task, Vector initial_angles,
                                   bool vary_weight);

std::string ToString(ActionKind kind);
std::string ToString(ObjectiveMode mode);
std::string ToString(TerminationMode mode);
ActionKind ParseActionKind(const std::string& name);
ObjectiveMode ParseObjectiveMode(const std::string& name);
TerminationMode ParseTerminationMode(const std::string& name);

}  // namespace slicescape::pendulum

#endif  // SLICESCAPE_CORE_PENDULUM_H_
