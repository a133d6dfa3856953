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

#include "core/pendulum.h"

#include <algorithm>
#include <cmath>

namespace slicescape::pendulum {
namespace {

bool Positive(double v) { return std::isfinite(v) && v > 0.0; }

double InstantaneousValue(const Task& task, double alpha, double torque) {
  if (task.objective == ObjectiveMode::kCost)
    return alpha * alpha + task.action_weight * torque * torque;
  return std::exp(-alpha * alpha) +
         task.action_weight * std::exp(-torque * torque);
}

// Shared episode loop. torque_at(t, previous_state) returns the torque for
// step t (1-based).
template <typename TorqueFn>
Trajectory RunEpisode(const Task& task, const State& initial,
                      TorqueFn&& torque_at) {
  const std::size_t horizon = task.horizon;
  const TerminationConfig& term = task.termination;
  const bool terminate = term.active();
  const double bonus_sign = task.objective == ObjectiveMode::kReward ? 1.0 : -1.0;

  Trajectory traj;
  traj.states.reserve(horizon + 1);
  traj.torques.reserve(horizon);
  traj.per_step_values.reserve(horizon);
  traj.states.push_back(initial);

  double total = 0.0;
  for (std::size_t t = 1; t <= horizon; ++t) {
    const State& prev = traj.states.back();
    const double torque = torque_at(t, prev);
    const State next = Step(prev, torque, task.params);
    traj.torques.push_back(torque);
    traj.states.push_back(next);

    if (terminate && std::abs(next.alpha) > term.threshold) {
      // The crossing step earns nothing; its slot carries the termination
      // adjustment so that total == sum(per_step_values).
      double adjustment = 0.0;
      if (term.mode == TerminationMode::kPenalty &&
          task.objective == ObjectiveMode::kCost) {
        adjustment = term.penalty_per_step * static_cast<double>(horizon - t);
      }
      traj.per_step_values.push_back(adjustment);
      total += adjustment;
      traj.terminated_at = t;
      break;
    }

    double value = InstantaneousValue(task, next.alpha, torque);
    if (terminate && term.mode == TerminationMode::kAliveBonus)
      value += bonus_sign * term.alive_bonus;
    traj.per_step_values.push_back(value);
    total += value;
  }
  traj.total = total;
  return traj;
}

}  // namespace

void Validate(const Params& params) {
  Require(Positive(params.delta) && Positive(params.length) &&
              Positive(params.gravity),
          "pendulum parameters must be strictly positive");
}

void Validate(const ActionSpace& space) {
  Require(std::isfinite(space.kp) && std::isfinite(space.kd),
          "PD gains must be finite");
  if (space.kind == ActionKind::kSplineTargetAngle)
    Require(space.spline_spacing >= 2, "spline spacing must be >= 2");
}

void Validate(const TerminationConfig& termination) {
  Require(Positive(termination.threshold), "termination threshold must be > 0");
  Require(termination.alive_bonus >= 0.0 && termination.penalty_per_step >= 0.0,
          "alive bonus and termination penalty must be >= 0");
}

void Validate(const Task& task) {
  Validate(task.params);
  Validate(task.action_space);
  Validate(task.termination);
  Require(task.horizon >= 1, "horizon T must be >= 1");
  Require(task.action_weight >= 0.0 && std::isfinite(task.action_weight),
          "action weight w must be finite and >= 0");
  Require(std::isfinite(task.initial_state.alpha) &&
              std::isfinite(task.initial_state.omega),
          "initial state must be finite");
}

State Step(const State& state, double torque, const Params& params) {
  State next;
  next.omega = state.omega +
               params.delta * (torque + 0.5 * params.length * params.gravity *
                                            std::sin(state.alpha));
  next.alpha = state.alpha + params.delta * next.omega;
  return next;
}

double PdTorque(double target, const State& state, const ActionSpace& space) {
  return space.kp * (target - state.alpha) + space.kd * state.omega;
}

std::size_t SplineControlPointCount(std::size_t horizon, std::size_t spacing) {
  Require(spacing >= 2, "spline spacing must be >= 2");
  return (horizon + spacing - 1) / spacing + 1;
}

Vector SplineExpand(std::span<const double> control_points, std::size_t horizon,
                    std::size_t spacing) {
  const std::size_t n = SplineControlPointCount(horizon, spacing);
  if (control_points.size() != n) {
    Fail(ErrorCode::kInvalidArgument,
         "spline expects " + std::to_string(n) + " control points, got " +
             std::to_string(control_points.size()));
  }
  auto point = [&](long j) {
    const long last = static_cast<long>(n) - 1;
    return control_points[static_cast<std::size_t>(std::clamp(j, 0L, last))];
  };
  Vector out(horizon);
  for (std::size_t i = 0; i < horizon; ++i) {
    const long seg = static_cast<long>(i / spacing);
    const double u = static_cast<double>(i % spacing) / static_cast<double>(spacing);
    const double p0 = point(seg - 1);
    const double p1 = point(seg);
    const double p2 = point(seg + 1);
    const double p3 = point(seg + 2);
    out[i] = 0.5 * (2.0 * p1 + (p2 - p0) * u +
                    (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * u * u +
                    (3.0 * p1 - p0 - 3.0 * p2 + p3) * u * u * u);
  }
  return out;
}

std::size_t ActionDimension(const Task& task) {
  if (task.action_space.kind == ActionKind::kSplineTargetAngle)
    return SplineControlPointCount(task.horizon, task.action_space.spline_spacing);
  return task.horizon;
}

Trajectory Rollout(const Task& task, std::span<const double> actions) {
  Validate(task);
  const std::size_t expected = ActionDimension(task);
  if (actions.size() != expected) {
    Fail(ErrorCode::kInvalidArgument,
         "rollout expects " + std::to_string(expected) + " actions, got " +
             std::to_string(actions.size()));
  }
  const ActionSpace& space = task.action_space;
  switch (space.kind) {
    case ActionKind::kTorque:
      return RunEpisode(task, task.initial_state,
                        [&](std::size_t t, const State&) { return actions[t - 1]; });
    case ActionKind::kTargetAngle:
      return RunEpisode(task, task.initial_state,
                        [&](std::size_t t, const State& prev) {
                          return PdTorque(actions[t - 1], prev, space);
                        });
    case ActionKind::kSplineTargetAngle: {
      const Vector targets = SplineExpand(actions, task.horizon, space.spline_spacing);
      return RunEpisode(task, task.initial_state,
                        [&](std::size_t t, const State& prev) {
                          return PdTorque(targets[t - 1], prev, space);
                        });
    }
  }
  Fail(ErrorCode::kInvalidArgument, "unknown action kind");
}

Trajectory RolloutPolicy(const Task& task, const State& initial,
                         const std::function<double(const State&)>& policy) {
  Validate(task);
  return RunEpisode(task, initial,
                    [&](std::size_t, const State& prev) { return policy(prev); });
}

Vector DefaultInitialAngles() {
  constexpr int kCount = 10;
  Vector angles(kCount);
  for (int i = 0; i < kCount; ++i)
    angles[i] = -1.0 + 2.0 * static_cast<double>(i) / (kCount - 1);
  return angles;
}

double PolicyObjective(double theta, const Task& task,
                       std::span<const double> initial_angles) {
  Require(!initial_angles.empty(), "policy objective needs initial angles");
  double sum = 0.0;
  for (double angle : initial_angles) {
    const Trajectory traj =
        RolloutPolicy(task, State{angle, 0.0},
                      [theta](const State& s) { return PPolicyAction(theta, s); });
    sum += traj.total;
  }
  return sum / static_cast<double>(initial_angles.size());
}

ObjectivePtr TrajectoryObjective(const Task& task) {
  Validate(task);
  Objective::Spec spec;
  spec.name = "pendulum_trajectory";
  spec.dimension = ActionDimension(task);
  const double sign = task.objective == ObjectiveMode::kReward ? -1.0 : 1.0;
  spec.evaluate = [task, sign](std::span<const double> x, std::uint64_t) {
    return sign * Rollout(task, x).total;
  };
  if (task.initial_state == State{}) spec.known_optimum = Vector(spec.dimension, 0.0);
  return std::make_shared<const Objective>(std::move(spec));
}

ObjectivePtr PolicyObjectiveHandle(const Task& task, Vector initial_angles,
                                   bool vary_weight) {
  Validate(task);
  Require(!initial_angles.empty(), "policy objective needs initial angles");
  Objective::Spec spec;
  spec.name = vary_weight ? "pendulum_policy_theta_w" : "pendulum_policy_theta";
  spec.dimension = vary_weight ? 2 : 1;
  const double sign = task.objective == ObjectiveMode::kReward ? -1.0 : 1.0;
  spec.evaluate = [task, angles = std::move(initial_angles), sign, vary_weight](
                      std::span<const double> x, std::uint64_t) {
    if (!vary_weight) return sign * PolicyObjective(x[0], task, angles);
    Task weighted = task;
    weighted.action_weight = x[1];
    Require(x[1] >= 0.0, "action weight w must be >= 0");
    return sign * PolicyObjective(x[0], weighted, angles);
  };
  return std::make_shared<const Objective>(std::move(spec));
}

std::string ToString(ActionKind kind) {
  switch (kind) {
    case ActionKind::kTorque: return "torque";
    case ActionKind::kTargetAngle: return "target_angle";
    case ActionKind::kSplineTargetAngle: return "spline_target_angle";
  }
  return "?";
}

std::string ToString(ObjectiveMode mode) {
  return mode == ObjectiveMode::kCost ? "cost" : "reward";
}

std::string ToString(TerminationMode mode) {
  switch (mode) {
    case TerminationMode::kNone: return "none";
    case TerminationMode::kPlain: return "plain";
    case TerminationMode::kAliveBonus: return "alive_bonus";
    case TerminationMode::kPenalty: return "penalty";
  }
  return "?";
}

ActionKind ParseActionKind(const std::string& name) {
  if (name == "torque") return ActionKind::kTorque;
  if (name == "target_angle" || name == "angle") return ActionKind::kTargetAngle;
  if (name == "spline_target_angle" || name == "spline")
    return ActionKind::kSplineTargetAngle;
  Fail(ErrorCode::kInvalidArgument, "unknown action space '" + name + "'");
}

ObjectiveMode ParseObjectiveMode(const std::string& name) {
  if (name == "cost") return ObjectiveMode::kCost;
  if (name == "reward") return ObjectiveMode::kReward;
  Fail(ErrorCode::kInvalidArgument, "unknown objective mode '" + name + "'");
}

TerminationMode ParseTerminationMode(const std::string& name) {
  if (name == "none") return TerminationMode::kNone;
  if (name == "plain") return TerminationMode::kPlain;
  if (name == "alive_bonus") return TerminationMode::kAliveBonus;
  if (name == "penalty") return TerminationMode::kPenalty;
  Fail(ErrorCode::kInvalidArgument, "unknown termination mode '" + name + "'");
}

}  // namespace slicescape::pendulum
