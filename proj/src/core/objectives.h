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

#ifndef SLICESCAPE_CORE_OBJECTIVES_H_
#define SLICESCAPE_CORE_OBJECTIVES_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "core/common.h"

namespace slicescape {

// Whether larger or smaller values are better when the landscape is viewed
// as-is. Optimizers always minimize; maximize-sense objectives are only
// produced for visualization (e.g. the bimodal test function).
enum class Sense { kMinimize, kMaximize };

// A deterministic scalar function of a d-vector. Immutable after
// construction, so a single instance may be evaluated from many threads.
class Objective {
 public:
  using EvalFn = std::function<double(std::span<const double>, std::uint64_t)>;
  using GradientFn = std::function<Vector(std::span<const double>)>;
  using HessianFn = std::function<Matrix(std::span<const double>)>;

  struct Spec {
    std::string name;
    std::size_t dimension = 0;
    EvalFn evaluate;
    GradientFn gradient;
    HessianFn hessian;
    std::optional<Vector> known_optimum;
    Sense sense = Sense::kMinimize;
  };

  explicit Objective(Spec spec);

  const std::string& name() const { return spec_.name; }
  std::size_t dimension() const { return spec_.dimension; }
  Sense sense() const { return spec_.sense; }
  const std::optional<Vector>& known_optimum() const {
    return spec_.known_optimum;
  }
  bool has_gradient() const { return static_cast<bool>(spec_.gradient); }
  bool has_hessian() const { return static_cast<bool>(spec_.hessian); }

  // Throws kInvalidArgument on a dimension mismatch.
  double Evaluate(std::span<const double> x, std::uint64_t seed = 0) const;
  Vector Gradient(std::span<const double> x) const;
  Matrix Hessian(std::span<const double> x) const;

 private:
  void CheckDimension(std::span<const double> x) const;

  Spec spec_;
};

using ObjectivePtr = std::shared_ptr<const Objective>;

// f(x) = |x[:k]|^2 + eps * |x[k:]|^2, the intrinsic-dimensionality quadratic.
struct QuadraticKSpec {
  std::size_t d = 2;
  std::size_t k = 1;
  double eps = 0.0;
};

void Validate(const QuadraticKSpec& spec);
double QuadraticKEval(std::span<const double> x, const QuadraticKSpec& spec);
// Closed-form condition number of the quadratic's Hessian (diag of 2 and
// 2*eps). Infinite when eps == 0 and k < d.
double QuadraticKConditionNumber(const QuadraticKSpec& spec);

// 10 d + sum_i [x_i^2 - 10 cos(2 pi x_i)].
double RastriginEval(std::span<const double> x);

// exp(-|x - 1|^2 / 2) + 0.8 exp(-|x + 1|^2 / 2); higher is better.
double BimodalEval(std::span<const double> x);

// The two Gaussian terms of the bimodal function, without the 0.8 weight on
// the second. Exposed for analysing how each mode shows up on a slice.
struct BimodalTerms {
  double dominant = 0.0;
  double secondary = 0.0;
};
BimodalTerms BimodalTermsAt(std::span<const double> x);

inline constexpr double kBimodalSecondaryWeight = 0.8;

enum class ObjectiveKind { kQuadraticK, kRastrigin, kBimodal };

struct ObjectiveParams {
  std::size_t d = 2;
  std::size_t k = 1;   // quadratic_k only
  double eps = 0.0;    // quadratic_k only
};

ObjectivePtr MakeObjective(ObjectiveKind kind, const ObjectiveParams& params);
ObjectiveKind ParseObjectiveKind(const std::string& name);

}  // namespace slicescape

#endif  // SLICESCAPE_CORE_OBJECTIVES_H_
