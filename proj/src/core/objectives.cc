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

#include "core/objectives.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace slicescape {
namespace {

// Squared norms are clamped here before exponentiation so that far-away
// points give a tiny positive value instead of underflowing.
constexpr double kMaxExpArgument = 700.0;

double ClampedGaussian(double squared_norm) {
  return std::exp(-0.5 * std::min(squared_norm, kMaxExpArgument));
}

}  // namespace

Objective::Objective(Spec spec) : spec_(std::move(spec)) {
  Require(spec_.dimension >= 1, "objective dimension must be positive");
  Require(static_cast<bool>(spec_.evaluate), "objective needs an evaluator");
  if (spec_.known_optimum) {
    Require(spec_.known_optimum->size() == spec_.dimension,
            "known optimum has the wrong dimension");
  }
}

void Objective::CheckDimension(std::span<const double> x) const {
  if (x.size() != spec_.dimension) {
    Fail(ErrorCode::kInvalidArgument,
         "objective '" + spec_.name + "' expects dimension " +
             std::to_string(spec_.dimension) + ", got " +
             std::to_string(x.size()));
  }
}

double Objective::Evaluate(std::span<const double> x, std::uint64_t seed) const {
  CheckDimension(x);
  return spec_.evaluate(x, seed);
}

Vector Objective::Gradient(std::span<const double> x) const {
  CheckDimension(x);
  Require(has_gradient(), "objective '" + spec_.name + "' has no gradient");
  return spec_.gradient(x);
}

Matrix Objective::Hessian(std::span<const double> x) const {
  CheckDimension(x);
  Require(has_hessian(), "objective '" + spec_.name + "' has no Hessian");
  return spec_.hessian(x);
}

void Validate(const QuadraticKSpec& spec) {
  Require(spec.d >= 1, "quadratic_k: d must be >= 1");
  Require(spec.k >= 1 && spec.k <= spec.d, "quadratic_k: need 1 <= k <= d");
  Require(spec.eps >= 0.0 && std::isfinite(spec.eps),
          "quadratic_k: eps must be finite and >= 0");
}

double QuadraticKEval(std::span<const double> x, const QuadraticKSpec& spec) {
  Validate(spec);
  Require(x.size() == spec.d, "quadratic_k: dimension mismatch");
  double head = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < spec.k; ++i) head += x[i] * x[i];
  for (std::size_t i = spec.k; i < spec.d; ++i) tail += x[i] * x[i];
  return head + spec.eps * tail;
}

double QuadraticKConditionNumber(const QuadraticKSpec& spec) {
  Validate(spec);
  if (spec.k == spec.d) return 1.0;
  if (spec.eps == 0.0) return std::numeric_limits<double>::infinity();
  const double lo = std::min(1.0, spec.eps);
  const double hi = std::max(1.0, spec.eps);
  return hi / lo;
}

double RastriginEval(std::span<const double> x) {
  Require(!x.empty(), "rastrigin: d must be >= 1");
  double s = 10.0 * static_cast<double>(x.size());
  for (double xi : x) s += xi * xi - 10.0 * std::cos(2.0 * std::numbers::pi * xi);
  return s;
}

BimodalTerms BimodalTermsAt(std::span<const double> x) {
  Require(!x.empty(), "bimodal: d must be >= 1");
  double to_ones = 0.0;
  double to_minus_ones = 0.0;
  for (double xi : x) {
    to_ones += (xi - 1.0) * (xi - 1.0);
    to_minus_ones += (xi + 1.0) * (xi + 1.0);
  }
  return {ClampedGaussian(to_ones), ClampedGaussian(to_minus_ones)};
}

double BimodalEval(std::span<const double> x) {
  const BimodalTerms t = BimodalTermsAt(x);
  return t.dominant + kBimodalSecondaryWeight * t.secondary;
}

ObjectivePtr MakeObjective(ObjectiveKind kind, const ObjectiveParams& params) {
  Require(params.d >= 1, "objective dimension must be >= 1");
  Objective::Spec spec;
  spec.dimension = params.d;
  switch (kind) {
    case ObjectiveKind::kQuadraticK: {
      const QuadraticKSpec q{params.d, params.k, params.eps};
      Validate(q);
      spec.name = "quadratic_k";
      spec.evaluate = [q](std::span<const double> x, std::uint64_t) {
        return QuadraticKEval(x, q);
      };
      spec.gradient = [q](std::span<const double> x) {
        Vector g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
          g[i] = 2.0 * (i < q.k ? 1.0 : q.eps) * x[i];
        return g;
      };
      spec.hessian = [q](std::span<const double>) {
        Vector diag(q.d, 2.0 * q.eps);
        std::fill(diag.begin(), diag.begin() + static_cast<long>(q.k), 2.0);
        return Matrix::Diagonal(diag);
      };
      spec.known_optimum = Vector(params.d, 0.0);
      break;
    }
    case ObjectiveKind::kRastrigin:
      spec.name = "rastrigin";
      spec.evaluate = [](std::span<const double> x, std::uint64_t) {
        return RastriginEval(x);
      };
      spec.known_optimum = Vector(params.d, 0.0);
      break;
    case ObjectiveKind::kBimodal:
      spec.name = "bimodal";
      spec.evaluate = [](std::span<const double> x, std::uint64_t) {
        return BimodalEval(x);
      };
      spec.known_optimum = Vector(params.d, 1.0);
      spec.sense = Sense::kMaximize;
      break;
    default:
      Fail(ErrorCode::kInvalidArgument, "unknown objective kind");
  }
  return std::make_shared<const Objective>(std::move(spec));
}

ObjectiveKind ParseObjectiveKind(const std::string& name) {
  if (name == "quadratic_k") return ObjectiveKind::kQuadraticK;
  if (name == "rastrigin") return ObjectiveKind::kRastrigin;
  if (name == "bimodal") return ObjectiveKind::kBimodal;
  Fail(ErrorCode::kInvalidArgument, "unknown objective kind '" + name + "'");
}

}  // namespace slicescape
