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

#ifndef SLICESCAPE_CORE_ANALYSIS_H_
#define SLICESCAPE_CORE_ANALYSIS_H_

#include <cstddef>
#include <span>
#include <string>

#include "core/common.h"
#include "core/objectives.h"

namespace slicescape {

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kPendulumHessianStep = 1e-4;
inline constexpr double kAnalyticHessianStep = 1e-5;

// Central-difference Hessian, symmetrized as (H + H^T) / 2. Columns are
// independent and may be spread over `workers` threads; the result does not
// depend on the worker count. Throws kNumericFailure if any probe is
// non-finite.
Matrix NumericHessian(const Objective& f, std::span<const double> x, double h,
                      std::size_t workers = 1);

struct EigenDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // column i pairs with values[i]
  int sweeps = 0;
};

// Cyclic Jacobi rotations until the largest off-diagonal magnitude drops
// below tol * |m|_F.
EigenDecomposition JacobiEigen(const Matrix& m, double tol = 1e-14,
                               int max_sweeps = 100);

struct ConditionNumber {
  double value = 1.0;  // +inf when flagged infinite
  bool infinite = false;
  bool indefinite = false;
};

// |lambda|_max / |lambda|_min; infinite when |lambda|_min <= rank_tol *
// |lambda|_max. Mixed signs set the indefinite flag.
ConditionNumber ComputeConditionNumber(std::span<const double> eigenvalues,
                                       double rank_tol = kDefaultRankTol);

// |offdiag(m)|_F^2 / |m|_F^2. Zero for a fully separable (diagonal) matrix.
double SeparabilityIndex(const Matrix& m);

struct HessianReport {
  Matrix matrix;
  Vector eigenvalues;
  ConditionNumber kappa;
  double separability_index = 0.0;
};

HessianReport MakeHessianReport(Matrix hessian, double rank_tol = kDefaultRankTol);

HessianReport AnalyzeHessian(const Objective& f, std::span<const double> x,
                             double h, std::size_t workers = 1,
                             double rank_tol = kDefaultRankTol);

// JSON document with keys dimension, eigenvalues, kappa, indefinite,
// separability_index (and the matrix when include_matrix is set). An
// infinite kappa is written as the string "inf".
std::string HessianReportToJson(const HessianReport& report,
                                bool include_matrix = false);

// A = [[u_k.u_k, u_k.v_k], [v_k.u_k, v_k.v_k]] over the first k coordinates.
// The quadratic |x[:k]|^2 restricted to the plane spanned by u, v is p^T A p.
Matrix SliceRestrictionMatrix(std::span<const double> u,
                              std::span<const double> v, std::size_t k);

// Condition number of the 2x2 Hessian of g(p) = f(center + p1 u + p2 v) at
// p = 0, by central differences.
ConditionNumber SliceConditionNumber(const Objective& f,
                                     std::span<const double> center,
                                     std::span<const double> u,
                                     std::span<const double> v, double h,
                                     double rank_tol = kDefaultRankTol);

Matrix SliceHessian(const Objective& f, std::span<const double> center,
                    std::span<const double> u, std::span<const double> v,
                    double h);

}  // namespace slicescape

#endif  // SLICESCAPE_CORE_ANALYSIS_H_
