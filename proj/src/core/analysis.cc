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

#include "core/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/parallel.h"
#include "json.hpp"

namespace slicescape {
namespace {

template <typename Fn>
double Probe(const Fn& fn, std::span<const double> x) {
  const double v = fn(x);
  if (!std::isfinite(v))
    Fail(ErrorCode::kNumericFailure, "objective is non-finite at a Hessian probe");
  return v;
}

// Shared central-difference stencil for any callable of a fixed-size vector.
template <typename Fn>
Matrix CentralHessian(const Fn& fn, std::span<const double> x, double h,
                      std::size_t workers) {
  Require(h > 0.0 && std::isfinite(h), "Hessian step h must be > 0");
  const std::size_t n = x.size();
  const double f0 = Probe(fn, x);
  Matrix hess(n, n);
  const double inv_h2 = 1.0 / (h * h);
  ParallelFor(n, workers, [&](std::size_t i) {
    Vector probe(x.begin(), x.end());
    probe[i] = x[i] + h;
    const double fp = Probe(fn, probe);
    probe[i] = x[i] - h;
    const double fm = Probe(fn, probe);
    hess(i, i) = (fp - 2.0 * f0 + fm) * inv_h2;
    for (std::size_t j = i + 1; j < n; ++j) {
      probe[i] = x[i] + h;
      probe[j] = x[j] + h;
      const double fpp = Probe(fn, probe);
      probe[j] = x[j] - h;
      const double fpm = Probe(fn, probe);
      probe[i] = x[i] - h;
      const double fmm = Probe(fn, probe);
      probe[j] = x[j] + h;
      const double fmp = Probe(fn, probe);
      probe[j] = x[j];
      hess(i, j) = (fpp - fpm - fmp + fmm) * 0.25 * inv_h2;
    }
  });
  // Only the upper triangle was filled; mirroring it is the symmetrization.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) hess(j, i) = hess(i, j);
  return hess;
}

void CheckSquareSymmetric(const Matrix& m) {
  Require(m.square() && m.rows() > 0, "expected a non-empty square matrix");
  const double scale = std::max(1.0, m.FrobeniusNorm());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      Require(std::abs(m(i, j) - m(j, i)) <= 1e-9 * scale,
              "matrix is not symmetric");
}

}  // namespace

Matrix NumericHessian(const Objective& f, std::span<const double> x, double h,
                      std::size_t workers) {
  Require(x.size() == f.dimension(), "Hessian point has the wrong dimension");
  auto fn = [&f](std::span<const double> p) { return f.Evaluate(p); };
  return CentralHessian(fn, x, h, workers);
}

EigenDecomposition JacobiEigen(const Matrix& m, double tol, int max_sweeps) {
  CheckSquareSymmetric(m);
  const std::size_t n = m.rows();
  Matrix a = m;
  // Work on the exact symmetric part.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  Matrix v = Matrix::Identity(n);
  const double threshold = tol * a.FrobeniusNorm();

  auto max_off_diagonal = [&] {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(a(i, j)));
    return off;
  };

  EigenDecomposition out;
  int sweep = 0;
  for (; max_off_diagonal() > threshold; ++sweep) {
    if (sweep >= max_sweeps)
      Fail(ErrorCode::kNumericFailure, "Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  out.sweeps = sweep;
  return out;
}

ConditionNumber ComputeConditionNumber(std::span<const double> eigenvalues,
                                       double rank_tol) {
  Require(!eigenvalues.empty(), "condition number of an empty spectrum");
  double abs_max = 0.0;
  double abs_min = std::numeric_limits<double>::infinity();
  for (double l : eigenvalues) {
    abs_max = std::max(abs_max, std::abs(l));
    abs_min = std::min(abs_min, std::abs(l));
  }
  if (abs_max == 0.0)
    Fail(ErrorCode::kUndefinedResult, "condition number of an all-zero spectrum");

  ConditionNumber out;
  const double significant = rank_tol * abs_max;
  bool positive = false;
  bool negative = false;
  for (double l : eigenvalues) {
    if (l > significant) positive = true;
    if (l < -significant) negative = true;
  }
  out.indefinite = positive && negative;
  if (abs_min <= significant) {
    out.infinite = true;
    out.value = std::numeric_limits<double>::infinity();
  } else {
    out.value = abs_max / abs_min;
  }
  return out;
}

double SeparabilityIndex(const Matrix& m) {
  Require(m.square() && m.rows() > 0, "separability needs a square matrix");
  double total = 0.0;
  double off = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double sq = m(i, j) * m(i, j);
      total += sq;
      if (i != j) off += sq;
    }
  }
  if (total == 0.0)
    Fail(ErrorCode::kUndefinedResult, "separability of a zero matrix");
  return off / total;
}

HessianReport MakeHessianReport(Matrix hessian, double rank_tol) {
  HessianReport report;
  const EigenDecomposition eig = JacobiEigen(hessian);
  report.eigenvalues = eig.values;
  report.kappa = ComputeConditionNumber(eig.values, rank_tol);
  report.separability_index = SeparabilityIndex(hessian);
  report.matrix = std::move(hessian);
  return report;
}

HessianReport AnalyzeHessian(const Objective& f, std::span<const double> x,
                             double h, std::size_t workers, double rank_tol) {
  return MakeHessianReport(NumericHessian(f, x, h, workers), rank_tol);
}

std::string HessianReportToJson(const HessianReport& report, bool include_matrix) {
  nlohmann::ordered_json doc;
  doc["dimension"] = report.matrix.rows();
  doc["eigenvalues"] = report.eigenvalues;
  if (report.kappa.infinite) {
    doc["kappa"] = "inf";
  } else {
    doc["kappa"] = report.kappa.value;
  }
  doc["indefinite"] = report.kappa.indefinite;
  doc["separability_index"] = report.separability_index;
  if (include_matrix) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < report.matrix.rows(); ++r) {
      auto row = report.matrix.row(r);
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    doc["matrix"] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

Matrix SliceRestrictionMatrix(std::span<const double> u, std::span<const double> v,
                              std::size_t k) {
  Require(u.size() == v.size() && !u.empty(), "basis vectors must share a dimension");
  Require(k >= 1 && k <= u.size(), "need 1 <= k <= d");
  Require(std::abs(Dot(u, v)) <= 1e-10 * std::max(1.0, Norm(u) * Norm(v)),
          "slice basis vectors are not orthogonal");
  const auto uk = u.first(k);
  const auto vk = v.first(k);
  Matrix a(2, 2);
  a(0, 0) = Dot(uk, uk);
  a(0, 1) = a(1, 0) = Dot(uk, vk);
  a(1, 1) = Dot(vk, vk);
  return a;
}

Matrix SliceHessian(const Objective& f, std::span<const double> center,
                    std::span<const double> u, std::span<const double> v,
                    double h) {
  const std::size_t d = f.dimension();
  Require(center.size() == d && u.size() == d && v.size() == d,
          "slice vectors must match the objective dimension");
  Require(std::abs(Dot(u, v)) <= 1e-10 * std::max(1.0, Norm(u) * Norm(v)),
          "slice basis vectors are not orthogonal");
  auto restricted = [&](std::span<const double> p) {
    Vector x(center.begin(), center.end());
    for (std::size_t i = 0; i < d; ++i) x[i] += p[0] * u[i] + p[1] * v[i];
    return f.Evaluate(x);
  };
  const double origin[2] = {0.0, 0.0};
  return CentralHessian(restricted, origin, h, 1);
}

ConditionNumber SliceConditionNumber(const Objective& f,
                                     std::span<const double> center,
                                     std::span<const double> u,
                                     std::span<const double> v, double h,
                                     double rank_tol) {
  const Matrix hess = SliceHessian(f, center, u, v, h);
  return ComputeConditionNumber(JacobiEigen(hess).values, rank_tol);
}

}  // namespace slicescape
