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

#ifndef SLICESCAPE_CORE_SLICES_H_
#define SLICESCAPE_CORE_SLICES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/common.h"
#include "core/objectives.h"

namespace slicescape {

inline constexpr std::size_t kDefaultResolution = 100;
inline constexpr std::size_t kDefaultEpisodes = 10;
inline constexpr double kDefaultBlurSigma = 1.0;

// A 2D plane x(p) = center + p1 u + p2 v, sampled on a resolution^2 grid
// over p in [-extent, extent]^2.
struct SlicePlane {
  Vector center;
  Vector u;
  Vector v;
  double extent = 1.0;
  std::size_t resolution = kDefaultResolution;

  friend bool operator==(const SlicePlane&, const SlicePlane&) = default;
};

void Validate(const SlicePlane& plane);

// Plane coordinate of grid index idx in [0, resolution).
double PlaneCoordinate(const SlicePlane& plane, std::size_t idx);

struct Basis {
  Vector u;
  Vector v;
};

enum class BasisMode { kOrthonormal, kUnnormalized };

// Two standard-normal draws, Gram-Schmidt, unit length. Deterministic per
// seed; degenerate draws are redrawn.
Basis SampleOrthonormalBasis(std::size_t d, std::uint64_t seed);

// Elements uniform on [-1, 1]; both vectors are scaled to the mean of their
// two sampled lengths, then v is orthogonalized against u and rescaled to
// that shared length.
Basis SampleUnnormalizedBasis(std::size_t d, std::uint64_t seed);

Basis SampleBasis(BasisMode mode, std::size_t d, std::uint64_t seed);

// Values are indexed (i, j) with i along p1 and j along p2, stored at
// i * resolution + j. Cells whose evaluation failed hold NaN and are flagged.
struct LandscapeGrid {
  SlicePlane plane;
  std::string objective_name;
  std::vector<double> values;
  std::vector<std::uint8_t> failed;
  std::size_t episodes_per_point = 1;
  std::uint64_t seed = 0;
  bool normalized = false;
  std::optional<double> blurred_sigma;

  std::size_t resolution() const { return plane.resolution; }
  double& at(std::size_t i, std::size_t j) { return values[i * plane.resolution + j]; }
  double at(std::size_t i, std::size_t j) const {
    return values[i * plane.resolution + j];
  }
  bool is_failed(std::size_t i, std::size_t j) const {
    return failed[i * plane.resolution + j] != 0;
  }
  std::size_t failed_count() const;
};

// Seed of episode e at cell (i, j).
std::uint64_t CellEpisodeSeed(std::uint64_t seed, std::size_t i, std::size_t j,
                              std::size_t episode);

LandscapeGrid EvaluateGrid(const Objective& f, const SlicePlane& plane,
                           std::size_t episodes, std::uint64_t seed,
                           std::size_t workers = 1);

// Wraps precomputed values (i-major, as in LandscapeGrid) into a grid.
LandscapeGrid GridFromValues(SlicePlane plane, std::vector<double> values,
                             std::string objective_name = "values");

// Separable Gaussian blur with radius ceil(3 sigma); the kernel is
// renormalized over in-bounds, non-failed cells.
LandscapeGrid GaussianBlur(const LandscapeGrid& grid, double sigma);

// Affine map of the finite values onto [0, 1]. kUndefinedResult when fewer
// than two distinct finite values exist.
LandscapeGrid NormalizeGrid(const LandscapeGrid& grid);

struct CellIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// Smallest / largest finite cell; ties resolve to the first in storage order.
CellIndex ArgMin(const LandscapeGrid& grid);
CellIndex ArgMax(const LandscapeGrid& grid);

// Discrete second differences along every row, column and both main
// diagonals; true when all are >= -tol.
bool PassesConvexityCheck(const LandscapeGrid& grid, double tol = 1e-9);

// CSV with `# key: value` metadata comments and header `i,j,p1,p2,value`.
// Values are printed with 17 significant digits.
std::string GridToCsv(const LandscapeGrid& grid);

// JSON metadata: the full plane, seed, episodes, sigma and flags.
std::string GridMetadataToJson(const LandscapeGrid& grid);

// Reconstructs a grid from its two serialized documents.
LandscapeGrid GridFromDocuments(const std::string& csv,
                                const std::string& metadata_json);

std::string FormatDouble(double value);

}  // namespace slicescape

#endif  // SLICESCAPE_CORE_SLICES_H_
