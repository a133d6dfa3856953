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

#ifndef SLICESCAPE_CORE_RENDER_H_
#define SLICESCAPE_CORE_RENDER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/common.h"
#include "core/slices.h"

namespace slicescape {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

using Polyline = std::vector<Point2>;

// Isocontours in plane coordinates. polylines[k] holds the chains for
// levels[k]; closed chains repeat their first point at the end.
struct ContourSet {
  std::vector<double> levels;
  std::vector<std::vector<Polyline>> polylines;
  double extent = 1.0;

  std::size_t chain_count() const;
};

inline constexpr std::size_t kDefaultContourLevels = 15;

// Equally spaced quantiles (fractions k / (count + 1)) of the finite grid
// values, with exact duplicates removed.
std::vector<double> DefaultContourLevels(const LandscapeGrid& grid,
                                         std::size_t count = kDefaultContourLevels);

// 16-case marching squares with linear edge interpolation. Saddles are
// resolved by comparing the cell-center average with the level. Cells with a
// non-finite corner are skipped.
ContourSet MarchingSquares(const LandscapeGrid& grid, std::span<const double> levels);

inline constexpr int kSvgViewport = 480;

// Contours as one <path> per chain, with an optional <polyline> overlay (in
// plane coordinates) for an optimizer path.
std::string ContourSvg(const ContourSet& contours,
                       std::span<const Point2> overlay = {});

enum class Colormap { kGray, kViridis };

std::array<std::uint8_t, 3> MapColor(double t, Colormap map);

// Binary PPM (P6, maxval 255) of the normalized grid. Pixel row 0 is the
// largest p2; columns run along p1. Failed cells are magenta.
std::string HeightmapPpm(const LandscapeGrid& grid, Colormap map);

// Symmetric diverging image of a matrix scaled by its largest magnitude;
// row 0 of the image is row 0 of the matrix.
std::string MatrixHeatmapPpm(const Matrix& m);

struct Curve {
  std::string label;
  std::vector<Point2> points;
};

// Line chart with axes and a legend. With log_y, non-positive values are
// dropped.
std::string CurvesSvg(std::span<const Curve> curves, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      bool log_y);

}  // namespace slicescape

#endif  // SLICESCAPE_CORE_RENDER_H_
