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

#include "core/render.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

namespace slicescape {
namespace {

// Anchor colors of a perceptually ordered purple-to-yellow ramp.
constexpr std::array<std::array<double, 3>, 9> kViridis = {{
    {68, 1, 84},
    {71, 44, 122},
    {59, 81, 139},
    {44, 113, 142},
    {33, 144, 141},
    {39, 173, 129},
    {92, 200, 99},
    {170, 220, 50},
    {253, 231, 37},
}};

constexpr std::array<std::uint8_t, 3> kMissingColor = {255, 0, 255};

std::string Fixed(double v, int digits = 3) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, digits);
  std::string s(buf, ptr);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string HexColor(const std::array<std::uint8_t, 3>& c) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s = "#";
  for (std::uint8_t b : c) {
    s += kDigits[b >> 4];
    s += kDigits[b & 0xf];
  }
  return s;
}

std::string EscapeXml(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string PpmHeader(std::size_t width, std::size_t height) {
  return "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
}

// Edge endpoints are always ordered (lower index first) so that a vertex
// shared by two cells is computed identically from either side.
struct EdgeKey {
  bool horizontal;  // along p1, between (i, j) and (i + 1, j)
  std::size_t i;
  std::size_t j;
  std::uint64_t id(std::size_t res) const {
    return (static_cast<std::uint64_t>(horizontal) * res + i) * res + j;
  }
};

struct Segment {
  EdgeKey a;
  EdgeKey b;
};

// Per case, the edge pairs crossed (edges: 0 bottom, 1 right, 2 top, 3 left).
// Saddle cases 5 and 10 are resolved at run time.
constexpr int kCaseSegments[16][4] = {
    {-1, -1, -1, -1}, {3, 0, -1, -1}, {0, 1, -1, -1}, {3, 1, -1, -1},
    {1, 2, -1, -1},   {-2, -2, -2, -2}, {0, 2, -1, -1}, {3, 2, -1, -1},
    {2, 3, -1, -1},   {0, 2, -1, -1}, {-2, -2, -2, -2}, {1, 2, -1, -1},
    {1, 3, -1, -1},   {0, 1, -1, -1}, {3, 0, -1, -1},  {-1, -1, -1, -1},
};

}  // namespace

std::size_t ContourSet::chain_count() const {
  std::size_t n = 0;
  for (const auto& level : polylines) n += level.size();
  return n;
}

std::vector<double> DefaultContourLevels(const LandscapeGrid& grid,
                                         std::size_t count) {
  std::vector<double> finite;
  for (double v : grid.values)
    if (std::isfinite(v)) finite.push_back(v);
  std::vector<double> levels;
  if (finite.empty() || count == 0) return levels;
  std::sort(finite.begin(), finite.end());
  const double last = static_cast<double>(finite.size() - 1);
  for (std::size_t k = 1; k <= count; ++k) {
    const double pos = last * static_cast<double>(k) / static_cast<double>(count + 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, finite.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    levels.push_back(finite[lo] + frac * (finite[hi] - finite[lo]));
  }
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

ContourSet MarchingSquares(const LandscapeGrid& grid, std::span<const double> levels) {
  const std::size_t res = grid.resolution();
  const SlicePlane& plane = grid.plane;
  ContourSet out;
  out.extent = plane.extent;
  out.levels.assign(levels.begin(), levels.end());
  out.polylines.resize(levels.size());

  for (std::size_t li = 0; li < levels.size(); ++li) {
    const double level = levels[li];
    Require(std::isfinite(level), "contour levels must be finite");

    auto vertex = [&](const EdgeKey& e) {
      const std::size_t i2 = e.horizontal ? e.i + 1 : e.i;
      const std::size_t j2 = e.horizontal ? e.j : e.j + 1;
      const double a = grid.at(e.i, e.j);
      const double b = grid.at(i2, j2);
      const double t = (level - a) / (b - a);
      const double x0 = PlaneCoordinate(plane, e.i);
      const double y0 = PlaneCoordinate(plane, e.j);
      if (e.horizontal)
        return Point2{x0 + t * (PlaneCoordinate(plane, i2) - x0), y0};
      return Point2{x0, y0 + t * (PlaneCoordinate(plane, j2) - y0)};
    };

    std::vector<Segment> segments;
    for (std::size_t i = 0; i + 1 < res; ++i) {
      for (std::size_t j = 0; j + 1 < res; ++j) {
        const double c[4] = {grid.at(i, j), grid.at(i + 1, j), grid.at(i + 1, j + 1),
                             grid.at(i, j + 1)};
        if (!std::isfinite(c[0]) || !std::isfinite(c[1]) || !std::isfinite(c[2]) ||
            !std::isfinite(c[3]))
          continue;
        int index = 0;
        for (int k = 0; k < 4; ++k)
          if (c[k] > level) index |= 1 << k;
        const EdgeKey edges[4] = {
            {true, i, j}, {false, i + 1, j}, {true, i, j + 1}, {false, i, j}};
        const int* pairs = kCaseSegments[index];
        if (pairs[0] == -1) continue;
        if (pairs[0] == -2) {
          const bool center_above = 0.25 * (c[0] + c[1] + c[2] + c[3]) > level;
          // Case 5: corners 0 and 2 above. Case 10: corners 1 and 3 above.
          // When the center sides with the above-corners they connect, and the
          // segments cut off the two below-corners.
          const bool cut_corners_1_3 = (index == 5) == center_above;
          if (cut_corners_1_3) {
            segments.push_back({edges[0], edges[1]});
            segments.push_back({edges[2], edges[3]});
          } else {
            segments.push_back({edges[3], edges[0]});
            segments.push_back({edges[1], edges[2]});
          }
          continue;
        }
        segments.push_back({edges[pairs[0]], edges[pairs[1]]});
      }
    }

    // Link segments into chains through their shared edge vertices.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_edge;
    for (std::size_t s = 0; s < segments.size(); ++s) {
      by_edge[segments[s].a.id(res)].push_back(s);
      by_edge[segments[s].b.id(res)].push_back(s);
    }
    std::vector<bool> used(segments.size(), false);

    auto walk = [&](std::size_t start, bool from_a) {
      std::vector<EdgeKey> keys;
      std::size_t current = start;
      EdgeKey tail = from_a ? segments[start].a : segments[start].b;
      EdgeKey head = from_a ? segments[start].b : segments[start].a;
      keys.push_back(tail);
      keys.push_back(head);
      used[current] = true;
      for (;;) {
        std::optional<std::size_t> next;
        for (std::size_t cand : by_edge[head.id(res)])
          if (!used[cand]) { next = cand; break; }
        if (!next) break;
        used[*next] = true;
        const Segment& seg = segments[*next];
        head = seg.a.id(res) == head.id(res) ? seg.b : seg.a;
        keys.push_back(head);
      }
      Polyline line;
      line.reserve(keys.size());
      for (const EdgeKey& k : keys) line.push_back(vertex(k));
      return line;
    };

    // Open chains start at vertices touched by a single segment.
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (used[s]) continue;
      if (by_edge[segments[s].a.id(res)].size() == 1) {
        out.polylines[li].push_back(walk(s, true));
      } else if (by_edge[segments[s].b.id(res)].size() == 1) {
        out.polylines[li].push_back(walk(s, false));
      }
    }
    for (std::size_t s = 0; s < segments.size(); ++s)
      if (!used[s]) out.polylines[li].push_back(walk(s, true));
  }
  return out;
}

std::string ContourSvg(const ContourSet& contours, std::span<const Point2> overlay) {
  const double size = kSvgViewport;
  const double extent = contours.extent > 0.0 ? contours.extent : 1.0;
  auto map_x = [&](double x) { return Fixed((x + extent) / (2.0 * extent) * size); };
  auto map_y = [&](double y) { return Fixed((extent - y) / (2.0 * extent) * size); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(kSvgViewport) + "\" height=\"" + std::to_string(kSvgViewport) +
         "\" viewBox=\"0 0 " + std::to_string(kSvgViewport) + " " +
         std::to_string(kSvgViewport) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(kSvgViewport) +
         "\" height=\"" + std::to_string(kSvgViewport) + "\" fill=\"#ffffff\"/>\n";
  const std::size_t n_levels = contours.levels.size();
  for (std::size_t li = 0; li < contours.polylines.size(); ++li) {
    const double t = n_levels > 1 ? static_cast<double>(li) / (n_levels - 1) : 0.0;
    const std::string color = HexColor(MapColor(t, Colormap::kViridis));
    for (const Polyline& line : contours.polylines[li]) {
      std::string d;
      for (std::size_t k = 0; k < line.size(); ++k) {
        d += k == 0 ? "M" : " L";
        d += map_x(line[k].x) + " " + map_y(line[k].y);
      }
      svg += "<path class=\"level-" + std::to_string(li) + "\" d=\"" + d +
             "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
    }
  }
  if (!overlay.empty()) {
    std::string pts;
    for (std::size_t k = 0; k < overlay.size(); ++k) {
      if (k) pts += ' ';
      pts += map_x(overlay[k].x) + "," + map_y(overlay[k].y);
    }
    svg += "<polyline class=\"path\" points=\"" + pts +
           "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::array<std::uint8_t, 3> MapColor(double t, Colormap map) {
  t = std::clamp(t, 0.0, 1.0);
  if (map == Colormap::kGray) {
    const auto g = static_cast<std::uint8_t>(std::lround(t * 255.0));
    return {g, g, g};
  }
  const double pos = t * static_cast<double>(kViridis.size() - 1);
  const std::size_t lo = std::min(static_cast<std::size_t>(pos), kViridis.size() - 2);
  const double frac = pos - static_cast<double>(lo);
  std::array<std::uint8_t, 3> c{};
  for (int k = 0; k < 3; ++k) {
    const double v = kViridis[lo][k] + frac * (kViridis[lo + 1][k] - kViridis[lo][k]);
    c[k] = static_cast<std::uint8_t>(std::lround(v));
  }
  return c;
}

std::string HeightmapPpm(const LandscapeGrid& grid, Colormap map) {
  const LandscapeGrid norm = NormalizeGrid(grid);
  const std::size_t res = norm.resolution();
  std::string out = PpmHeader(res, res);
  out.reserve(out.size() + res * res * 3);
  for (std::size_t row = 0; row < res; ++row) {
    const std::size_t j = res - 1 - row;
    for (std::size_t i = 0; i < res; ++i) {
      const double v = norm.at(i, j);
      const auto c = std::isfinite(v) ? MapColor(v, map) : kMissingColor;
      out.append(reinterpret_cast<const char*>(c.data()), 3);
    }
  }
  return out;
}

std::string MatrixHeatmapPpm(const Matrix& m) {
  double scale = 0.0;
  for (double v : m.data()) scale = std::max(scale, std::abs(v));
  std::string out = PpmHeader(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const double t = scale > 0.0 ? 0.5 + 0.5 * m(r, c) / scale : 0.5;
      const auto color = MapColor(t, Colormap::kViridis);
      out.append(reinterpret_cast<const char*>(color.data()), 3);
    }
  }
  return out;
}

std::string CurvesSvg(std::span<const Curve> curves, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      bool log_y) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 50;
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo, y_lo = x_lo, y_hi = -x_lo;
  auto y_of = [&](double y) { return log_y ? std::log10(y) : y; };
  for (const Curve& c : curves) {
    for (const Point2& p : c.points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || (log_y && p.y <= 0.0)) continue;
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      y_lo = std::min(y_lo, y_of(p.y));
      y_hi = std::max(y_hi, y_of(p.y));
    }
  }
  if (!(x_hi > x_lo)) { x_lo = 0.0; x_hi = std::isfinite(x_hi) ? x_hi + 1.0 : 1.0; }
  if (!(y_hi > y_lo)) { y_lo = std::isfinite(y_lo) ? y_lo - 1.0 : 0.0; y_hi = y_lo + 2.0; }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (y_hi - y_of(y)) / (y_hi - y_lo) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
         "height=\"420\" viewBox=\"0 0 640 420\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"420\" fill=\"#ffffff\"/>\n";
  svg += "<rect x=\"" + Fixed(kLeft) + "\" y=\"" + Fixed(kTop) + "\" width=\"" +
         Fixed(plot_w) + "\" height=\"" + Fixed(plot_h) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";
  svg += "<text x=\"" + Fixed(kLeft) + "\" y=\"24\" font-size=\"14\">" +
         EscapeXml(title) + "</text>\n";
  svg += "<text x=\"" + Fixed(kLeft + plot_w / 2) + "\" y=\"" + Fixed(kHeight - 12) +
         "\" font-size=\"12\" text-anchor=\"middle\">" + EscapeXml(x_label) + "</text>\n";
  svg += "<text x=\"14\" y=\"" + Fixed(kTop + plot_h / 2) +
         "\" font-size=\"12\" transform=\"rotate(-90 14 " + Fixed(kTop + plot_h / 2) +
         ")\" text-anchor=\"middle\">" + EscapeXml(y_label) + "</text>\n";
  // Axis range annotations.
  svg += "<text x=\"" + Fixed(kLeft) + "\" y=\"" + Fixed(kTop + plot_h + 16) +
         "\" font-size=\"10\">" + Fixed(x_lo, 3) + "</text>\n";
  svg += "<text x=\"" + Fixed(kLeft + plot_w) + "\" y=\"" + Fixed(kTop + plot_h + 16) +
         "\" font-size=\"10\" text-anchor=\"end\">" + Fixed(x_hi, 3) + "</text>\n";
  const std::string y_prefix = log_y ? "1e" : "";
  svg += "<text x=\"" + Fixed(kLeft - 4) + "\" y=\"" + Fixed(kTop + plot_h) +
         "\" font-size=\"10\" text-anchor=\"end\">" + y_prefix + Fixed(y_lo, 2) +
         "</text>\n";
  svg += "<text x=\"" + Fixed(kLeft - 4) + "\" y=\"" + Fixed(kTop + 10) +
         "\" font-size=\"10\" text-anchor=\"end\">" + y_prefix + Fixed(y_hi, 2) +
         "</text>\n";

  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const double t = curves.size() > 1 ? static_cast<double>(ci) / (curves.size() - 1) : 0.0;
    const std::string color = HexColor(MapColor(0.9 * t, Colormap::kViridis));
    std::string pts;
    for (const Point2& p : curves[ci].points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || (log_y && p.y <= 0.0)) continue;
      if (!pts.empty()) pts += ' ';
      pts += Fixed(sx(p.x)) + "," + Fixed(sy(p.y));
    }
    svg += "<polyline class=\"curve\" points=\"" + pts + "\" fill=\"none\" stroke=\"" +
           color + "\" stroke-width=\"1.5\"/>\n";
    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(ci);
    svg += "<polyline class=\"legend\" points=\"" + Fixed(kWidth - kRight + 10) + "," +
           Fixed(ly - 4) + " " + Fixed(kWidth - kRight + 30) + "," + Fixed(ly - 4) +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + Fixed(kWidth - kRight + 34) + "\" y=\"" + Fixed(ly) +
           "\" font-size=\"11\">" + EscapeXml(curves[ci].label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace slicescape
