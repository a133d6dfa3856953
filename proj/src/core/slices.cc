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

#include "core/slices.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "core/parallel.h"
#include "core/seeding.h"
#include "json.hpp"

namespace slicescape {
namespace {

constexpr int kMaxBasisRetries = 64;
constexpr double kDegenerateTol = 1e-12;

// v - (u.v / u.u) u, in place.
void OrthogonalizeAgainst(Vector& v, const Vector& u) {
  const double scale = Dot(u, v) / Dot(u, u);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= scale * u[i];
}

void Scale(Vector& v, double factor) {
  for (double& x : v) x *= factor;
}

template <typename Draw>
Basis SampleWithRetries(std::size_t d, std::uint64_t seed, Draw&& draw,
                        const char* what) {
  Require(d >= 2, "slice bases need d >= 2");
  std::mt19937_64 rng = MakeEngine(seed);
  for (int attempt = 0; attempt < kMaxBasisRetries; ++attempt) {
    Vector u(d);
    Vector v(d);
    for (double& x : u) x = draw(rng);
    for (double& x : v) x = draw(rng);
    const double nu = Norm(u);
    const double nv = Norm(v);
    if (nu < kDegenerateTol || nv < kDegenerateTol) continue;
    const double cosine = std::abs(Dot(u, v)) / (nu * nv);
    if (1.0 - cosine < kDegenerateTol) continue;
    return {std::move(u), std::move(v)};
  }
  Fail(ErrorCode::kNumericFailure, std::string("could not draw a ") + what +
                                       " basis without degeneracy");
}

std::string JoinMeta(const char* key, const std::string& value) {
  return std::string("# ") + key + ": " + value + "\n";
}

std::string HexSeed(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

// Hash of the value bit patterns with every NaN mapped to one pattern.
std::uint64_t ValuesHash(const std::vector<double>& values) {
  std::vector<double> canonical(values);
  for (double& v : canonical)
    if (std::isnan(v)) v = std::numeric_limits<double>::quiet_NaN();
  return HashDoubles(canonical);
}

std::size_t ParseIndex(const std::string& token) {
  std::size_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end)
    Fail(ErrorCode::kInvalidArgument, "malformed index '" + token + "' in grid CSV");
  return value;
}

double ParseDouble(const std::string& token) {
  if (token == "nan") return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    Fail(ErrorCode::kInvalidArgument, "malformed number '" + token + "' in grid CSV");
  return value;
}

}  // namespace

void Validate(const SlicePlane& plane) {
  const std::size_t d = plane.center.size();
  Require(d >= 1 && plane.u.size() == d && plane.v.size() == d,
          "plane center and basis must share a dimension");
  Require(plane.resolution >= 2, "plane resolution must be >= 2");
  Require(std::isfinite(plane.extent) && plane.extent > 0.0,
          "plane extent must be > 0");
  Require(std::abs(Dot(plane.u, plane.v)) <=
              1e-10 * std::max(1.0, Norm(plane.u) * Norm(plane.v)),
          "plane basis vectors are not orthogonal");
}

double PlaneCoordinate(const SlicePlane& plane, std::size_t idx) {
  // The integer numerator makes mirrored indices exact negatives.
  const double last = static_cast<double>(plane.resolution - 1);
  return plane.extent * (2.0 * static_cast<double>(idx) - last) / last;
}

Basis SampleOrthonormalBasis(std::size_t d, std::uint64_t seed) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Basis b = SampleWithRetries(
      d, seed, [&](std::mt19937_64& rng) { return normal(rng); }, "orthonormal");
  Scale(b.u, 1.0 / Norm(b.u));
  OrthogonalizeAgainst(b.v, b.u);
  Scale(b.v, 1.0 / Norm(b.v));
  // A second pass tightens orthogonality to rounding level.
  OrthogonalizeAgainst(b.v, b.u);
  Scale(b.v, 1.0 / Norm(b.v));
  return b;
}

Basis SampleUnnormalizedBasis(std::size_t d, std::uint64_t seed) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Basis b = SampleWithRetries(
      d, seed, [&](std::mt19937_64& rng) { return uniform(rng); }, "unnormalized");
  const double length = 0.5 * (Norm(b.u) + Norm(b.v));
  Scale(b.u, length / Norm(b.u));
  OrthogonalizeAgainst(b.v, b.u);
  OrthogonalizeAgainst(b.v, b.u);
  Scale(b.v, length / Norm(b.v));
  return b;
}

Basis SampleBasis(BasisMode mode, std::size_t d, std::uint64_t seed) {
  return mode == BasisMode::kOrthonormal ? SampleOrthonormalBasis(d, seed)
                                         : SampleUnnormalizedBasis(d, seed);
}

std::size_t LandscapeGrid::failed_count() const {
  return static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
}

std::uint64_t CellEpisodeSeed(std::uint64_t seed, std::size_t i, std::size_t j,
                              std::size_t episode) {
  return DeriveSeed(seed, {i, j, episode});
}

LandscapeGrid EvaluateGrid(const Objective& f, const SlicePlane& plane,
                           std::size_t episodes, std::uint64_t seed,
                           std::size_t workers) {
  Validate(plane);
  Require(plane.center.size() == f.dimension(),
          "plane dimension does not match the objective");
  Require(episodes >= 1, "episodes per point must be >= 1");

  const std::size_t res = plane.resolution;
  const std::size_t d = f.dimension();
  LandscapeGrid grid;
  grid.plane = plane;
  grid.objective_name = f.name();
  grid.values.assign(res * res, 0.0);
  grid.failed.assign(res * res, 0);
  grid.episodes_per_point = episodes;
  grid.seed = seed;

  ParallelFor(res * res, workers, [&](std::size_t cell) {
    const std::size_t i = cell / res;
    const std::size_t j = cell % res;
    const double p1 = PlaneCoordinate(plane, i);
    const double p2 = PlaneCoordinate(plane, j);
    Vector x(d);
    for (std::size_t k = 0; k < d; ++k)
      x[k] = plane.center[k] + p1 * plane.u[k] + p2 * plane.v[k];
    // Incremental mean: identical episode values reproduce the value exactly.
    double mean = 0.0;
    bool ok = true;
    for (std::size_t e = 0; e < episodes && ok; ++e) {
      double value = 0.0;
      try {
        value = f.Evaluate(x, CellEpisodeSeed(seed, i, j, e));
      } catch (const Error& err) {
        if (err.code() == ErrorCode::kInvalidArgument) throw;
        ok = false;
        break;
      }
      if (!std::isfinite(value)) {
        ok = false;
        break;
      }
      mean += (value - mean) / static_cast<double>(e + 1);
    }
    grid.values[cell] = ok ? mean : std::numeric_limits<double>::quiet_NaN();
    grid.failed[cell] = ok ? 0 : 1;
  });
  return grid;
}

LandscapeGrid GridFromValues(SlicePlane plane, std::vector<double> values,
                             std::string objective_name) {
  Validate(plane);
  Require(values.size() == plane.resolution * plane.resolution,
          "value count must equal resolution^2");
  LandscapeGrid grid;
  grid.plane = std::move(plane);
  grid.objective_name = std::move(objective_name);
  grid.failed.resize(values.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    grid.failed[k] = std::isfinite(values[k]) ? 0 : 1;
  grid.values = std::move(values);
  return grid;
}

LandscapeGrid GaussianBlur(const LandscapeGrid& grid, double sigma) {
  Require(std::isfinite(sigma) && sigma > 0.0, "blur sigma must be > 0");
  const std::size_t res = grid.resolution();
  const long radius = static_cast<long>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(static_cast<std::size_t>(radius) + 1);
  for (long k = 0; k <= radius; ++k)
    kernel[static_cast<std::size_t>(k)] =
        std::exp(-static_cast<double>(k * k) / (2.0 * sigma * sigma));

  const long n = static_cast<long>(res);
  // One pass along an axis; axis 0 varies i, axis 1 varies j.
  auto pass = [&](const std::vector<double>& in, int axis) {
    std::vector<double> out(in.size(), std::numeric_limits<double>::quiet_NaN());
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        const std::size_t self = static_cast<std::size_t>(i * n + j);
        if (grid.failed[self]) continue;
        // Accumulating offsets from the center value keeps constant
        // neighborhoods exact.
        const double center = in[self];
        double acc = 0.0;
        double weight = 0.0;
        for (long k = -radius; k <= radius; ++k) {
          const long ii = axis == 0 ? i + k : i;
          const long jj = axis == 1 ? j + k : j;
          if (ii < 0 || ii >= n || jj < 0 || jj >= n) continue;
          const std::size_t idx = static_cast<std::size_t>(ii * n + jj);
          if (grid.failed[idx]) continue;
          const double w = kernel[static_cast<std::size_t>(std::abs(k))];
          acc += w * (in[idx] - center);
          weight += w;
        }
        out[self] = center + acc / weight;
      }
    }
    return out;
  };

  LandscapeGrid blurred = grid;
  blurred.values = pass(pass(grid.values, 0), 1);
  blurred.blurred_sigma = sigma;
  return blurred;
}

LandscapeGrid NormalizeGrid(const LandscapeGrid& grid) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : grid.values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi > lo))
    Fail(ErrorCode::kUndefinedResult,
         "cannot normalize a grid with fewer than two distinct finite values");
  LandscapeGrid out = grid;
  const double span = hi - lo;
  for (double& v : out.values)
    if (std::isfinite(v)) v = (v - lo) / span;
  out.normalized = true;
  return out;
}

namespace {

template <typename Better>
CellIndex ArgBest(const LandscapeGrid& grid, Better better) {
  const std::size_t res = grid.resolution();
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    if (!std::isfinite(grid.values[k])) continue;
    if (!best || better(grid.values[k], grid.values[*best])) best = k;
  }
  if (!best) Fail(ErrorCode::kUndefinedResult, "grid has no finite values");
  return {*best / res, *best % res};
}

}  // namespace

CellIndex ArgMin(const LandscapeGrid& grid) {
  return ArgBest(grid, [](double a, double b) { return a < b; });
}

CellIndex ArgMax(const LandscapeGrid& grid) {
  return ArgBest(grid, [](double a, double b) { return a > b; });
}

bool PassesConvexityCheck(const LandscapeGrid& grid, double tol) {
  const long n = static_cast<long>(grid.resolution());
  auto ok_line = [&](long i0, long j0, long di, long dj) {
    for (long s = 1;; ++s) {
      const long ia = i0 + (s - 1) * di, ja = j0 + (s - 1) * dj;
      const long ib = i0 + s * di, jb = j0 + s * dj;
      const long ic = i0 + (s + 1) * di, jc = j0 + (s + 1) * dj;
      if (ic < 0 || ic >= n || jc < 0 || jc >= n) return true;
      const double a = grid.at(ia, ja);
      const double b = grid.at(ib, jb);
      const double c = grid.at(ic, jc);
      if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) continue;
      if (a - 2.0 * b + c < -tol) return false;
    }
  };
  for (long k = 0; k < n; ++k) {
    if (!ok_line(k, 0, 0, 1)) return false;
    if (!ok_line(0, k, 1, 0)) return false;
  }
  return ok_line(0, 0, 1, 1) && ok_line(0, n - 1, 1, -1);
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string GridToCsv(const LandscapeGrid& grid) {
  std::string out;
  out += JoinMeta("objective", grid.objective_name);
  out += JoinMeta("center_hash", HexSeed(HashDoubles(grid.plane.center)));
  out += JoinMeta("seed", std::to_string(grid.seed));
  out += JoinMeta("extent", FormatDouble(grid.plane.extent));
  out += JoinMeta("resolution", std::to_string(grid.resolution()));
  out += JoinMeta("episodes", std::to_string(grid.episodes_per_point));
  out += JoinMeta("sigma", grid.blurred_sigma ? FormatDouble(*grid.blurred_sigma)
                                              : std::string("none"));
  out += JoinMeta("normalized", grid.normalized ? "true" : "false");
  out += "i,j,p1,p2,value\n";
  const std::size_t res = grid.resolution();
  for (std::size_t i = 0; i < res; ++i) {
    const std::string p1 = FormatDouble(PlaneCoordinate(grid.plane, i));
    for (std::size_t j = 0; j < res; ++j) {
      out += std::to_string(i);
      out += ',';
      out += std::to_string(j);
      out += ',';
      out += p1;
      out += ',';
      out += FormatDouble(PlaneCoordinate(grid.plane, j));
      out += ',';
      out += FormatDouble(grid.at(i, j));
      out += '\n';
    }
  }
  return out;
}

std::string GridMetadataToJson(const LandscapeGrid& grid) {
  nlohmann::ordered_json doc;
  doc["objective"] = grid.objective_name;
  doc["dimension"] = grid.plane.center.size();
  doc["center_hash"] = HexSeed(HashDoubles(grid.plane.center));
  doc["seed"] = grid.seed;
  doc["extent"] = grid.plane.extent;
  doc["resolution"] = grid.resolution();
  doc["episodes"] = grid.episodes_per_point;
  if (grid.blurred_sigma) {
    doc["sigma"] = *grid.blurred_sigma;
  } else {
    doc["sigma"] = nullptr;
  }
  doc["normalized"] = grid.normalized;
  doc["failed_cells"] = grid.failed_count();
  doc["values_hash"] = HexSeed(ValuesHash(grid.values));
  doc["center"] = grid.plane.center;
  doc["u"] = grid.plane.u;
  doc["v"] = grid.plane.v;
  return doc.dump(2) + "\n";
}

LandscapeGrid GridFromDocuments(const std::string& csv,
                                const std::string& metadata_json) {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(metadata_json);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("grid metadata: ") + e.what());
  }
  LandscapeGrid grid;
  try {
    grid.objective_name = meta.at("objective").get<std::string>();
    grid.plane.center = meta.at("center").get<Vector>();
    grid.plane.u = meta.at("u").get<Vector>();
    grid.plane.v = meta.at("v").get<Vector>();
    grid.plane.extent = meta.at("extent").get<double>();
    grid.plane.resolution = meta.at("resolution").get<std::size_t>();
    grid.seed = meta.at("seed").get<std::uint64_t>();
    grid.episodes_per_point = meta.at("episodes").get<std::size_t>();
    grid.normalized = meta.at("normalized").get<bool>();
    if (!meta.at("sigma").is_null()) grid.blurred_sigma = meta.at("sigma").get<double>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("grid metadata: ") + e.what());
  }
  Validate(grid.plane);

  const std::size_t res = grid.plane.resolution;
  grid.values.assign(res * res, std::numeric_limits<double>::quiet_NaN());
  grid.failed.assign(res * res, 1);
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      Require(line == "i,j,p1,p2,value", "grid CSV has an unexpected header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    Require(fields.size() == 5, "grid CSV row must have 5 fields");
    const std::size_t i = ParseIndex(fields[0]);
    const std::size_t j = ParseIndex(fields[1]);
    Require(i < res && j < res, "grid CSV index out of range");
    const double value = ParseDouble(fields[4]);
    grid.at(i, j) = value;
    grid.failed[i * res + j] = std::isfinite(value) ? 0 : 1;
    ++rows;
  }
  Require(rows == res * res, "grid CSV row count does not match the resolution");
  if (meta.contains("values_hash")) {
    Require(meta["values_hash"] == HexSeed(ValuesHash(grid.values)),
            "grid CSV values do not match the metadata hash");
  }
  return grid;
}

}  // namespace slicescape
