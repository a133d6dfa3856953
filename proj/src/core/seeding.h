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

#ifndef SLICESCAPE_CORE_SEEDING_H_
#define SLICESCAPE_CORE_SEEDING_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>

namespace slicescape {

// SplitMix64 finalizer. Used as a counter-based mixer: a seed for any
// (seed, i, j, episode) tuple is a pure function of the tuple, independent of
// evaluation order.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = Mix64(seed);
  for (std::uint64_t k : keys) h = Mix64(h ^ Mix64(k + 0x632be59bd9b4e019ULL));
  return h;
}

// FNV-1a over the bit patterns of a vector of doubles. Stable across
// platforms with IEEE-754 doubles; used to fingerprint plane centers.
inline std::uint64_t HashDoubles(std::span<const double> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : values) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

inline std::uint64_t HashBytes(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Engine used everywhere randomness is consumed.
inline std::mt19937_64 MakeEngine(std::uint64_t seed) {
  return std::mt19937_64(Mix64(seed));
}

}  // namespace slicescape

#endif  // SLICESCAPE_CORE_SEEDING_H_
