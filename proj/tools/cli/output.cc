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

#include "cli/output.h"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>
#include <utility>

#include "cli/errors.h"
#include "json.hpp"
#include "slicescape/slicescape.h"

namespace slicescape::cli {

namespace fs = std::filesystem;

OutputDir::OutputDir(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw IoError("cannot create " + root_.string() + ": " + ec.message());
}

void OutputDir::Write(const std::string& relative, std::string_view bytes) {
  const fs::path target = root_ / relative;
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw IoError("cannot create " + target.parent_path().string() + ": " + ec.message());
  const fs::path temp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("cannot write " + temp.string());
  }
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw IoError("cannot rename " + temp.string() + ": " + ec.message());
  }
  for (Artifact& a : artifacts_) {
    if (a.path == relative) {
      a = {relative, bytes.size(), Fnv1aHex(bytes)};
      return;
    }
  }
  artifacts_.push_back({relative, bytes.size(), Fnv1aHex(bytes)});
}

std::string Fnv1aHex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void WriteManifest(OutputDir& out, const std::string& command, const std::string& config_hash,
                   std::uint64_t seed) {
  nlohmann::json outputs = nlohmann::json::array();
  for (const Artifact& a : out.artifacts()) {
    outputs.push_back({{"path", a.path}, {"bytes", a.bytes}, {"fnv1a64", a.hash}});
  }
  const nlohmann::json manifest = {
      {"command", command},
      {"config_hash", config_hash},
      {"seed", seed},
      {"outputs", outputs},
      {"versions", {{"slicescape", ssc_version()}, {"slicescape_cli", SLICESCAPE_CLI_VERSION}}},
  };
  out.Write("manifest.json", manifest.dump(2) + "\n");
}

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace slicescape::cli
