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

#ifndef SLICESCAPE_TOOLS_CLI_OUTPUT_H_
#define SLICESCAPE_TOOLS_CLI_OUTPUT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace slicescape::cli {

struct Artifact {
  std::string path;  // relative to the output directory
  std::size_t bytes = 0;
  std::string hash;  // FNV-1a 64, hex
};

// Output directory whose files are written atomically (temporary file, then
// rename) and recorded for the manifest.
class OutputDir {
 public:
  explicit OutputDir(std::filesystem::path root);

  void Write(const std::string& relative, std::string_view bytes);

  const std::filesystem::path& root() const { return root_; }
  const std::vector<Artifact>& artifacts() const { return artifacts_; }

 private:
  std::filesystem::path root_;
  std::vector<Artifact> artifacts_;
};

std::string Fnv1aHex(std::string_view bytes);

// Writes manifest.json listing the config hash, every artifact, and versions.
void WriteManifest(OutputDir& out, const std::string& command, const std::string& config_hash,
                   std::uint64_t seed);

// Shortest round-trip decimal for a double; "inf", "-inf", "nan" otherwise.
std::string FormatDouble(double v);

}  // namespace slicescape::cli

#endif  // SLICESCAPE_TOOLS_CLI_OUTPUT_H_
