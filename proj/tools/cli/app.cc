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

#include "cli/app.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "cli/config.h"
#include "cli/errors.h"
#include "cli/output.h"

namespace slicescape::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kOutEnv = "SLICESCAPE_OUT";
constexpr const char* kDefaultOut = "slicescape_out";

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::string out;
  std::string configs = "configs";
};

fs::path OutputRoot(const Options& o) {
  if (!o.out.empty()) return o.out;
  if (const char* env = std::getenv(kOutEnv); env != nullptr && *env != '\0') return env;
  return kDefaultOut;
}

ExperimentConfig Load(const fs::path& path, const Options& o) {
  ExperimentConfig config = LoadConfig(path);
  if (o.seed) config.experiment.seed = *o.seed;
  if (o.workers) config.experiment.workers = *o.workers;
  return config;
}

std::string RunOne(const ExperimentConfig& config, const fs::path& root, std::ostream& log) {
  OutputDir out(root);
  out.Write("config.ini", SerializeConfig(config));
  RunCommand(config, out, log);
  const std::string hash = ConfigHash(config);
  WriteManifest(out, CommandName(config.experiment.command), hash, config.experiment.seed);
  return hash;
}

void RunSingle(Command command, const Options& o, std::ostream& log) {
  const ExperimentConfig config = Load(o.config, o);
  if (config.experiment.command != command) {
    throw ConfigError(o.config + " is a '" + CommandName(config.experiment.command) +
                      "' config, not '" + CommandName(command) + "'");
  }
  const fs::path root = OutputRoot(o);
  RunOne(config, root, log);
  log << "wrote " << root.string() << "\n";
}

// Runs every *.ini in the configs directory into <out>/<config stem>/.
void RunAll(const Options& o, std::ostream& log) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(o.configs, ec)) {
    if (entry.path().extension() == ".ini") files.push_back(entry.path());
  }
  if (ec) throw ConfigError("cannot list " + o.configs + ": " + ec.message());
  if (files.empty()) throw ConfigError("no .ini configs in " + o.configs);
  std::sort(files.begin(), files.end());

  const fs::path root = OutputRoot(o);
  OutputDir out(root);
  std::string runs = "config,command,config_hash,manifest\n";
  std::string hashes;
  for (const fs::path& file : files) {
    const ExperimentConfig config = Load(file, o);
    const std::string stem = file.stem().string();
    log << "== " << stem << " (" << CommandName(config.experiment.command) << ")\n";
    const std::string hash = RunOne(config, root / stem, log);
    runs += file.filename().string() + "," + CommandName(config.experiment.command) + "," +
            hash + "," + stem + "/manifest.json\n";
    hashes += hash;
  }
  out.Write("runs.csv", runs);
  const std::uint64_t seed = o.seed.value_or(0);
  WriteManifest(out, "reproduce-all", Fnv1aHex(hashes), seed);
  log << "wrote " << root.string() << "\n";
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loss-landscape slicing experiments for trajectory optimization."};
  app.name("slicescape");
  app.require_subcommand(1);
  app.set_version_flag("--version", SLICESCAPE_CLI_VERSION);

  Options options;
  struct Entry {
    Command command;
    const char* help;
  };
  const std::vector<Entry> entries = {
      {Command::kSlice, "Random 2D slices of a pendulum trajectory landscape"},
      {Command::kSweepT, "Hessian conditioning and slices across horizons"},
      {Command::kPolicyLandscape, "P-controller policy landscape over theta and w"},
      {Command::kTermination, "Trajectory slices under each early-termination mode"},
      {Command::kOptCompare, "CMA-ES convergence across task variants"},
      {Command::kTheory, "Slice conditioning and convexity on analytic functions"},
      {Command::kHessianReport, "Hessian eigen-analysis at an objective's optimum"},
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", options.seed, "Override the config seed");
    sub->add_option("--workers", options.workers, "Worker threads (0 = all cores)");
    sub->add_option("--out", options.out,
                    std::string("Output directory (default $") + kOutEnv + " or " +
                        kDefaultOut + ")");
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(CommandName(e.command), e.help);
    sub->add_option("--config", options.config, "Experiment config (.ini)")
        ->required()
        ->check(CLI::ExistingFile);
    add_common(sub);
    subs.emplace_back(sub, e.command);
  }
  CLI::App* all = app.add_subcommand("reproduce-all", "Run every config in a directory");
  all->add_option("--configs", options.configs, "Directory of .ini configs")
      ->capture_default_str();
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (all->parsed()) {
      RunAll(options, out);
    } else {
      for (const auto& [sub, command] : subs) {
        if (sub->parsed()) RunSingle(command, options, out);
      }
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace slicescape::cli
