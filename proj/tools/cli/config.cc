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

#include "cli/config.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cli/errors.h"

namespace slicescape::cli {
namespace {

namespace pt = boost::property_tree;

constexpr std::array<std::pair<Command, const char*>, 7> kCommands = {{
    {Command::kSlice, "slice"},
    {Command::kSweepT, "sweep-T"},
    {Command::kPolicyLandscape, "policy-landscape"},
    {Command::kTermination, "termination"},
    {Command::kOptCompare, "opt-compare"},
    {Command::kTheory, "theory"},
    {Command::kHessianReport, "hessian-report"},
}};

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& text) {
  T value{};
  const std::string s = Trim(text);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw ConfigError(key + ": malformed number '" + text + "'");
  }
  return value;
}

bool ParseBool(const std::string& key, const std::string& text) {
  const std::string s = Trim(text);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

std::string FormatNumber(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

template <typename T>
std::string FormatNumber(T v) {
  return std::to_string(v);
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

template <typename T>
std::string JoinNumbers(const std::vector<T>& items) {
  std::vector<std::string> text;
  for (const T& v : items) text.push_back(FormatNumber(v));
  return Join(text);
}

void RequireOneOf(const std::string& key, const std::string& value,
                  std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (value == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ConfigError(key + ": '" + value + "' is not one of {" + list + "}");
}

// One table of field bindings drives both parsing and serialization, so the
// two cannot drift apart.
struct Field {
  std::function<void(const std::string& key, const std::string& text)> parse;
  std::function<std::string()> format;
};
using Section = std::vector<std::pair<std::string, Field>>;

template <typename T>
Field NumberField(T& target) {
  return {[&target](const std::string& key, const std::string& text) {
            target = ParseNumber<T>(key, text);
          },
          [&target] { return FormatNumber(target); }};
}

template <typename T>
Field NumberListField(std::vector<T>& target) {
  return {[&target](const std::string& key, const std::string& text) {
            target.clear();
            for (const std::string& item : SplitList(text)) {
              target.push_back(ParseNumber<T>(key, item));
            }
          },
          [&target] { return JoinNumbers(target); }};
}

Field StringField(std::string& target) {
  return {[&target](const std::string&, const std::string& text) { target = Trim(text); },
          [&target] { return target; }};
}

Field StringListField(std::vector<std::string>& target) {
  return {[&target](const std::string&, const std::string& text) { target = SplitList(text); },
          [&target] { return Join(target); }};
}

Field BoolField(bool& target) {
  return {[&target](const std::string& key, const std::string& text) {
            target = ParseBool(key, text);
          },
          [&target] { return std::string(target ? "true" : "false"); }};
}

Field CommandField(Command& target) {
  return {[&target](const std::string&, const std::string& text) {
            target = ParseCommand(Trim(text));
          },
          [&target] { return std::string(CommandName(target)); }};
}

std::vector<std::pair<std::string, Section>> Bind(ExperimentConfig& c) {
  return {
      {"experiment",
       {{"command", CommandField(c.experiment.command)},
        {"name", StringField(c.experiment.name)},
        {"seed", NumberField(c.experiment.seed)},
        {"workers", NumberField(c.experiment.workers)}}},
      {"task",
       {{"horizons", NumberListField(c.task.horizons)},
        {"action_spaces", StringListField(c.task.action_spaces)},
        {"objective", StringField(c.task.objective)},
        {"action_weight", NumberField(c.task.action_weight)},
        {"termination", StringField(c.task.termination)},
        {"termination_threshold", NumberField(c.task.termination_threshold)},
        {"alive_bonus", NumberField(c.task.alive_bonus)},
        {"penalty_per_step", NumberField(c.task.penalty_per_step)},
        {"spline_spacing", NumberField(c.task.spline_spacing)}}},
      {"slice",
       {{"extent", NumberField(c.slice.extent)},
        {"resolution", NumberField(c.slice.resolution)},
        {"episodes", NumberField(c.slice.episodes)},
        {"sigma", NumberField(c.slice.sigma)},
        {"basis", StringField(c.slice.basis)},
        {"colormap", StringField(c.slice.colormap)},
        {"seeds", NumberField(c.slice.seeds)},
        {"terminations", StringListField(c.slice.terminations)}}},
      {"policy",
       {{"theta_min", NumberField(c.policy.theta_min)},
        {"theta_max", NumberField(c.policy.theta_max)},
        {"theta_step", NumberField(c.policy.theta_step)},
        {"weights", NumberListField(c.policy.weights)},
        {"modes", StringListField(c.policy.modes)},
        {"angles", NumberListField(c.policy.angles)}}},
      {"optimizer",
       {{"variants", StringListField(c.optimizer.variants)},
        {"population", NumberField(c.optimizer.population)},
        {"sigma0", NumberField(c.optimizer.sigma0)},
        {"budget", NumberField(c.optimizer.budget)},
        {"seeds", NumberField(c.optimizer.seeds)},
        {"x0_amplitude", NumberField(c.optimizer.x0_amplitude)}}},
      {"theory",
       {{"dims", NumberListField(c.theory.dims)},
        {"ks", NumberListField(c.theory.ks)},
        {"eps", NumberField(c.theory.eps)},
        {"bases", NumberField(c.theory.bases)},
        {"basis_modes", StringListField(c.theory.basis_modes)},
        {"bimodal_dims", NumberListField(c.theory.bimodal_dims)},
        {"extent", NumberField(c.theory.extent)},
        {"resolution", NumberField(c.theory.resolution)},
        {"rastrigin_extent", NumberField(c.theory.rastrigin_extent)}}},
      {"hessian",
       {{"objective", StringField(c.hessian.objective)},
        {"d", NumberField(c.hessian.d)},
        {"k", NumberField(c.hessian.k)},
        {"eps", NumberField(c.hessian.eps)},
        {"step", NumberField(c.hessian.step)},
        {"rank_tol", NumberField(c.hessian.rank_tol)},
        {"include_matrix", BoolField(c.hessian.include_matrix)}}},
  };
}

void ValidateTermination(const std::string& key, const std::string& mode) {
  RequireOneOf(key, mode, {"none", "plain", "alive_bonus", "penalty"});
}

void Validate(const ExperimentConfig& c) {
  if (c.task.horizons.empty()) throw ConfigError("task.horizons: list is empty");
  for (std::size_t t : c.task.horizons) {
    if (t == 0) throw ConfigError("task.horizons: horizons must be positive");
  }
  if (c.task.action_spaces.empty()) throw ConfigError("task.action_spaces: list is empty");
  for (const std::string& s : c.task.action_spaces) {
    RequireOneOf("task.action_spaces", s, {"torque", "angle", "spline"});
  }
  RequireOneOf("task.objective", c.task.objective, {"cost", "reward"});
  ValidateTermination("task.termination", c.task.termination);
  RequireOneOf("slice.basis", c.slice.basis, {"orthonormal", "unnormalized"});
  RequireOneOf("slice.colormap", c.slice.colormap, {"gray", "viridis"});
  for (const std::string& m : c.slice.terminations) ValidateTermination("slice.terminations", m);
  if (c.slice.seeds == 0) throw ConfigError("slice.seeds: must be positive");
  if (!(c.policy.theta_step > 0.0) || !(c.policy.theta_max > c.policy.theta_min)) {
    throw ConfigError("policy: need theta_max > theta_min and theta_step > 0");
  }
  if (c.policy.weights.empty()) throw ConfigError("policy.weights: list is empty");
  if (c.policy.modes.empty()) throw ConfigError("policy.modes: list is empty");
  for (const std::string& mode : c.policy.modes) {
    const auto plus = mode.find('+');
    RequireOneOf("policy.modes", mode.substr(0, plus), {"cost", "reward"});
    if (plus != std::string::npos) ValidateTermination("policy.modes", mode.substr(plus + 1));
  }
  if (c.optimizer.variants.empty()) throw ConfigError("optimizer.variants: list is empty");
  for (const std::string& v : c.optimizer.variants) {
    RequireOneOf("optimizer.variants", v,
                 {"torque-cost", "torque-reward", "angle-cost", "angle-reward", "spline-cost",
                  "spline-reward"});
  }
  if (c.optimizer.seeds == 0) throw ConfigError("optimizer.seeds: must be positive");
  for (const std::string& m : c.theory.basis_modes) {
    RequireOneOf("theory.basis_modes", m, {"orthonormal", "unnormalized"});
  }
  RequireOneOf("hessian.objective", c.hessian.objective,
               {"pendulum", "quadratic_k", "rastrigin", "bimodal"});
}

}  // namespace

const char* CommandName(Command command) {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "unknown";
}

Command ParseCommand(const std::string& name) {
  for (const auto& [c, n] : kCommands) {
    if (name == n) return c;
  }
  throw ConfigError("experiment.command: unknown command '" + name + "'");
}

ExperimentConfig ParseConfig(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config syntax: " + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }
  ExperimentConfig config;
  const auto sections = Bind(config);
  for (const auto& [section_name, section_tree] : tree) {
    if (!section_tree.data().empty()) {
      throw ConfigError("key '" + section_name + "' is outside any section");
    }
    const Section* section = nullptr;
    for (const auto& [name, fields] : sections) {
      if (name == section_name) section = &fields;
    }
    if (section == nullptr) throw ConfigError("unknown section [" + section_name + "]");
    for (const auto& [key, value] : section_tree) {
      const std::string full = section_name + "." + key;
      const Field* field = nullptr;
      for (const auto& [name, f] : *section) {
        if (name == key) field = &f;
      }
      if (field == nullptr) throw ConfigError("unknown key " + full);
      field->parse(full, value.data());
    }
  }
  Validate(config);
  return config;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

std::string SerializeConfig(const ExperimentConfig& config) {
  ExperimentConfig copy = config;
  std::string out;
  for (const auto& [name, fields] : Bind(copy)) {
    if (!out.empty()) out += "\n";
    out += "[" + name + "]\n";
    for (const auto& [key, field] : fields) out += key + " = " + field.format() + "\n";
  }
  return out;
}

std::string ConfigHash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : SerializeConfig(config)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace slicescape::cli
