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

#ifndef SLICESCAPE_TOOLS_CLI_COMMANDS_H_
#define SLICESCAPE_TOOLS_CLI_COMMANDS_H_

#include <ostream>

#include "cli/config.h"
#include "cli/output.h"

namespace slicescape::cli {

// Each command writes its artifacts into out and a short report to log.
void RunSlice(const ExperimentConfig& config, OutputDir& out, std::ostream& log);
void RunSweepT(const ExperimentConfig& config, OutputDir& out, std::ostream& log);
void RunPolicyLandscape(const ExperimentConfig& config, OutputDir& out, std::ostream& log);
void RunTermination(const ExperimentConfig& config, OutputDir& out, std::ostream& log);
void RunOptCompare(const ExperimentConfig& config, OutputDir& out, std::ostream& log);
void RunTheory(const ExperimentConfig& config, OutputDir& out, std::ostream& log);
void RunHessianReport(const ExperimentConfig& config, OutputDir& out, std::ostream& log);

void RunCommand(const ExperimentConfig& config, OutputDir& out, std::ostream& log);

}  // namespace slicescape::cli

#endif  // SLICESCAPE_TOOLS_CLI_COMMANDS_H_
