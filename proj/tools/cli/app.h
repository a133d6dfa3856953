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

#ifndef SLICESCAPE_TOOLS_CLI_APP_H_
#define SLICESCAPE_TOOLS_CLI_APP_H_

#include <ostream>

namespace slicescape::cli {

// Parses arguments, runs the selected subcommand, and returns the process
// exit code: 0 success, 2 config or usage error, 3 numeric failure, 1 other.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slicescape::cli

#endif  // SLICESCAPE_TOOLS_CLI_APP_H_
