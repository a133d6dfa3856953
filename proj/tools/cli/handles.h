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

#ifndef SLICESCAPE_TOOLS_CLI_HANDLES_H_
#define SLICESCAPE_TOOLS_CLI_HANDLES_H_

#include <string>
#include <utility>

#include "cli/errors.h"
#include "slicescape/slicescape.h"

namespace slicescape::cli {

// Maps a failed C API status onto the CLI error classes.
inline void Check(ssc_status status) {
  if (status == SSC_OK) return;
  const std::string message = ssc_last_error();
  switch (status) {
    case SSC_INVALID_ARGUMENT: throw ConfigError(message);
    case SSC_NUMERIC_FAILURE:
    case SSC_UNDEFINED_RESULT: throw NumericError(message);
    case SSC_IO_ERROR: throw IoError(message);
    default: throw std::runtime_error(message);
  }
}

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& other) noexcept : ptr_(std::exchange(other.ptr_, nullptr)) {}
  Handle& operator=(Handle&& other) noexcept {
    std::swap(ptr_, other.ptr_);
    return *this;
  }
  ~Handle() { Free(ptr_); }

  T* get() const { return ptr_; }
  T** out() { return &ptr_; }

 private:
  T* ptr_ = nullptr;
};

using ObjectiveHandle = Handle<ssc_objective, ssc_objective_free>;
using GridHandle = Handle<ssc_grid, ssc_grid_free>;
using BufferHandle = Handle<ssc_buffer, ssc_buffer_free>;
using ReportHandle = Handle<ssc_hessian_report, ssc_hessian_report_free>;
using RunHandle = Handle<ssc_run, ssc_run_free>;
using ComparisonHandle = Handle<ssc_comparison, ssc_comparison_free>;

inline std::string Text(const BufferHandle& buffer) {
  return std::string(ssc_buffer_data(buffer.get()), ssc_buffer_size(buffer.get()));
}

}  // namespace slicescape::cli

#endif  // SLICESCAPE_TOOLS_CLI_HANDLES_H_
