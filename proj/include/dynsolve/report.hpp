// Copyright 2026 The dynsolve Authors
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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynsolve/trajectory.hpp"

namespace dynsolve {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { Csv, Json, Both };

struct ReportPaths {
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> json;
};

/// Output files for `out`. For Both, a trailing .csv/.json extension is
/// stripped and both extensions are appended; otherwise `out` is used as is.
ReportPaths reportPaths(const std::filesystem::path& out, ReportFormat format);

/// Per-sample table: t, computed tau, measured tau and error (when
/// measured), then diag(H), C qd, g, f per joint.
std::string reportCsv(const std::vector<ComputedRecord>& records,
                      const Trajectory& trajectory);

/// Summary with metrics (when available), configuration echo and version.
nlohmann::ordered_json reportSummary(
    const std::vector<ComputedRecord>& records, const Trajectory& trajectory,
    const std::optional<ComparisonReport>& comparison,
    const nlohmann::ordered_json& config_echo);

/// Write the report files. Output is byte-stable for identical inputs.
/// Throws InputError for an empty record list (nothing is written) and
/// IoError if a file cannot be written.
ReportPaths emitReport(const std::vector<ComputedRecord>& records,
                       const Trajectory& trajectory,
                       const std::optional<ComparisonReport>& comparison,
                       const nlohmann::ordered_json& config_echo,
                       const std::filesystem::path& out, ReportFormat format);

}  // namespace dynsolve
