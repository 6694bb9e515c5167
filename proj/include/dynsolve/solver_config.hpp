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
#include <string>
#include <string_view>

#include <json.hpp>

#include "dynsolve/solver.hpp"

namespace dynsolve {

/// Parse a solver configuration document:
///
///   {
///     "plugin_name": "franka-friction",
///     "robot_description_path": "arm.urdf",
///     "root": "base_link", "tip": "tool0",
///     "gravity": [0, 0, -9.81],
///     "friction": [{"model": "asymmetric-sigmoid",
///                   "params": {"phi1": 1.0, "phi2": 10.0, "phi3": 0.0}}, ...],
///     "drive_gains": [10.0, ...],
///     "friction_units": "torque"
///   }
///
/// A relative robot_description_path is resolved against `base_dir` and the
/// file is read into SolverConfig::robot_description. Unknown keys are
/// ignored with a warning. Throws ConfigError on schema violations and
/// IoError if the description cannot be read.
SolverConfig parseSolverConfig(std::string_view json_text,
                               const std::filesystem::path& base_dir);

/// Read and parse a configuration file; relative paths resolve against the
/// file's directory.
SolverConfig loadSolverConfig(const std::filesystem::path& path);

/// Configuration echo for reports. The description text itself is omitted.
nlohmann::ordered_json configToJson(const SolverConfig& config);

}  // namespace dynsolve
