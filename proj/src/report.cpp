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

#include "dynsolve/report.hpp"

#include <fstream>

#include <fmt/format.h>

#include "dynsolve/errors.hpp"

namespace dynsolve {
namespace {

std::vector<double> toStd(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

void appendValues(std::string& line, const Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) line += fmt::format(",{}", v(i));
}

void appendNames(std::string& line, std::string_view prefix, Eigen::Index n) {
  for (Eigen::Index i = 0; i < n; ++i) line += fmt::format(",{}{}", prefix, i);
}

void writeFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

ReportPaths reportPaths(const std::filesystem::path& out, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv:
      return {out, std::nullopt};
    case ReportFormat::Json:
      return {std::nullopt, out};
    case ReportFormat::Both:
      break;
  }
  std::filesystem::path stem = out;
  if (stem.extension() == ".csv" || stem.extension() == ".json") {
    stem.replace_extension();
  }
  return {std::filesystem::path(stem.string() + ".csv"),
          std::filesystem::path(stem.string() + ".json")};
}

std::string reportCsv(const std::vector<ComputedRecord>& records,
                      const Trajectory& traj) {
  const Eigen::Index n = records.front().tau.size();
  const bool measured = traj.hasMeasurements();

  std::string out = "t";
  appendNames(out, "tau", n);
  if (measured) {
    appendNames(out, "tau_measured", n);
    appendNames(out, "error", n);
  }
  appendNames(out, "H_diag", n);
  appendNames(out, "coriolis", n);
  appendNames(out, "gravity", n);
  appendNames(out, "friction", n);
  out += '\n';

  for (std::size_t k = 0; k < records.size(); ++k) {
    const ComputedRecord& r = records[k];
    std::string line = fmt::format("{}", r.t);
    appendValues(line, r.tau);
    if (measured) {
      const Eigen::VectorXd& m = *traj.samples[k].tau_measured;
      appendValues(line, m);
      appendValues(line, r.tau - m);
    }
    appendValues(line, r.inertia_diag);
    appendValues(line, r.coriolis);
    appendValues(line, r.gravity);
    appendValues(line, r.friction);
    out += line;
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json reportSummary(
    const std::vector<ComputedRecord>& records, const Trajectory& traj,
    const std::optional<ComparisonReport>& comparison,
    const nlohmann::ordered_json& config_echo) {
  nlohmann::ordered_json summary;
  summary["tool"] = "dynsolve";
  summary["version"] = kToolVersion;
  summary["dof"] = traj.dof;
  summary["sample_count"] = records.size();
  summary["accelerations"] =
      traj.accelerations_from_file ? "file" : "differentiated";
  if (comparison) {
    summary["metrics"] = {{"rms", toStd(comparison->rms)},
                          {"max_abs", toStd(comparison->max_abs)},
                          {"mean_error", toStd(comparison->mean_error)}};
  } else {
    summary["metrics"] = nullptr;
  }
  summary["config"] = config_echo;
  return summary;
}

ReportPaths emitReport(const std::vector<ComputedRecord>& records,
                       const Trajectory& traj,
                       const std::optional<ComparisonReport>& comparison,
                       const nlohmann::ordered_json& config_echo,
                       const std::filesystem::path& out, ReportFormat format) {
  if (records.empty()) throw InputError("refusing to write an empty report");
  if (records.size() != traj.samples.size()) {
    throw DimensionError(fmt::format("{} records for {} samples",
                                     records.size(), traj.samples.size()));
  }
  const ReportPaths paths = reportPaths(out, format);
  if (paths.csv) writeFile(*paths.csv, reportCsv(records, traj));
  if (paths.json) {
    writeFile(*paths.json,
              reportSummary(records, traj, comparison, config_echo).dump(2) +
                  "\n");
  }
  return paths;
}

}  // namespace dynsolve
