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

#include "dynsolve/trajectory.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <string_view>

#include <fmt/format.h>

#include "dynsolve/errors.hpp"

namespace dynsolve {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> splitFields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parseField(std::string_view field, std::size_t row) {
  const std::string text(field);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE ||
      !std::isfinite(v)) {
    throw FormatError("invalid number '" + text + "'", row);
  }
  return v;
}

// Length of the run of columns named prefix0, prefix1, ... starting at `pos`.
int blockWidth(const std::vector<std::string_view>& header, std::size_t pos,
               std::string_view prefix) {
  int k = 0;
  while (pos + static_cast<std::size_t>(k) < header.size() &&
         header[pos + static_cast<std::size_t>(k)] ==
             fmt::format("{}{}", prefix, k)) {
    ++k;
  }
  return k;
}

struct Layout {
  bool has_qdd = false;
  bool has_tau = false;
  std::size_t columns = 0;
};

Layout parseHeader(const std::vector<std::string_view>& header, int dof,
                   std::size_t row) {
  if (header.empty() || header[0] != "t") {
    throw FormatError("header must start with column 't'", row);
  }
  std::size_t pos = 1;
  auto block = [&](std::string_view prefix, bool optional) {
    const int width = blockWidth(header, pos, prefix);
    if (width == 0 && optional) return false;
    if (width == 0) {
      throw FormatError(fmt::format("missing {}0.. column block", prefix), row);
    }
    if (width != dof) {
      throw DimensionError(fmt::format(
          "row {}: {} block has {} columns, expected dof {}", row, prefix,
          width, dof));
    }
    pos += static_cast<std::size_t>(width);
    return true;
  };

  Layout layout;
  block("q", false);
  block("qd", false);
  layout.has_qdd = block("qdd", true);
  layout.has_tau = block("tau", true);
  if (pos != header.size()) {
    throw FormatError("unexpected column '" + std::string(header[pos]) + "'",
                      row);
  }
  layout.columns = pos;
  return layout;
}

// Central differences in the interior, one-sided at the ends.
void differentiateVelocities(std::vector<TrajectorySample>& samples) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? i : i + 1;
    samples[i].qdd = (samples[hi].qd - samples[lo].qd) /
                     (samples[hi].t - samples[lo].t);
  }
}

std::string joinRow(const TrajectorySample& s, bool with_tau) {
  std::string line = fmt::format("{}", s.t);
  for (const Eigen::VectorXd* v : {&s.q, &s.qd, &s.qdd}) {
    for (Eigen::Index i = 0; i < v->size(); ++i) {
      line += fmt::format(",{}", (*v)(i));
    }
  }
  if (with_tau) {
    for (Eigen::Index i = 0; i < s.tau_measured->size(); ++i) {
      line += fmt::format(",{}", (*s.tau_measured)(i));
    }
  }
  return line;
}

}  // namespace

bool Trajectory::hasMeasurements() const {
  return !samples.empty() && samples.front().tau_measured.has_value();
}

Trajectory parseTrajectory(std::istream& in, int expected_dof,
                           const TrajectoryLoadOptions& options) {
  Trajectory traj;
  traj.dof = expected_dof;
  std::optional<Layout> layout;
  std::string line;
  std::size_t row = 0;

  while (std::getline(in, line)) {
    ++row;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const std::string_view body = trim(text.substr(1));
      if (body.starts_with("units=")) {
        const std::string_view units = trim(body.substr(6));
        if (units == "torque") {
          traj.units = MeasurementUnits::Torque;
        } else if (units == "current") {
          traj.units = MeasurementUnits::Current;
        } else {
          throw FormatError("unknown units '" + std::string(units) + "'", row);
        }
      }
      continue;
    }

    const auto fields = splitFields(text);
    if (!layout) {
      layout = parseHeader(fields, expected_dof, row);
      if (!layout->has_qdd && !options.differentiate) {
        throw FormatError(
            "missing qdd0.. column block (use differentiation to estimate it)",
            row);
      }
      continue;
    }
    if (fields.size() != layout->columns) {
      throw FormatError(fmt::format("expected {} fields, found {}",
                                    layout->columns, fields.size()),
                        row);
    }

    std::size_t col = 0;
    auto take = [&](int n) {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = parseField(fields[col++], row);
      return v;
    };
    TrajectorySample s;
    s.t = parseField(fields[col++], row);
    s.q = take(expected_dof);
    s.qd = take(expected_dof);
    s.qdd = layout->has_qdd ? take(expected_dof)
                            : Eigen::VectorXd::Zero(expected_dof);
    if (layout->has_tau) s.tau_measured = take(expected_dof);

    if (!traj.samples.empty() && !(s.t > traj.samples.back().t)) {
      throw NonMonotonicTimeError(row);
    }
    traj.samples.push_back(std::move(s));
  }

  if (!layout) throw FormatError("missing header row", row + 1);
  if (traj.samples.empty()) throw FormatError("no data rows", row + 1);

  if (!layout->has_qdd) {
    if (traj.samples.size() < 2) {
      throw FormatError("differentiation needs at least two samples", row);
    }
    differentiateVelocities(traj.samples);
    traj.accelerations_from_file = false;
  }
  return traj;
}

Trajectory loadTrajectory(const std::filesystem::path& path, int expected_dof,
                          const TrajectoryLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trajectory '" + path.string() + "'");
  return parseTrajectory(in, expected_dof, options);
}

void writeTrajectory(std::ostream& out, const Trajectory& traj) {
  const bool with_tau = traj.hasMeasurements();
  if (with_tau) {
    out << "# units="
        << (traj.units == MeasurementUnits::Current ? "current" : "torque")
        << '\n';
  }
  std::string header = "t";
  for (const char* prefix : {"q", "qd", "qdd"}) {
    for (int i = 0; i < traj.dof; ++i) header += fmt::format(",{}{}", prefix, i);
  }
  if (with_tau) {
    for (int i = 0; i < traj.dof; ++i) header += fmt::format(",tau{}", i);
  }
  out << header << '\n';
  for (const auto& s : traj.samples) out << joinRow(s, with_tau) << '\n';
}

Trajectory measuredAsTorques(Trajectory traj, const DriveGains* gains) {
  if (traj.units == MeasurementUnits::Torque || !traj.hasMeasurements()) {
    return traj;
  }
  if (gains == nullptr) {
    throw MissingParamError(
        "measured currents need drive_gains for conversion to torques");
  }
  for (auto& s : traj.samples) {
    s.tau_measured = torquesFromCurrents(*gains, *s.tau_measured);
  }
  traj.units = MeasurementUnits::Torque;
  return traj;
}

Trajectory generateSinusoid(const SinusoidSpec& spec) {
  if (spec.dof < 1) throw InputError("dof must be at least 1");
  if (!(spec.duration >= 0.0) || !(spec.rate > 0.0) ||
      !std::isfinite(spec.duration) || !std::isfinite(spec.rate)) {
    throw InputError("duration must be >= 0 and rate > 0");
  }
  for (const Eigen::VectorXd* v :
       {&spec.amplitude, &spec.frequency, &spec.phase}) {
    if (v->size() != spec.dof) {
      throw DimensionError(fmt::format(
          "sinusoid parameters need {} entries, got {}", spec.dof, v->size()));
    }
    if (!v->allFinite()) throw InputError("sinusoid parameters must be finite");
  }

  Trajectory traj;
  traj.dof = spec.dof;
  const auto steps =
      static_cast<std::size_t>(std::floor(spec.duration * spec.rate + 1e-9));
  const Eigen::ArrayXd omega = 2.0 * std::numbers::pi * spec.frequency.array();
  for (std::size_t k = 0; k <= steps; ++k) {
    TrajectorySample s;
    s.t = static_cast<double>(k) / spec.rate;
    const Eigen::ArrayXd angle = omega * s.t + spec.phase.array();
    s.q = spec.amplitude.array() * angle.sin();
    s.qd = spec.amplitude.array() * omega * angle.cos();
    s.qdd = -spec.amplitude.array() * omega.square() * angle.sin();
    traj.samples.push_back(std::move(s));
  }
  return traj;
}

std::vector<std::string> checkLimits(const KinematicChain& chain,
                                     const Trajectory& traj) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto& s = traj.samples[k];
    for (int j = 0; j < chain.dof() && j < s.q.size(); ++j) {
      const JointLimits& lim = chain.joints[static_cast<std::size_t>(j)].limits;
      if (s.q(j) < lim.lower || s.q(j) > lim.upper) {
        out.push_back(fmt::format(
            "sample {} (t={}): joint '{}' position {} outside [{}, {}]", k,
            s.t, chain.joints[static_cast<std::size_t>(j)].name, s.q(j),
            lim.lower, lim.upper));
      }
    }
  }
  return out;
}

SampleError::SampleError(std::size_t index, const Error& cause)
    : Error(cause.category(),
            fmt::format("sample {}: {}", index, cause.what())),
      index_(index) {}

std::vector<ComputedRecord> computeAlongTrajectory(
    const InverseDynamicsSolver& solver, const Trajectory& traj) {
  if (solver.dof() != traj.dof) {
    throw DimensionError(fmt::format("solver dof {} does not match trajectory "
                                     "dof {}",
                                     solver.dof(), traj.dof));
  }
  std::vector<ComputedRecord> records;
  records.reserve(traj.samples.size());
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto& s = traj.samples[k];
    try {
      ComputedRecord r;
      r.t = s.t;
      r.tau = solver.getTorques(s.q, s.qd, s.qdd);
      const DynamicComponents dc = solver.getDynamicComponents(s.q, s.qd);
      r.inertia_diag = dc.inertia.diagonal();
      r.coriolis = dc.coriolis;
      r.gravity = dc.gravity;
      r.friction = solver.getFrictionVector(s.qd);
      if (!r.tau.allFinite() || !r.inertia_diag.allFinite() ||
          !r.coriolis.allFinite() || !r.gravity.allFinite() ||
          !r.friction.allFinite()) {
        throw NonFiniteResultError("non-finite solver output");
      }
      records.push_back(std::move(r));
    } catch (const Error& e) {
      throw SampleError(k, e);
    }
  }
  return records;
}

ComparisonReport compareTorques(const std::vector<ComputedRecord>& records,
                                const Trajectory& traj) {
  if (records.empty()) throw InputError("no computed samples to compare");
  if (records.size() != traj.samples.size()) {
    throw DimensionError(fmt::format("{} records for {} samples",
                                     records.size(), traj.samples.size()));
  }
  const Eigen::Index dof = records.front().tau.size();
  ComparisonReport report;
  report.sample_count = records.size();
  report.rms = Eigen::VectorXd::Zero(dof);
  report.max_abs = Eigen::VectorXd::Zero(dof);
  report.mean_error = Eigen::VectorXd::Zero(dof);

  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& measured = traj.samples[k].tau_measured;
    if (!measured) {
      throw MissingMeasurementError(
          fmt::format("sample {} has no measured torques", k));
    }
    if (measured->size() != dof) {
      throw DimensionError(fmt::format("sample {}: measured torque size", k));
    }
    const Eigen::VectorXd err = records[k].tau - *measured;
    report.rms += err.cwiseAbs2();
    report.mean_error += err;
    report.max_abs = report.max_abs.cwiseMax(err.cwiseAbs());
  }
  const auto n = static_cast<double>(records.size());
  report.rms = (report.rms / n).cwiseSqrt();
  report.mean_error /= n;
  return report;
}

}  // namespace dynsolve
