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

// dynsolve: inverse dynamics from the command line.
//
//   dynsolve validate   --urdf PATH [--root L --tip L]
//   dynsolve components --config CFG --q CSV [--qd CSV --qdd CSV]
//   dynsolve trajectory --config CFG --input TRAJ.csv --output REPORT
//                       [--differentiate] [--check-limits] [--format F]
//   dynsolve gen-traj   --dof N --duration S --amplitude A --frequency F
//                       --output TRAJ.csv [--phase P] [--rate HZ]
//
// Exit codes: 0 success, 2 usage, 3 input format, 4 model/config,
// 5 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynsolve/dynsolve.hpp"

namespace {

using namespace dynsolve;

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kInputFormat = 3,
  kModelConfig = 4,
  kNumerical = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exitCodeFor(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Input:
      return kInputFormat;
    case ErrorCategory::Model:
      return kModelConfig;
    case ErrorCategory::Numerical:
      return kNumerical;
  }
  return kInternal;
}

// "0.1, 0.2,0.3" -> vector. An empty string gives an empty vector.
Eigen::VectorXd parseList(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw UsageError(flag + ": invalid number '" + item + "'");
    }
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(),
                                     static_cast<Eigen::Index>(values.size()));
}

// A scalar broadcasts to every joint.
Eigen::VectorXd perJoint(const std::string& text, int dof,
                         const std::string& flag) {
  const Eigen::VectorXd v = parseList(text, flag);
  if (v.size() == 1) return Eigen::VectorXd::Constant(dof, v(0));
  if (v.size() != dof) {
    throw UsageError(flag + " needs 1 or " + std::to_string(dof) + " values");
  }
  return v;
}

std::vector<double> toStd(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

void printDiagnostics(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    std::cout << (d.severity == Severity::Error ? "error" : "warning");
    if (!d.subject.empty()) std::cout << " [" << d.subject << "]";
    std::cout << ": " << d.message << '\n';
  }
}

// ------------------------------------------------------------- validate

struct ValidateArgs {
  std::string urdf;
  std::string root;
  std::string tip;
};

int runValidate(const ValidateArgs& args) {
  if (args.root.empty() != args.tip.empty()) {
    throw UsageError("--root and --tip must be given together");
  }
  const RobotModel model = loadUrdf(args.urdf);
  std::cout << "robot '" << model.name << "': " << model.links.size()
            << " links, " << model.joints.size() << " joints, root '"
            << model.rootLink() << "'\n";
  printDiagnostics(model.diagnostics);
  if (args.root.empty()) return kOk;

  const KinematicChain chain = extractChain(model, args.root, args.tip);
  std::cout << "chain " << chain.root_link << " -> " << chain.tip_link
            << ": dof " << chain.dof() << ", mass " << chain.totalMass()
            << " kg\n";
  for (const auto& j : chain.joints) {
    std::cout << "  " << j.name << " (" << toString(j.kind) << ")\n";
  }
  printDiagnostics(chain.warnings);
  const auto diagnostics = validateChain(chain);
  printDiagnostics(diagnostics);
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::Error) return kModelConfig;
  }
  return kOk;
}

// ----------------------------------------------------------- components

struct ComponentsArgs {
  std::string config;
  std::string q;
  std::string qd;
  std::string qdd;
};

int runComponents(const ComponentsArgs& args) {
  const auto solver = createSolver(loadSolverConfig(args.config));
  const int n = solver->dof();
  const Eigen::VectorXd q = parseList(args.q, "--q");
  const Eigen::VectorXd qd =
      args.qd.empty() ? Eigen::VectorXd::Zero(n) : parseList(args.qd, "--qd");
  const Eigen::VectorXd qdd = args.qdd.empty() ? Eigen::VectorXd::Zero(n)
                                               : parseList(args.qdd, "--qdd");

  const DynamicComponents dc = solver->getDynamicComponents(q, qd);
  const Eigen::VectorXd friction = solver->getFrictionVector(qd);
  const Eigen::VectorXd tau = solver->getTorques(q, qd, qdd);
  if (!dc.inertia.allFinite() || !dc.coriolis.allFinite() ||
      !dc.gravity.allFinite() || !friction.allFinite() || !tau.allFinite()) {
    throw NonFiniteResultError("non-finite solver output");
  }
  nlohmann::ordered_json out;
  out["plugin_name"] = solver->pluginName();
  out["dof"] = n;
  auto& H = out["H"] = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < dc.inertia.rows(); ++r) {
    H.push_back(toStd(dc.inertia.row(r).transpose()));
  }
  out["coriolis"] = toStd(dc.coriolis);
  out["gravity"] = toStd(dc.gravity);
  out["friction"] = toStd(friction);
  out["tau"] = toStd(tau);
  std::cout << out.dump(2) << '\n';
  return kOk;
}

// ----------------------------------------------------------- trajectory

struct TrajectoryArgs {
  std::string config;
  std::string input;
  std::string output;
  std::string format = "both";
  bool differentiate = false;
  bool check_limits = false;
};

int runTrajectory(const TrajectoryArgs& args) {
  const ReportFormat format = args.format == "csv"    ? ReportFormat::Csv
                              : args.format == "json" ? ReportFormat::Json
                                                      : ReportFormat::Both;
  const SolverConfig config = loadSolverConfig(args.config);
  const auto solver = createSolver(config);

  const Trajectory traj = measuredAsTorques(
      loadTrajectory(args.input, solver->dof(), {args.differentiate}),
      solver->driveGains());

  if (args.check_limits) {
    const auto violations = checkLimits(solver->chain(), traj);
    for (const auto& v : violations) std::cerr << "limit: " << v << '\n';
    if (!violations.empty()) {
      std::cerr << violations.size() << " joint limit violation(s)\n";
      return kInputFormat;
    }
  }

  const auto records = computeAlongTrajectory(*solver, traj);
  std::optional<ComparisonReport> comparison;
  if (traj.hasMeasurements()) comparison = compareTorques(records, traj);

  const ReportPaths paths = emitReport(records, traj, comparison,
                                       configToJson(config), args.output,
                                       format);
  std::cout << records.size() << " samples, plugin '" << solver->pluginName()
            << "'\n";
  if (comparison) {
    for (Eigen::Index j = 0; j < comparison->rms.size(); ++j) {
      std::cout << "  joint " << j << ": rms " << comparison->rms(j)
                << ", max " << comparison->max_abs(j) << '\n';
    }
  }
  if (paths.csv) std::cout << "wrote " << paths.csv->string() << '\n';
  if (paths.json) std::cout << "wrote " << paths.json->string() << '\n';
  return kOk;
}

// ------------------------------------------------------------- gen-traj

struct GenTrajArgs {
  int dof = 0;
  double duration = 0.0;
  double rate = 100.0;
  std::string amplitude;
  std::string frequency;
  std::string phase = "0";
  std::string output;
};

int runGenTraj(const GenTrajArgs& args) {
  if (args.dof < 1) throw UsageError("--dof must be at least 1");
  SinusoidSpec spec;
  spec.dof = args.dof;
  spec.duration = args.duration;
  spec.rate = args.rate;
  spec.amplitude = perJoint(args.amplitude, args.dof, "--amplitude");
  spec.frequency = perJoint(args.frequency, args.dof, "--frequency");
  spec.phase = perJoint(args.phase, args.dof, "--phase");
  const Trajectory traj = generateSinusoid(spec);

  std::ofstream out(args.output);
  if (!out) throw IoError("cannot write '" + args.output + "'");
  writeTrajectory(out, traj);
  if (!out) throw IoError("failed writing '" + args.output + "'");
  std::cout << "wrote " << traj.samples.size() << " samples to "
            << args.output << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynsolve: rigid-body inverse dynamics toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ValidateArgs validate;
  auto* cmd_validate =
      app.add_subcommand("validate", "Parse a URDF and check a chain");
  cmd_validate->add_option("--urdf", validate.urdf, "URDF file")->required();
  cmd_validate->add_option("--root", validate.root, "Chain root link");
  cmd_validate->add_option("--tip", validate.tip, "Chain tip link");

  ComponentsArgs components;
  auto* cmd_components = app.add_subcommand(
      "components", "Print H, C qd, g, f and tau at one state as JSON");
  cmd_components->add_option("--config", components.config, "Solver config")
      ->required();
  cmd_components->add_option("--q", components.q, "Positions, comma list")
      ->required();
  cmd_components->add_option("--qd", components.qd, "Velocities, comma list");
  cmd_components->add_option("--qdd", components.qdd,
                             "Accelerations, comma list");

  TrajectoryArgs trajectory;
  auto* cmd_trajectory = app.add_subcommand(
      "trajectory", "Compute torques along a trajectory file");
  cmd_trajectory->add_option("--config", trajectory.config, "Solver config")
      ->required();
  cmd_trajectory->add_option("--input", trajectory.input, "Trajectory CSV")
      ->required();
  cmd_trajectory->add_option("--output", trajectory.output,
                             "Report path (prefix when --format both)")
      ->required();
  cmd_trajectory->add_option("--format", trajectory.format,
                             "csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  cmd_trajectory->add_flag("--differentiate", trajectory.differentiate,
                           "Estimate qdd from qd when the file lacks it");
  cmd_trajectory->add_flag("--check-limits", trajectory.check_limits,
                           "Fail if any position violates joint limits");

  GenTrajArgs gen;
  auto* cmd_gen = app.add_subcommand(
      "gen-traj", "Write a sinusoidal excitation trajectory");
  cmd_gen->add_option("--dof", gen.dof, "Number of joints")->required();
  cmd_gen->add_option("--duration", gen.duration, "Duration, s")->required();
  cmd_gen->add_option("--amplitude", gen.amplitude,
                      "Amplitude, one value or one per joint")
      ->required();
  cmd_gen->add_option("--frequency", gen.frequency,
                      "Frequency in Hz, one value or one per joint")
      ->required();
  cmd_gen->add_option("--phase", gen.phase,
                      "Phase in rad, one value or one per joint");
  cmd_gen->add_option("--rate", gen.rate, "Sample rate, Hz");
  cmd_gen->add_option("--output", gen.output, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_validate) return runValidate(validate);
    if (*cmd_components) return runComponents(components);
    if (*cmd_trajectory) return runTrajectory(trajectory);
    if (*cmd_gen) return runGenTraj(gen);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exitCodeFor(e.category());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
