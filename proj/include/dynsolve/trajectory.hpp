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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dynsolve/errors.hpp"
#include "dynsolve/solver.hpp"

namespace dynsolve {

/// Units of the measured columns of a trajectory file.
enum class MeasurementUnits { Torque, Current };

struct TrajectorySample {
  double t = 0.0;
  Eigen::VectorXd q;
  Eigen::VectorXd qd;
  Eigen::VectorXd qdd;
  std::optional<Eigen::VectorXd> tau_measured;
};

struct Trajectory {
  int dof = 0;
  MeasurementUnits units = MeasurementUnits::Torque;
  /// False when accelerations were obtained by differentiating velocities.
  bool accelerations_from_file = true;
  std::vector<TrajectorySample> samples;

  bool hasMeasurements() const;
};

struct TrajectoryLoadOptions {
  /// Estimate qdd from qd by finite differences when the qdd block is absent.
  bool differentiate = false;
};

/// Parse trajectory CSV:
///
///   # optional comments; "# units=torque" or "# units=current"
///   t,q0,..,q{n-1},qd0,..,qd{n-1}[,qdd0,..,qdd{n-1}][,tau0,..,tau{n-1}]
///
/// Row numbers in errors are 1-based physical line numbers. Throws
/// FormatError, DimensionError (block width differs from expected_dof), or
/// NonMonotonicTimeError.
Trajectory parseTrajectory(std::istream& in, int expected_dof,
                           const TrajectoryLoadOptions& options = {});

/// Throws IoError if the file cannot be opened.
Trajectory loadTrajectory(const std::filesystem::path& path, int expected_dof,
                          const TrajectoryLoadOptions& options = {});

/// Write in the format accepted by parseTrajectory(), full double precision.
void writeTrajectory(std::ostream& out, const Trajectory& trajectory);

/// Convert measured columns to torque units. Current-unit measurements need
/// drive gains; throws MissingParamError if `gains` is null in that case.
Trajectory measuredAsTorques(Trajectory trajectory, const DriveGains* gains);

struct SinusoidSpec {
  int dof = 1;
  double duration = 1.0;     ///< s
  double rate = 100.0;       ///< samples per second
  Eigen::VectorXd amplitude; ///< per joint, rad or m
  Eigen::VectorXd frequency; ///< per joint, Hz
  Eigen::VectorXd phase;     ///< per joint, rad
};

/// q_j(t) = A_j sin(2 pi f_j t + phase_j) with analytic qd and qdd, sampled
/// at t = k / rate for k = 0 .. floor(duration * rate).
Trajectory generateSinusoid(const SinusoidSpec& spec);

/// Positions outside the chain's joint limits, one message per violation.
std::vector<std::string> checkLimits(const KinematicChain& chain,
                                     const Trajectory& trajectory);

/// Solver outputs at one trajectory sample.
struct ComputedRecord {
  double t = 0.0;
  Eigen::VectorXd tau;           ///< getTorques()
  Eigen::VectorXd inertia_diag;  ///< diagonal of H(q)
  Eigen::VectorXd coriolis;
  Eigen::VectorXd gravity;
  Eigen::VectorXd friction;
};

/// Error raised while evaluating one sample; keeps the category of the
/// underlying error.
class SampleError : public Error {
 public:
  SampleError(std::size_t index, const Error& cause);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Evaluate the solver at every sample. Throws DimensionError if the solver
/// dof differs from the trajectory's and SampleError for failures inside
/// the solver.
std::vector<ComputedRecord> computeAlongTrajectory(
    const InverseDynamicsSolver& solver, const Trajectory& trajectory);

struct ComparisonReport {
  Eigen::VectorXd rms;         ///< per joint, of computed - measured
  Eigen::VectorXd max_abs;     ///< per joint
  Eigen::VectorXd mean_error;  ///< per joint
  std::size_t sample_count = 0;
};

/// Per-joint error statistics of computed minus measured torque. Throws
/// MissingMeasurementError if any sample lacks measurements.
ComparisonReport compareTorques(const std::vector<ComputedRecord>& records,
                                const Trajectory& trajectory);

}  // namespace dynsolve
