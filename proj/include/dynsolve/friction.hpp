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

#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace dynsolve {

struct NoFriction {
  bool operator==(const NoFriction&) const = default;
};

/// f = viscous * qd + coulomb * tanh(qd / smoothing).
struct ViscousCoulomb {
  double viscous = 0.0;      ///< N m s / rad, >= 0
  double coulomb = 0.0;      ///< N m, >= 0
  double smoothing = 1e-3;   ///< boundary-layer velocity, rad/s, > 0

  bool operator==(const ViscousCoulomb&) const = default;
};

/// f = phi1 / (1 + exp(-phi2 (qd + phi3))) - phi1 / (1 + exp(-phi2 phi3)).
/// The second term pins f(0) to exactly zero.
struct AsymmetricSigmoid {
  double phi1 = 0.0;  ///< N m
  double phi2 = 0.0;  ///< s / rad
  double phi3 = 0.0;  ///< rad / s

  bool operator==(const AsymmetricSigmoid&) const = default;
};

using JointFriction = std::variant<NoFriction, ViscousCoulomb, AsymmetricSigmoid>;

/// Model name as used in configuration files: "none", "viscous-coulomb",
/// "asymmetric-sigmoid".
std::string_view frictionModelName(const JointFriction& model);

/// Throws InputError if the parameters are outside the model's domain.
void validateFriction(const JointFriction& model);

double evalJointFriction(const JointFriction& model, double qd);

/// One friction model per chain joint.
struct FrictionParams {
  std::vector<JointFriction> joints;

  static FrictionParams none(int dof);
  int size() const { return static_cast<int>(joints.size()); }
};

/// Per-joint friction torques. Throws DimensionError on length mismatch and
/// InputError on non-finite velocities.
Eigen::VectorXd evalFriction(const FrictionParams& params,
                             const Eigen::VectorXd& qd);

/// Diagonal current-to-torque gains, N m / A, strictly positive.
class DriveGains {
 public:
  /// Throws InputError unless every gain is finite and > 0.
  explicit DriveGains(Eigen::VectorXd gains);

  const Eigen::VectorXd& values() const { return gains_; }
  int size() const { return static_cast<int>(gains_.size()); }

 private:
  Eigen::VectorXd gains_;
};

Eigen::MatrixXd driveGainsMatrix(const DriveGains& gains);

Eigen::VectorXd torquesFromCurrents(const DriveGains& gains,
                                    const Eigen::VectorXd& currents);

Eigen::VectorXd currentsFromTorques(const DriveGains& gains,
                                    const Eigen::VectorXd& torques);

}  // namespace dynsolve
