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

#include <optional>
#include <string_view>
#include <utility>

#include "dynsolve/solver.hpp"

namespace dynsolve {

/// Model-based solver driven entirely by the robot description. Friction is
/// ignored: getFrictionVector() is zero and getTorques() is friction-free.
class GenericSolver : public InverseDynamicsSolver {
 public:
  static constexpr std::string_view kName = "generic";

  GenericSolver(KinematicChain chain, const Eigen::Vector3d& gravity)
      : InverseDynamicsSolver(std::move(chain), gravity) {}

  std::string_view pluginName() const override { return kName; }
};

/// Common base of solvers carrying a per-joint friction model. getTorques()
/// adds getFrictionVector() to the rigid-body torque.
class FrictionBearingSolver : public InverseDynamicsSolver {
 public:
  const DriveGains* driveGains() const override {
    return gains_ ? &*gains_ : nullptr;
  }
  const FrictionParams& friction() const { return friction_; }
  FrictionUnits frictionUnits() const { return units_; }

  /// Friction torque. Current-unit models are scaled by the drive gains.
  Eigen::VectorXd getFrictionVector(const Eigen::VectorXd& qd) const override;

  Eigen::VectorXd getTorques(const Eigen::VectorXd& q,
                             const Eigen::VectorXd& qd,
                             const Eigen::VectorXd& qdd) const override;

 protected:
  /// Throws MissingParamError if units are Current and no gains are given.
  FrictionBearingSolver(KinematicChain chain, const Eigen::Vector3d& gravity,
                        FrictionParams friction,
                        std::optional<DriveGains> gains, FrictionUnits units);

 private:
  const FrictionParams friction_;
  const std::optional<DriveGains> gains_;
  const FrictionUnits units_;
};

/// Solver for robots identified at motor-current level. Requires drive
/// gains; exposes the currents behind every torque.
class CurrentLevelSolver : public FrictionBearingSolver {
 public:
  static constexpr std::string_view kName = "ur10-current";

  CurrentLevelSolver(KinematicChain chain, const Eigen::Vector3d& gravity,
                     FrictionParams friction, DriveGains gains,
                     FrictionUnits units)
      : FrictionBearingSolver(std::move(chain), gravity, std::move(friction),
                              std::move(gains), units) {}

  std::string_view pluginName() const override { return kName; }

  Eigen::MatrixXd getDriveGainsMatrix() const {
    return driveGainsMatrix(*driveGains());
  }

  Eigen::VectorXd getJointCurrents(const Eigen::VectorXd& q,
                                   const Eigen::VectorXd& qd,
                                   const Eigen::VectorXd& qdd) const override;
};

/// Solver with an explicit nonlinear friction model evaluated in torque
/// units (or current units, if drive gains are supplied).
class FrictionModelSolver : public FrictionBearingSolver {
 public:
  static constexpr std::string_view kName = "franka-friction";

  FrictionModelSolver(KinematicChain chain, const Eigen::Vector3d& gravity,
                      FrictionParams friction, std::optional<DriveGains> gains,
                      FrictionUnits units)
      : FrictionBearingSolver(std::move(chain), gravity, std::move(friction),
                              std::move(gains), units) {}

  std::string_view pluginName() const override { return kName; }
};

}  // namespace dynsolve
