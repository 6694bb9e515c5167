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
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "dynsolve/friction.hpp"
#include "dynsolve/kinematic_chain.hpp"
#include "dynsolve/rnea.hpp"

namespace dynsolve {

/// Whether friction parameters produce torques directly or motor currents
/// that must pass through the drive gains.
enum class FrictionUnits { Torque, Current };

std::string_view toString(FrictionUnits units);

/// Everything needed to build a solver. `robot_description` holds URDF text;
/// `robot_description_path` only records where it came from.
struct SolverConfig {
  std::string plugin_name;
  std::string robot_description;
  std::string robot_description_path;
  std::string root;
  std::string tip;
  Eigen::Vector3d gravity = Eigen::Vector3d(0.0, 0.0, -9.81);
  std::optional<FrictionParams> friction;
  std::optional<DriveGains> drive_gains;
  std::optional<FrictionUnits> friction_units;
};

/// Abstract inverse dynamics solver bound to one chain and gravity vector.
///
/// The rigid-body terms default to the recursive Newton-Euler implementation;
/// friction defaults to zero and getTorques() to H qdd + C qd + g. Solvers
/// carrying a friction model override getFrictionVector() and getTorques().
///
/// Instances are immutable; all methods are safe to call concurrently.
class InverseDynamicsSolver {
 public:
  virtual ~InverseDynamicsSolver() = default;

  InverseDynamicsSolver(const InverseDynamicsSolver&) = delete;
  InverseDynamicsSolver& operator=(const InverseDynamicsSolver&) = delete;

  virtual std::string_view pluginName() const = 0;

  int dof() const { return chain_.dof(); }
  const KinematicChain& chain() const { return chain_; }
  const Eigen::Vector3d& gravity() const { return gravity_; }

  /// Drive gains bound to this solver, if any.
  virtual const DriveGains* driveGains() const { return nullptr; }

  virtual Eigen::MatrixXd getInertiaMatrix(const Eigen::VectorXd& q) const;
  virtual Eigen::VectorXd getCoriolisVector(const Eigen::VectorXd& q,
                                            const Eigen::VectorXd& qd) const;
  virtual Eigen::VectorXd getFrictionVector(const Eigen::VectorXd& qd) const;
  virtual Eigen::VectorXd getGravityVector(const Eigen::VectorXd& q) const;

  /// (H, C qd, g) from the three individual getters. Friction is excluded.
  virtual DynamicComponents getDynamicComponents(
      const Eigen::VectorXd& q, const Eigen::VectorXd& qd) const;

  virtual Eigen::VectorXd getTorques(const Eigen::VectorXd& q,
                                     const Eigen::VectorXd& qd,
                                     const Eigen::VectorXd& qdd) const;

  /// Motor currents producing getTorques(). Only current-level solvers
  /// implement this; the default throws UnsupportedOperationError.
  virtual Eigen::VectorXd getJointCurrents(const Eigen::VectorXd& q,
                                           const Eigen::VectorXd& qd,
                                           const Eigen::VectorXd& qdd) const;

 protected:
  InverseDynamicsSolver(KinematicChain chain, const Eigen::Vector3d& gravity);

 private:
  const KinematicChain chain_;
  const Eigen::Vector3d gravity_;
};

}  // namespace dynsolve
