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

#include "dynsolve/builtin_solvers.hpp"

#include <string>
#include <utility>

#include "dynsolve/errors.hpp"

namespace dynsolve {

FrictionBearingSolver::FrictionBearingSolver(KinematicChain chain,
                                             const Eigen::Vector3d& gravity,
                                             FrictionParams friction,
                                             std::optional<DriveGains> gains,
                                             FrictionUnits units)
    : InverseDynamicsSolver(std::move(chain), gravity),
      friction_(std::move(friction)),
      gains_(std::move(gains)),
      units_(units) {
  if (friction_.size() != dof()) {
    throw ConfigError("friction has " + std::to_string(friction_.size()) +
                      " entries, chain has dof " + std::to_string(dof()));
  }
  if (gains_ && gains_->size() != dof()) {
    throw ConfigError("drive gains have " + std::to_string(gains_->size()) +
                      " entries, chain has dof " + std::to_string(dof()));
  }
  if (units_ == FrictionUnits::Current && !gains_) {
    throw MissingParamError(
        "friction in current units requires drive_gains");
  }
}

Eigen::VectorXd FrictionBearingSolver::getFrictionVector(
    const Eigen::VectorXd& qd) const {
  Eigen::VectorXd f = evalFriction(friction_, qd);
  if (units_ == FrictionUnits::Current) f = torquesFromCurrents(*gains_, f);
  return f;
}

Eigen::VectorXd FrictionBearingSolver::getTorques(
    const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
    const Eigen::VectorXd& qdd) const {
  return InverseDynamicsSolver::getTorques(q, qd, qdd) + getFrictionVector(qd);
}

Eigen::VectorXd CurrentLevelSolver::getJointCurrents(
    const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
    const Eigen::VectorXd& qdd) const {
  return currentsFromTorques(*driveGains(), getTorques(q, qd, qdd));
}

}  // namespace dynsolve
