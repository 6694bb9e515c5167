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

#include "dynsolve/solver.hpp"

#include <string>
#include <utility>

#include "dynsolve/errors.hpp"

namespace dynsolve {

std::string_view toString(FrictionUnits units) {
  return units == FrictionUnits::Current ? "current" : "torque";
}

InverseDynamicsSolver::InverseDynamicsSolver(KinematicChain chain,
                                             const Eigen::Vector3d& gravity)
    : chain_(std::move(chain)), gravity_(gravity) {}

Eigen::MatrixXd InverseDynamicsSolver::getInertiaMatrix(
    const Eigen::VectorXd& q) const {
  return inertiaMatrix(chain_, q);
}

Eigen::VectorXd InverseDynamicsSolver::getCoriolisVector(
    const Eigen::VectorXd& q, const Eigen::VectorXd& qd) const {
  return coriolisVector(chain_, q, qd);
}

Eigen::VectorXd InverseDynamicsSolver::getFrictionVector(
    const Eigen::VectorXd& qd) const {
  if (qd.size() != dof()) {
    throw DimensionError("qd has " + std::to_string(qd.size()) +
                         " entries, chain has dof " + std::to_string(dof()));
  }
  return Eigen::VectorXd::Zero(dof());
}

Eigen::VectorXd InverseDynamicsSolver::getGravityVector(
    const Eigen::VectorXd& q) const {
  return gravityVector(chain_, gravity_, q);
}

DynamicComponents InverseDynamicsSolver::getDynamicComponents(
    const Eigen::VectorXd& q, const Eigen::VectorXd& qd) const {
  return {getInertiaMatrix(q), getCoriolisVector(q, qd), getGravityVector(q)};
}

Eigen::VectorXd InverseDynamicsSolver::getTorques(
    const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
    const Eigen::VectorXd& qdd) const {
  return rnea(chain_, gravity_, {q, qd, qdd});
}

Eigen::VectorXd InverseDynamicsSolver::getJointCurrents(
    const Eigen::VectorXd&, const Eigen::VectorXd&,
    const Eigen::VectorXd&) const {
  throw UnsupportedOperationError("solver '" + std::string(pluginName()) +
                                  "' does not work at current level");
}

}  // namespace dynsolve
