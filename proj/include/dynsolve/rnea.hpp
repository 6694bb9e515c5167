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

#include <Eigen/Core>

#include "dynsolve/kinematic_chain.hpp"

namespace dynsolve {

/// Joint positions, velocities, and accelerations of a chain.
struct JointState {
  Eigen::VectorXd q;
  Eigen::VectorXd qd;
  Eigen::VectorXd qdd;

  static JointState zero(int dof);
};

/// The rigid-body terms of H(q) qdd + C(q, qd) qd + g(q) = tau.
struct DynamicComponents {
  Eigen::MatrixXd inertia;    ///< H(q)
  Eigen::VectorXd coriolis;   ///< C(q, qd) qd
  Eigen::VectorXd gravity;    ///< g(q)
};

/// Joint torques from the recursive Newton-Euler algorithm, friction
/// excluded. `gravity` is the gravitational acceleration in the root frame,
/// e.g. (0, 0, -9.81).
///
/// Throws DimensionError on length mismatch and InputError on non-finite
/// input.
Eigen::VectorXd rnea(const KinematicChain& chain,
                     const Eigen::Vector3d& gravity, const JointState& state);

/// Same recursion with the chain's inertias replaced by `parameters`, the
/// stacked 10-element standard parameter vectors of each body (see
/// kParamsPerBody). rnea() is this function evaluated at
/// chainParameters(chain).
Eigen::VectorXd rneaWithParameters(const KinematicChain& chain,
                                   const Eigen::VectorXd& parameters,
                                   const Eigen::Vector3d& gravity,
                                   const JointState& state);

/// Stacked standard inertial parameters of every body, about each joint
/// frame origin. Length 10 * dof.
Eigen::VectorXd chainParameters(const KinematicChain& chain);

Eigen::VectorXd gravityVector(const KinematicChain& chain,
                              const Eigen::Vector3d& gravity,
                              const Eigen::VectorXd& q);

Eigen::VectorXd coriolisVector(const KinematicChain& chain,
                               const Eigen::VectorXd& q,
                               const Eigen::VectorXd& qd);

/// Joint-space inertia matrix, one column per unit acceleration. Throws
/// AsymmetryError if the raw columns are not symmetric to 1e-9 relative;
/// the returned matrix is exactly symmetric.
Eigen::MatrixXd inertiaMatrix(const KinematicChain& chain,
                              const Eigen::VectorXd& q);

DynamicComponents dynamicComponents(const KinematicChain& chain,
                                    const Eigen::Vector3d& gravity,
                                    const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qd);

/// Regressor Y(q, qd, qdd) with Y * chainParameters(chain) == rnea(...).
/// Shape dof x (10 * dof).
Eigen::MatrixXd regressorMatrix(const KinematicChain& chain,
                                const Eigen::Vector3d& gravity,
                                const JointState& state);

/// Accelerations solving H(q) qdd = tau - C(q, qd) qd - g(q). Throws
/// SingularInertiaError if H is not positive definite.
Eigen::VectorXd forwardDynamics(const KinematicChain& chain,
                                const Eigen::Vector3d& gravity,
                                const Eigen::VectorXd& q,
                                const Eigen::VectorXd& qd,
                                const Eigen::VectorXd& tau);

}  // namespace dynsolve
