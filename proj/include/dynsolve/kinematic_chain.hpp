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

#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "dynsolve/robot_model.hpp"
#include "dynsolve/spatial_inertia.hpp"

namespace dynsolve {

/// One movable joint of a serial chain together with the rigid body it moves.
struct ChainJoint {
  std::string name;
  JointKind kind = JointKind::Revolute;  ///< never Fixed
  /// Pose of this joint frame in the predecessor body frame (or the root link
  /// frame for the first joint), with any fixed joints in between folded in.
  Eigen::Isometry3d origin = Eigen::Isometry3d::Identity();
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  /// Composite inertia of everything rigidly moved by this joint, in the
  /// joint frame.
  SpatialInertia inertia;
  JointLimits limits = JointLimits::unbounded();
};

/// Serial chain of movable joints from a root link to a tip link. Fixed
/// joints on (or hanging off) the path are fused into their movable
/// predecessor.
struct KinematicChain {
  std::string root_link;
  std::string tip_link;
  std::vector<ChainJoint> joints;  ///< root to tip
  /// Findings from extraction, e.g. movable side branches that were dropped.
  std::vector<Diagnostic> warnings;

  int dof() const { return static_cast<int>(joints.size()); }

  /// Sum of the composite masses.
  double totalMass() const;

  /// Pose of each joint's body frame in the root frame at configuration q.
  std::vector<Eigen::Isometry3d> bodyPoses(const Eigen::VectorXd& q) const;
};

/// Extract the chain between `root` and `tip`.
///
/// Throws EmptyChainError if root == tip or the path has no movable joint,
/// and ModelError if either link is unknown or tip does not descend from root.
KinematicChain extractChain(const RobotModel& model, const std::string& root,
                            const std::string& tip);

/// Check physical consistency. Returns one diagnostic per violation; an
/// empty list means the chain is usable as-is.
std::vector<Diagnostic> validateChain(const KinematicChain& chain);

}  // namespace dynsolve
