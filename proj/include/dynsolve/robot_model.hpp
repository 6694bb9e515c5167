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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "dynsolve/spatial_inertia.hpp"

namespace dynsolve {

enum class Severity { Warning, Error };

struct Diagnostic {
  Severity severity;
  std::string subject;  ///< joint or link name, may be empty
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

enum class JointKind { Revolute, Prismatic, Fixed };

std::string_view toString(JointKind kind);

struct JointLimits {
  double lower;
  double upper;
  double velocity;
  double effort;

  static JointLimits unbounded();

  bool operator==(const JointLimits&) const = default;
};

/// Rotation from fixed-axis roll/pitch/yaw: Rz(yaw) * Ry(pitch) * Rx(roll).
Eigen::Matrix3d rpyToRotation(const Eigen::Vector3d& rpy);

struct JointSpec {
  std::string name;
  JointKind kind = JointKind::Fixed;
  std::string parent;
  std::string child;
  Eigen::Vector3d origin_xyz = Eigen::Vector3d::Zero();
  Eigen::Vector3d origin_rpy = Eigen::Vector3d::Zero();
  Eigen::Vector3d axis = Eigen::Vector3d::UnitX();  ///< unit, joint frame
  JointLimits limits = JointLimits::unbounded();

  /// Pose of the joint frame (= child link frame at zero displacement) in
  /// the parent link frame.
  Eigen::Isometry3d origin() const;

  /// Pose of the child link frame in the parent link frame at displacement q.
  /// Fixed joints ignore q.
  Eigen::Isometry3d pose(double q) const;

  bool operator==(const JointSpec&) const = default;
};

struct LinkSpec {
  std::string name;
  SpatialInertia inertia;  ///< in the link frame, about the link COM

  bool operator==(const LinkSpec&) const = default;
};

/// A parsed robot description: a tree of links connected by joints.
struct RobotModel {
  std::string name;
  std::map<std::string, LinkSpec> links;
  std::map<std::string, JointSpec> joints;
  /// Non-fatal findings from parsing. Not part of model identity.
  std::vector<Diagnostic> diagnostics;

  /// The unique link that is no joint's child.
  const std::string& rootLink() const;

  /// Joint whose child is `link`, or nullptr for the root.
  const JointSpec* parentJoint(const std::string& link) const;

  /// Joints whose parent is `link`, in name order.
  std::vector<const JointSpec*> childJoints(const std::string& link) const;

  bool operator==(const RobotModel& other) const;
};

/// Parse a URDF document.
///
/// Supported subset: <link> with optional <inertial> (origin, mass, inertia)
/// and <joint> of type revolute, continuous, prismatic, or fixed with origin,
/// axis, and limit. Other elements are skipped.
///
/// Throws ParseError for malformed XML, UnsupportedJointError for other
/// joint types, ModelError for structural problems (dangling references,
/// duplicate names, cycles, multiple roots, unphysical inertia).
RobotModel parseUrdf(std::string_view xml);

/// Read and parse a URDF file. Throws IoError if the file cannot be read.
RobotModel loadUrdf(const std::string& path);

/// Serialize a model to URDF. parseUrdf(writeUrdf(m)) == m.
std::string writeUrdf(const RobotModel& model);

}  // namespace dynsolve
