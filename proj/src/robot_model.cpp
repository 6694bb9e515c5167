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

#include "dynsolve/robot_model.hpp"

#include <limits>

#include "dynsolve/errors.hpp"

namespace dynsolve {

std::string_view toString(JointKind kind) {
  switch (kind) {
    case JointKind::Revolute:
      return "revolute";
    case JointKind::Prismatic:
      return "prismatic";
    case JointKind::Fixed:
      return "fixed";
  }
  return "unknown";
}

JointLimits JointLimits::unbounded() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {-inf, inf, inf, inf};
}

Eigen::Matrix3d rpyToRotation(const Eigen::Vector3d& rpy) {
  return (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
      .toRotationMatrix();
}

Eigen::Isometry3d JointSpec::origin() const {
  Eigen::Isometry3d T = Eigen::Isometry3d::Identity();
  T.linear() = rpyToRotation(origin_rpy);
  T.translation() = origin_xyz;
  return T;
}

Eigen::Isometry3d JointSpec::pose(double q) const {
  Eigen::Isometry3d motion = Eigen::Isometry3d::Identity();
  switch (kind) {
    case JointKind::Revolute:
      motion.linear() = Eigen::AngleAxisd(q, axis).toRotationMatrix();
      break;
    case JointKind::Prismatic:
      motion.translation() = q * axis;
      break;
    case JointKind::Fixed:
      break;
  }
  return origin() * motion;
}

const std::string& RobotModel::rootLink() const {
  const std::string* root = nullptr;
  for (const auto& [name, link] : links) {
    if (parentJoint(name) == nullptr) {
      if (root != nullptr) {
        throw ModelError("multiple root links: '" + *root + "' and '" + name +
                         "'");
      }
      root = &name;
    }
  }
  if (root == nullptr) throw ModelError("model has no root link");
  return *root;
}

const JointSpec* RobotModel::parentJoint(const std::string& link) const {
  for (const auto& [name, joint] : joints) {
    if (joint.child == link) return &joint;
  }
  return nullptr;
}

std::vector<const JointSpec*> RobotModel::childJoints(
    const std::string& link) const {
  std::vector<const JointSpec*> out;
  for (const auto& [name, joint] : joints) {
    if (joint.parent == link) out.push_back(&joint);
  }
  return out;
}

bool RobotModel::operator==(const RobotModel& other) const {
  return name == other.name && links == other.links && joints == other.joints;
}

}  // namespace dynsolve
