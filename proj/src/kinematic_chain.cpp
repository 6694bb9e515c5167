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

#include "dynsolve/kinematic_chain.hpp"

#include <algorithm>
#include <cmath>

#include "dynsolve/errors.hpp"

namespace dynsolve {
namespace {

constexpr double kAxisTolerance = 1e-9;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kEigenTolerance = 1e-9;

Eigen::Isometry3d jointMotion(JointKind kind, const Eigen::Vector3d& axis,
                              double q) {
  Eigen::Isometry3d m = Eigen::Isometry3d::Identity();
  if (kind == JointKind::Revolute) {
    m.linear() = Eigen::AngleAxisd(q, axis).toRotationMatrix();
  } else if (kind == JointKind::Prismatic) {
    m.translation() = q * axis;
  }
  return m;
}

// Joints from root to tip, or ModelError if tip does not descend from root.
std::vector<const JointSpec*> pathJoints(const RobotModel& model,
                                         const std::string& root,
                                         const std::string& tip) {
  std::vector<const JointSpec*> path;
  std::string link = tip;
  while (link != root) {
    const JointSpec* j = model.parentJoint(link);
    if (j == nullptr) {
      throw ModelError("tip '" + tip + "' is not reachable from root '" +
                       root + "'");
    }
    path.push_back(j);
    link = j->parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

class ChainBuilder {
 public:
  explicit ChainBuilder(const RobotModel& model) : model_(model) {}

  KinematicChain build(const std::string& root, const std::string& tip) {
    chain_.root_link = root;
    chain_.tip_link = tip;
    const auto path = pathJoints(model_, root, tip);

    // Pose of the current path link in the frame of the current body (the
    // last movable joint's frame, or the root link frame before any).
    Eigen::Isometry3d link_in_body = Eigen::Isometry3d::Identity();
    attach(root, link_in_body, path.empty() ? nullptr : path.front());
    for (std::size_t i = 0; i < path.size(); ++i) {
      const JointSpec& joint = *path[i];
      const JointSpec* next = i + 1 < path.size() ? path[i + 1] : nullptr;
      if (joint.kind == JointKind::Fixed) {
        link_in_body = link_in_body * joint.origin();
      } else {
        ChainJoint entry;
        entry.name = joint.name;
        entry.kind = joint.kind;
        entry.origin = link_in_body * joint.origin();
        entry.axis = joint.axis;
        entry.limits = joint.limits;
        chain_.joints.push_back(std::move(entry));
        link_in_body = Eigen::Isometry3d::Identity();
      }
      attach(joint.child, link_in_body, next);
    }

    if (chain_.joints.empty()) {
      throw EmptyChainError("no movable joint between '" + root + "' and '" +
                            tip + "'");
    }
    return std::move(chain_);
  }

 private:
  // Fuse `link` and its rigidly attached side branches into the current body.
  // Links before the first movable joint are static and contribute nothing.
  void attach(const std::string& link, const Eigen::Isometry3d& link_in_body,
              const JointSpec* next_on_path) {
    const bool moving = !chain_.joints.empty();
    if (moving) {
      chain_.joints.back().inertia +=
          model_.links.at(link).inertia.transformed(link_in_body);
    }
    for (const JointSpec* child : model_.childJoints(link)) {
      if (child == next_on_path) continue;
      if (child->kind == JointKind::Fixed) {
        attach(child->child, link_in_body * child->origin(), nullptr);
      } else {
        chain_.warnings.push_back(
            {Severity::Warning, child->name,
             "movable branch joint '" + child->name +
                 "' is not on the chain; its subtree is excluded"});
      }
    }
  }

  const RobotModel& model_;
  KinematicChain chain_;
};

}  // namespace

double KinematicChain::totalMass() const {
  double m = 0.0;
  for (const auto& j : joints) m += j.inertia.mass();
  return m;
}

std::vector<Eigen::Isometry3d> KinematicChain::bodyPoses(
    const Eigen::VectorXd& q) const {
  if (q.size() != dof()) {
    throw DimensionError("configuration has " + std::to_string(q.size()) +
                         " entries, chain has dof " + std::to_string(dof()));
  }
  std::vector<Eigen::Isometry3d> poses;
  poses.reserve(joints.size());
  Eigen::Isometry3d T = Eigen::Isometry3d::Identity();
  for (int i = 0; i < dof(); ++i) {
    const ChainJoint& j = joints[static_cast<std::size_t>(i)];
    T = T * j.origin * jointMotion(j.kind, j.axis, q(i));
    poses.push_back(T);
  }
  return poses;
}

KinematicChain extractChain(const RobotModel& model, const std::string& root,
                            const std::string& tip) {
  for (const auto* link : {&root, &tip}) {
    if (!model.links.contains(*link)) {
      throw ModelError("unknown link '" + *link + "'");
    }
  }
  if (root == tip) {
    throw EmptyChainError("root and tip are the same link '" + root + "'");
  }
  return ChainBuilder(model).build(root, tip);
}

std::vector<Diagnostic> validateChain(const KinematicChain& chain) {
  std::vector<Diagnostic> out;
  auto error = [&](const std::string& subject, std::string message) {
    out.push_back({Severity::Error, subject, std::move(message)});
  };

  if (chain.dof() < 1) error("", "chain has no movable joints");

  for (const ChainJoint& j : chain.joints) {
    if (j.kind == JointKind::Fixed) error(j.name, "fixed joint in chain");
    if (!j.origin.matrix().allFinite()) {
      error(j.name, "non-finite joint origin");
    }
    if (!j.axis.allFinite() ||
        std::abs(j.axis.norm() - 1.0) > kAxisTolerance) {
      error(j.name, "axis is not a unit vector");
    }

    const SpatialInertia& si = j.inertia;
    if (!std::isfinite(si.mass()) || !si.com().allFinite() ||
        !si.inertia().allFinite()) {
      error(j.name, "non-finite inertial parameters");
      continue;
    }
    if (si.mass() < 0.0) {
      error(j.name, "negative mass");
    } else if (si.mass() == 0.0) {
      out.push_back({Severity::Warning, j.name, "zero-mass body"});
    }
    const Eigen::Matrix3d& I = si.inertia();
    if ((I - I.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
      error(j.name, "inertia tensor is not symmetric");
    }
    if (si.minEigenvalue() < -kEigenTolerance) {
      error(j.name, "inertia tensor has a negative eigenvalue");
    }
  }
  return out;
}

}  // namespace dynsolve
