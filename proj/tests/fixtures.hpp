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

// Shared test fixtures: small URDF robots, random model generators, and
// closed-form Lagrangian models used as independent oracles.

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "dynsolve/dynsolve.hpp"

namespace dynsolve::testing {

inline constexpr double kG0 = 9.81;

/// Gravity along -y: the planar fixtures move in the x-y plane.
inline const Eigen::Vector3d kPlanarGravity(0.0, -kG0, 0.0);

/// One revolute joint about z at the root; point mass 1 kg at (1, 0, 0).
inline std::string pendulumUrdf() {
  return R"(<?xml version="1.0"?>
<robot name="pendulum">
  <link name="base_link"/>
  <link name="link1">
    <inertial>
      <origin xyz="1 0 0" rpy="0 0 0"/>
      <mass value="1.0"/>
      <inertia ixx="0" ixy="0" ixz="0" iyy="0" iyz="0" izz="0"/>
    </inertial>
  </link>
  <joint name="joint1" type="revolute">
    <parent link="base_link"/>
    <child link="link1"/>
    <origin xyz="0 0 0" rpy="0 0 0"/>
    <axis xyz="0 0 1"/>
    <limit lower="-3.2" upper="3.2" effort="100" velocity="10"/>
  </joint>
</robot>
)";
}

/// Planar two-link arm: unit lengths, unit point masses at the distal end of
/// each link, both joints about z.
inline std::string planarArmUrdf() {
  return R"(<?xml version="1.0"?>
<robot name="planar2">
  <link name="base_link"/>
  <link name="link1">
    <inertial>
      <origin xyz="1 0 0"/>
      <mass value="1.0"/>
      <inertia ixx="0" ixy="0" ixz="0" iyy="0" iyz="0" izz="0"/>
    </inertial>
    <visual><geometry><box size="1 0.1 0.1"/></geometry></visual>
  </link>
  <link name="link2">
    <inertial>
      <origin xyz="1 0 0"/>
      <mass value="1.0"/>
      <inertia ixx="0" ixy="0" ixz="0" iyy="0" iyz="0" izz="0"/>
    </inertial>
  </link>
  <joint name="joint1" type="continuous">
    <parent link="base_link"/>
    <child link="link1"/>
    <axis xyz="0 0 1"/>
  </joint>
  <joint name="joint2" type="continuous">
    <parent link="link1"/>
    <child link="link2"/>
    <origin xyz="1 0 0"/>
    <axis xyz="0 0 1"/>
  </joint>
</robot>
)";
}

inline KinematicChain pendulumChain() {
  return extractChain(parseUrdf(pendulumUrdf()), "base_link", "link1");
}

inline KinematicChain planarArmChain() {
  return extractChain(parseUrdf(planarArmUrdf()), "base_link", "link2");
}

// ------------------------------------------------------------ oracles

/// Point-mass pendulum, mass m at distance l, gravity g0 along -y.
inline double pendulumTorque(double q, double qdd, double m = 1.0,
                             double l = 1.0, double g0 = kG0) {
  return m * g0 * l * std::cos(q) + m * l * l * qdd;
}

/// Closed-form two-link planar arm with point masses at the link tips.
struct TwoLinkOracle {
  double m1 = 1.0, m2 = 1.0, l1 = 1.0, l2 = 1.0, g0 = kG0;

  Eigen::Matrix2d inertia(const Eigen::Vector2d& q) const {
    const double c2 = std::cos(q(1));
    Eigen::Matrix2d H;
    H(0, 0) = m1 * l1 * l1 + m2 * (l1 * l1 + l2 * l2 + 2 * l1 * l2 * c2);
    H(0, 1) = H(1, 0) = m2 * (l2 * l2 + l1 * l2 * c2);
    H(1, 1) = m2 * l2 * l2;
    return H;
  }

  Eigen::Vector2d coriolis(const Eigen::Vector2d& q,
                           const Eigen::Vector2d& qd) const {
    const double h = -m2 * l1 * l2 * std::sin(q(1));
    return {h * (2 * qd(0) * qd(1) + qd(1) * qd(1)), -h * qd(0) * qd(0)};
  }

  Eigen::Vector2d gravity(const Eigen::Vector2d& q) const {
    const double c1 = std::cos(q(0));
    const double c12 = std::cos(q(0) + q(1));
    return {(m1 + m2) * g0 * l1 * c1 + m2 * g0 * l2 * c12,
            m2 * g0 * l2 * c12};
  }

  Eigen::Vector2d torque(const Eigen::Vector2d& q, const Eigen::Vector2d& qd,
                         const Eigen::Vector2d& qdd) const {
    return inertia(q) * qdd + coriolis(q, qd) + gravity(q);
  }
};

// ----------------------------------------------------- random models

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::VectorXd uniformVector(Rng& rng, int n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(rng, lo, hi);
  return v;
}

inline Eigen::Vector3d uniformVector3(Rng& rng, double lo, double hi) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Eigen::Vector3d randomUnit(Rng& rng) {
  Eigen::Vector3d v;
  do {
    v = uniformVector3(rng, -1.0, 1.0);
  } while (v.norm() < 0.1 || v.norm() > 1.0);
  return v.normalized();
}

inline Eigen::Matrix3d randomRotation(Rng& rng) {
  return Eigen::AngleAxisd(uniform(rng, -std::numbers::pi, std::numbers::pi),
                           randomUnit(rng))
      .toRotationMatrix();
}

/// Physically valid inertia: positive mass, positive-definite tensor built
/// from positive second moments (so the triangle inequality holds).
inline SpatialInertia randomInertia(Rng& rng) {
  const double m = uniform(rng, 0.5, 3.0);
  const Eigen::Vector3d s = uniformVector3(rng, 0.005, 0.05) * m;
  const Eigen::Vector3d principal(s.y() + s.z(), s.x() + s.z(), s.x() + s.y());
  const Eigen::Matrix3d R = randomRotation(rng);
  return {m, uniformVector3(rng, -0.3, 0.3),
          R * principal.asDiagonal() * R.transpose()};
}

struct RandomModelOptions {
  int dof = 3;
  bool fixed_joints = false;     ///< fixed joints interleaved on the path
  bool side_branches = false;    ///< fixed and movable side branches
  bool prismatic = false;        ///< allow prismatic joints
};

/// Random serial robot "base" -> ... -> "tip" with `dof` movable joints.
inline RobotModel randomModel(Rng& rng, const RandomModelOptions& opt) {
  RobotModel model;
  model.name = "random";
  int counter = 0;
  auto addLink = [&](const std::string& name) {
    model.links[name] = LinkSpec{name, randomInertia(rng)};
  };
  auto addJoint = [&](const std::string& parent, const std::string& child,
                      JointKind kind) {
    JointSpec j;
    j.name = "j" + std::to_string(counter++) + "_" + child;
    j.kind = kind;
    j.parent = parent;
    j.child = child;
    j.origin_xyz = uniformVector3(rng, -0.5, 0.5);
    j.origin_rpy = uniformVector3(rng, -std::numbers::pi, std::numbers::pi);
    j.axis = randomUnit(rng);
    j.limits = {-2.0, 2.0, 5.0, 100.0};
    model.joints[j.name] = j;
  };

  std::string parent = "base";
  addLink(parent);
  int movable = 0;
  int link_id = 0;
  while (movable < opt.dof) {
    const bool fixed = opt.fixed_joints && uniform(rng, 0, 1) < 0.35;
    const std::string child =
        movable + 1 == opt.dof && !fixed ? "tip"
                                         : "l" + std::to_string(link_id++);
    addLink(child);
    JointKind kind = JointKind::Revolute;
    if (fixed) {
      kind = JointKind::Fixed;
    } else {
      if (opt.prismatic && uniform(rng, 0, 1) < 0.3) kind = JointKind::Prismatic;
      ++movable;
    }
    addJoint(parent, child, kind);

    if (opt.side_branches && uniform(rng, 0, 1) < 0.5) {
      const std::string fixed_branch = "fb" + std::to_string(link_id++);
      addLink(fixed_branch);
      addJoint(child, fixed_branch, JointKind::Fixed);
      const std::string grand = "fb" + std::to_string(link_id++);
      addLink(grand);
      addJoint(fixed_branch, grand, JointKind::Fixed);
    }
    if (opt.side_branches && uniform(rng, 0, 1) < 0.3) {
      const std::string moving_branch = "mb" + std::to_string(link_id++);
      addLink(moving_branch);
      addJoint(child, moving_branch, JointKind::Revolute);
    }
    parent = child;
  }
  if (opt.fixed_joints) {
    // A fixed tool beyond the tip.
    addLink("tool");
    addJoint("tip", "tool", JointKind::Fixed);
  }
  return model;
}

inline KinematicChain randomChain(Rng& rng, const RandomModelOptions& opt) {
  return extractChain(randomModel(rng, opt), "base", "tip");
}

inline JointState randomState(Rng& rng, int dof, double q_range = std::numbers::pi,
                              double rate_range = 5.0) {
  return {uniformVector(rng, dof, -q_range, q_range),
          uniformVector(rng, dof, -rate_range, rate_range),
          uniformVector(rng, dof, -rate_range, rate_range)};
}

}  // namespace dynsolve::testing
