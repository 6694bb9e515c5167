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

#include <fmt/format.h>

#include "dynsolve/robot_model.hpp"

namespace dynsolve {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// "{}" yields the shortest representation that parses back to the same double.
std::string vec(const Eigen::Vector3d& v) {
  return fmt::format("{} {} {}", v.x(), v.y(), v.z());
}

}  // namespace

std::string writeUrdf(const RobotModel& model) {
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "<?xml version=\"1.0\"?>\n<robot name=\"{}\">\n",
                 escape(model.name));

  for (const auto& [name, link] : model.links) {
    const SpatialInertia& si = link.inertia;
    const Eigen::Matrix3d& I = si.inertia();
    fmt::format_to(it, "  <link name=\"{}\">\n", escape(name));
    fmt::format_to(it,
                   "    <inertial>\n"
                   "      <origin xyz=\"{}\" rpy=\"0 0 0\"/>\n"
                   "      <mass value=\"{}\"/>\n"
                   "      <inertia ixx=\"{}\" ixy=\"{}\" ixz=\"{}\" iyy=\"{}\" "
                   "iyz=\"{}\" izz=\"{}\"/>\n"
                   "    </inertial>\n",
                   vec(si.com()), si.mass(), I(0, 0), I(0, 1), I(0, 2),
                   I(1, 1), I(1, 2), I(2, 2));
    out += "  </link>\n";
  }

  for (const auto& [name, joint] : model.joints) {
    fmt::format_to(it, "  <joint name=\"{}\" type=\"{}\">\n", escape(name),
                   toString(joint.kind));
    fmt::format_to(it, "    <parent link=\"{}\"/>\n    <child link=\"{}\"/>\n",
                   escape(joint.parent), escape(joint.child));
    fmt::format_to(it, "    <origin xyz=\"{}\" rpy=\"{}\"/>\n",
                   vec(joint.origin_xyz), vec(joint.origin_rpy));
    fmt::format_to(it, "    <axis xyz=\"{}\"/>\n", vec(joint.axis));
    const JointLimits& l = joint.limits;
    fmt::format_to(it,
                   "    <limit lower=\"{}\" upper=\"{}\" effort=\"{}\" "
                   "velocity=\"{}\"/>\n",
                   l.lower, l.upper, l.effort, l.velocity);
    out += "  </joint>\n";
  }
  out += "</robot>\n";
  return out;
}

}  // namespace dynsolve
