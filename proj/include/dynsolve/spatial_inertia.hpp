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
#include <Eigen/Geometry>

namespace dynsolve {

/// Number of standard inertial parameters per rigid body:
/// [m, m*cx, m*cy, m*cz, Ixx, Ixy, Ixz, Iyy, Iyz, Izz], with the rotational
/// inertia taken about the frame origin.
inline constexpr int kParamsPerBody = 10;

using InertialParameters = Eigen::Matrix<double, kParamsPerBody, 1>;

/// Mass properties of a rigid body expressed in some body-fixed frame:
/// mass, center of mass, and rotational inertia about the center of mass.
///
/// The inertia tensor is symmetrized on construction. Physical consistency
/// (non-negative mass, positive semidefinite tensor) is not enforced here;
/// see validateChain().
class SpatialInertia {
 public:
  SpatialInertia();
  SpatialInertia(double mass, const Eigen::Vector3d& com,
                 const Eigen::Matrix3d& inertia_about_com);

  double mass() const { return mass_; }
  const Eigen::Vector3d& com() const { return com_; }
  const Eigen::Matrix3d& inertia() const { return inertia_; }

  /// Same body expressed in a parent frame, where `pose` maps coordinates of
  /// the current frame into the parent frame.
  SpatialInertia transformed(const Eigen::Isometry3d& pose) const;

  /// Rotational inertia about the frame origin (parallel-axis theorem).
  Eigen::Matrix3d inertiaAboutOrigin() const;

  /// The 10 standard inertial parameters about the frame origin.
  InertialParameters parameters() const;

  double minEigenvalue() const;

  /// Rigid union of two bodies expressed in the same frame.
  friend SpatialInertia operator+(const SpatialInertia& a,
                                  const SpatialInertia& b);
  SpatialInertia& operator+=(const SpatialInertia& other);

  bool operator==(const SpatialInertia& other) const = default;

 private:
  double mass_;
  Eigen::Vector3d com_;
  Eigen::Matrix3d inertia_;
};

/// m * (|d|^2 E - d d^T): the inertia of a point mass m at offset d.
Eigen::Matrix3d pointMassInertia(double mass, const Eigen::Vector3d& offset);

}  // namespace dynsolve
