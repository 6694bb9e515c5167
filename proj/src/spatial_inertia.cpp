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

#include "dynsolve/spatial_inertia.hpp"

#include <Eigen/Eigenvalues>

namespace dynsolve {

Eigen::Matrix3d pointMassInertia(double mass, const Eigen::Vector3d& offset) {
  return mass * (offset.squaredNorm() * Eigen::Matrix3d::Identity() -
                 offset * offset.transpose());
}

SpatialInertia::SpatialInertia()
    : mass_(0.0),
      com_(Eigen::Vector3d::Zero()),
      inertia_(Eigen::Matrix3d::Zero()) {}

SpatialInertia::SpatialInertia(double mass, const Eigen::Vector3d& com,
                               const Eigen::Matrix3d& inertia_about_com)
    : mass_(mass),
      com_(com),
      inertia_(0.5 * (inertia_about_com + inertia_about_com.transpose())) {}

SpatialInertia SpatialInertia::transformed(const Eigen::Isometry3d& pose) const {
  const Eigen::Matrix3d R = pose.linear();
  return {mass_, pose * com_, R * inertia_ * R.transpose()};
}

Eigen::Matrix3d SpatialInertia::inertiaAboutOrigin() const {
  return inertia_ + pointMassInertia(mass_, com_);
}

InertialParameters SpatialInertia::parameters() const {
  const Eigen::Vector3d h = mass_ * com_;
  const Eigen::Matrix3d I = inertiaAboutOrigin();
  InertialParameters p;
  p << mass_, h.x(), h.y(), h.z(), I(0, 0), I(0, 1), I(0, 2), I(1, 1), I(1, 2),
      I(2, 2);
  return p;
}

double SpatialInertia::minEigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(
      inertia_, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

SpatialInertia operator+(const SpatialInertia& a, const SpatialInertia& b) {
  if (a.mass_ == 0.0 && a.inertia_.isZero(0.0)) return b;
  if (b.mass_ == 0.0 && b.inertia_.isZero(0.0)) return a;
  const double m = a.mass_ + b.mass_;
  // Composite COM is undefined for a massless union; the origin is used and
  // only the rotational parts add.
  const Eigen::Vector3d c =
      m != 0.0 ? Eigen::Vector3d((a.mass_ * a.com_ + b.mass_ * b.com_) / m)
               : Eigen::Vector3d::Zero();
  const Eigen::Matrix3d I = a.inertia_ + pointMassInertia(a.mass_, a.com_ - c) +
                            b.inertia_ + pointMassInertia(b.mass_, b.com_ - c);
  return {m, c, I};
}

SpatialInertia& SpatialInertia::operator+=(const SpatialInertia& other) {
  *this = *this + other;
  return *this;
}

}  // namespace dynsolve
