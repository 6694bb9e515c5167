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

#include "dynsolve/rnea.hpp"

#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Geometry>

#include "dynsolve/errors.hpp"

namespace dynsolve {
namespace {

constexpr double kAsymmetryTolerance = 1e-9;

void checkVector(const Eigen::VectorXd& v, int dof, const char* what) {
  if (v.size() != dof) {
    throw DimensionError(std::string(what) + " has " +
                         std::to_string(v.size()) + " entries, chain has dof " +
                         std::to_string(dof));
  }
  if (!v.allFinite()) {
    throw InputError(std::string(what) + " has non-finite entries");
  }
}

void checkState(const KinematicChain& chain, const JointState& s) {
  checkVector(s.q, chain.dof(), "q");
  checkVector(s.qd, chain.dof(), "qd");
  checkVector(s.qdd, chain.dof(), "qdd");
}

void checkGravity(const Eigen::Vector3d& g) {
  if (!g.allFinite()) throw InputError("gravity has non-finite entries");
}

// Inertial parameters of one body about its frame origin.
struct BodyParameters {
  double mass;
  Eigen::Vector3d first_moment;  // m * c
  Eigen::Matrix3d inertia;       // about the origin

  explicit BodyParameters(const Eigen::Ref<const Eigen::VectorXd>& p)
      : mass(p(0)), first_moment(p(1), p(2), p(3)) {
    inertia << p(4), p(5), p(6),  //
        p(5), p(7), p(8),         //
        p(6), p(8), p(9);
  }
};

// Pose of joint frame i in its predecessor frame at displacement q.
void jointTransform(const ChainJoint& j, double q, Eigen::Matrix3d& R,
                    Eigen::Vector3d& p) {
  const Eigen::Matrix3d& R0 = j.origin.linear();
  p = j.origin.translation();
  if (j.kind == JointKind::Revolute) {
    R = R0 * Eigen::AngleAxisd(q, j.axis).toRotationMatrix();
  } else {
    R = R0;
    p += R0 * (j.axis * q);
  }
}

Eigen::VectorXd newtonEuler(const KinematicChain& chain,
                            const Eigen::VectorXd& parameters,
                            const Eigen::Vector3d& gravity,
                            const JointState& s) {
  const int n = chain.dof();
  std::vector<Eigen::Matrix3d> R(n);  // frame i -> frame i-1
  std::vector<Eigen::Vector3d> p(n);  // origin of i in frame i-1
  std::vector<Eigen::Vector3d> force(n), moment(n);

  // Outward pass. Gravity enters as an upward acceleration of the base.
  Eigen::Vector3d w = Eigen::Vector3d::Zero();
  Eigen::Vector3d wd = Eigen::Vector3d::Zero();
  Eigen::Vector3d a = -gravity;
  for (int i = 0; i < n; ++i) {
    const ChainJoint& j = chain.joints[i];
    jointTransform(j, s.q(i), R[i], p[i]);
    const Eigen::Matrix3d Rt = R[i].transpose();

    const Eigen::Vector3d a_origin =
        Rt * (a + wd.cross(p[i]) + w.cross(w.cross(p[i])));
    Eigen::Vector3d w_i = Rt * w;
    Eigen::Vector3d wd_i = Rt * wd;
    a = a_origin;
    if (j.kind == JointKind::Revolute) {
      wd_i += w_i.cross(j.axis * s.qd(i)) + j.axis * s.qdd(i);
      w_i += j.axis * s.qd(i);
    } else {
      a += 2.0 * w_i.cross(j.axis * s.qd(i)) + j.axis * s.qdd(i);
    }
    w = w_i;
    wd = wd_i;

    // Net wrench on body i about its frame origin. With h = m c and I about
    // the origin this equals the COM form m a_c, I_c wd + w x I_c w shifted
    // to the origin.
    const BodyParameters body(parameters.segment<kParamsPerBody>(
        static_cast<Eigen::Index>(i) * kParamsPerBody));
    const Eigen::Vector3d& h = body.first_moment;
    force[i] = body.mass * a + wd.cross(h) + w.cross(w.cross(h));
    moment[i] = body.inertia * wd + w.cross(body.inertia * w) + h.cross(a);
  }

  // Inward pass.
  Eigen::VectorXd tau(n);
  Eigen::Vector3d f = Eigen::Vector3d::Zero();
  Eigen::Vector3d m = Eigen::Vector3d::Zero();
  for (int i = n - 1; i >= 0; --i) {
    if (i + 1 < n) {
      const Eigen::Vector3d f_child = R[i + 1] * f;
      m = moment[i] + R[i + 1] * m + p[i + 1].cross(f_child);
      f = force[i] + f_child;
    } else {
      f = force[i];
      m = moment[i];
    }
    const ChainJoint& j = chain.joints[i];
    tau(i) = j.kind == JointKind::Revolute ? j.axis.dot(m) : j.axis.dot(f);
  }
  return tau;
}

}  // namespace

JointState JointState::zero(int dof) {
  return {Eigen::VectorXd::Zero(dof), Eigen::VectorXd::Zero(dof),
          Eigen::VectorXd::Zero(dof)};
}

Eigen::VectorXd chainParameters(const KinematicChain& chain) {
  Eigen::VectorXd params(static_cast<Eigen::Index>(chain.dof()) *
                         kParamsPerBody);
  for (int i = 0; i < chain.dof(); ++i) {
    params.segment<kParamsPerBody>(static_cast<Eigen::Index>(i) *
                                   kParamsPerBody) =
        chain.joints[i].inertia.parameters();
  }
  return params;
}

Eigen::VectorXd rnea(const KinematicChain& chain,
                     const Eigen::Vector3d& gravity, const JointState& state) {
  checkState(chain, state);
  checkGravity(gravity);
  return newtonEuler(chain, chainParameters(chain), gravity, state);
}

Eigen::VectorXd rneaWithParameters(const KinematicChain& chain,
                                   const Eigen::VectorXd& parameters,
                                   const Eigen::Vector3d& gravity,
                                   const JointState& state) {
  checkState(chain, state);
  checkGravity(gravity);
  if (parameters.size() != static_cast<Eigen::Index>(chain.dof()) *
                               kParamsPerBody) {
    throw DimensionError("parameter vector has " +
                         std::to_string(parameters.size()) +
                         " entries, expected " +
                         std::to_string(chain.dof() * kParamsPerBody));
  }
  return newtonEuler(chain, parameters, gravity, state);
}

Eigen::VectorXd gravityVector(const KinematicChain& chain,
                              const Eigen::Vector3d& gravity,
                              const Eigen::VectorXd& q) {
  JointState s = JointState::zero(chain.dof());
  s.q = q;
  return rnea(chain, gravity, s);
}

Eigen::VectorXd coriolisVector(const KinematicChain& chain,
                               const Eigen::VectorXd& q,
                               const Eigen::VectorXd& qd) {
  JointState s = JointState::zero(chain.dof());
  s.q = q;
  s.qd = qd;
  return rnea(chain, Eigen::Vector3d::Zero(), s);
}

Eigen::MatrixXd inertiaMatrix(const KinematicChain& chain,
                              const Eigen::VectorXd& q) {
  const int n = chain.dof();
  JointState s = JointState::zero(n);
  s.q = q;
  checkState(chain, s);

  const Eigen::VectorXd params = chainParameters(chain);
  Eigen::MatrixXd H(n, n);
  for (int j = 0; j < n; ++j) {
    s.qdd.setZero();
    s.qdd(j) = 1.0;
    H.col(j) = newtonEuler(chain, params, Eigen::Vector3d::Zero(), s);
  }

  const double asymmetry = (H - H.transpose()).norm();
  if (asymmetry > kAsymmetryTolerance * H.norm()) {
    throw AsymmetryError("inertia matrix asymmetry " +
                         std::to_string(asymmetry) + " exceeds tolerance");
  }
  return 0.5 * (H + H.transpose());
}

DynamicComponents dynamicComponents(const KinematicChain& chain,
                                    const Eigen::Vector3d& gravity,
                                    const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qd) {
  return {inertiaMatrix(chain, q), coriolisVector(chain, q, qd),
          gravityVector(chain, gravity, q)};
}

Eigen::MatrixXd regressorMatrix(const KinematicChain& chain,
                                const Eigen::Vector3d& gravity,
                                const JointState& state) {
  checkState(chain, state);
  checkGravity(gravity);
  const Eigen::Index cols =
      static_cast<Eigen::Index>(chain.dof()) * kParamsPerBody;
  Eigen::MatrixXd Y(chain.dof(), cols);
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(cols);
  // Torque is linear in the inertial parameters, so column k is the torque
  // of a chain whose only nonzero parameter is the k-th one, set to 1.
  for (Eigen::Index k = 0; k < cols; ++k) {
    unit(k) = 1.0;
    Y.col(k) = newtonEuler(chain, unit, gravity, state);
    unit(k) = 0.0;
  }
  return Y;
}

Eigen::VectorXd forwardDynamics(const KinematicChain& chain,
                                const Eigen::Vector3d& gravity,
                                const Eigen::VectorXd& q,
                                const Eigen::VectorXd& qd,
                                const Eigen::VectorXd& tau) {
  checkVector(tau, chain.dof(), "tau");
  const Eigen::MatrixXd H = inertiaMatrix(chain, q);
  const Eigen::VectorXd bias =
      coriolisVector(chain, q, qd) + gravityVector(chain, gravity, q);

  const Eigen::LLT<Eigen::MatrixXd> llt(H);
  if (llt.info() != Eigen::Success) {
    throw SingularInertiaError("inertia matrix is not positive definite");
  }
  Eigen::VectorXd qdd = llt.solve(tau - bias);
  if (!qdd.allFinite()) {
    throw SingularInertiaError("inertia matrix is numerically singular");
  }
  return qdd;
}

}  // namespace dynsolve
