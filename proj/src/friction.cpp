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

#include "dynsolve/friction.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dynsolve/errors.hpp"

namespace dynsolve {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void checkLength(Eigen::Index got, int expected, const char* what) {
  if (got != expected) {
    throw DimensionError(std::string(what) + " has " + std::to_string(got) +
                         " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

std::string_view frictionModelName(const JointFriction& model) {
  return std::visit(
      Overloaded{[](const NoFriction&) { return std::string_view("none"); },
                 [](const ViscousCoulomb&) {
                   return std::string_view("viscous-coulomb");
                 },
                 [](const AsymmetricSigmoid&) {
                   return std::string_view("asymmetric-sigmoid");
                 }},
      model);
}

void validateFriction(const JointFriction& model) {
  std::visit(
      Overloaded{
          [](const NoFriction&) {},
          [](const ViscousCoulomb& m) {
            if (!(std::isfinite(m.viscous) && m.viscous >= 0.0) ||
                !(std::isfinite(m.coulomb) && m.coulomb >= 0.0) ||
                !(std::isfinite(m.smoothing) && m.smoothing > 0.0)) {
              throw InputError(
                  "viscous-coulomb needs Fv >= 0, Fc >= 0, vEps > 0");
            }
          },
          [](const AsymmetricSigmoid& m) {
            if (!std::isfinite(m.phi1) || !std::isfinite(m.phi2) ||
                !std::isfinite(m.phi3)) {
              throw InputError("asymmetric-sigmoid parameters must be finite");
            }
          }},
      model);
}

double evalJointFriction(const JointFriction& model, double qd) {
  return std::visit(
      Overloaded{[](const NoFriction&) { return 0.0; },
                 [qd](const ViscousCoulomb& m) {
                   return m.viscous * qd +
                          m.coulomb * std::tanh(qd / m.smoothing);
                 },
                 [qd](const AsymmetricSigmoid& m) {
                   return m.phi1 * logistic(m.phi2 * (qd + m.phi3)) -
                          m.phi1 * logistic(m.phi2 * m.phi3);
                 }},
      model);
}

FrictionParams FrictionParams::none(int dof) {
  return {std::vector<JointFriction>(static_cast<std::size_t>(dof),
                                     NoFriction{})};
}

Eigen::VectorXd evalFriction(const FrictionParams& params,
                             const Eigen::VectorXd& qd) {
  checkLength(qd.size(), params.size(), "qd");
  if (!qd.allFinite()) throw InputError("qd has non-finite entries");
  Eigen::VectorXd f(qd.size());
  for (Eigen::Index i = 0; i < qd.size(); ++i) {
    f(i) = evalJointFriction(params.joints[static_cast<std::size_t>(i)], qd(i));
  }
  return f;
}

DriveGains::DriveGains(Eigen::VectorXd gains) : gains_(std::move(gains)) {
  for (Eigen::Index i = 0; i < gains_.size(); ++i) {
    if (!std::isfinite(gains_(i)) || gains_(i) <= 0.0) {
      throw InputError("drive gain " + std::to_string(i) +
                       " must be finite and positive");
    }
  }
}

Eigen::MatrixXd driveGainsMatrix(const DriveGains& gains) {
  return gains.values().asDiagonal();
}

Eigen::VectorXd torquesFromCurrents(const DriveGains& gains,
                                    const Eigen::VectorXd& currents) {
  checkLength(currents.size(), gains.size(), "currents");
  return gains.values().cwiseProduct(currents);
}

Eigen::VectorXd currentsFromTorques(const DriveGains& gains,
                                    const Eigen::VectorXd& torques) {
  checkLength(torques.size(), gains.size(), "torques");
  return torques.cwiseQuotient(gains.values());
}

}  // namespace dynsolve
