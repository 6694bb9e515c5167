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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "dynsolve/dynsolve.hpp"
#include "fixtures.hpp"

namespace dynsolve {
namespace {

using testing::Rng;

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

JointFriction randomModel(Rng& rng, int which) {
  switch (which % 3) {
    case 0:
      return NoFriction{};
    case 1:
      return ViscousCoulomb{testing::uniform(rng, 0, 2),
                            testing::uniform(rng, 0, 2),
                            testing::uniform(rng, 1e-4, 1e-1)};
    default:
      return AsymmetricSigmoid{testing::uniform(rng, 0, 3),
                               testing::uniform(rng, 0.1, 20),
                               testing::uniform(rng, -0.5, 0.5)};
  }
}

TEST(Friction, ViscousCoulombValue) {
  const ViscousCoulomb vc{0.5, 0.2, 1e-3};
  EXPECT_NEAR(evalJointFriction(vc, 2.0), 1.2, 1e-6);
  EXPECT_NEAR(evalJointFriction(vc, 2.0), 0.5 * 2.0 + 0.2 * std::tanh(2000.0),
              1e-15);
}

TEST(Friction, ZeroAtRestExactly) {
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    EXPECT_EQ(evalJointFriction(randomModel(rng, i), 0.0), 0.0);
  }
  const FrictionParams params{{ViscousCoulomb{1, 1, 1e-3},
                               AsymmetricSigmoid{2, 5, 0.3}, NoFriction{}}};
  EXPECT_TRUE(evalFriction(params, Eigen::VectorXd::Zero(3)).isZero(0.0));
}

TEST(Friction, SymmetricSigmoidIsOdd) {
  const AsymmetricSigmoid s{1.0, 10.0, 0.0};
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const double v = testing::uniform(rng, -10, 10);
    EXPECT_NEAR(evalJointFriction(s, -v), -evalJointFriction(s, v), 1e-12);
  }
  // Saturates at +-phi1 / 2.
  EXPECT_NEAR(evalJointFriction(s, 50.0), 0.5, 1e-12);
}

TEST(Friction, Monotone) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const JointFriction model = randomModel(rng, i);
    double a = testing::uniform(rng, -10, 10);
    double b = testing::uniform(rng, -10, 10);
    if (a > b) std::swap(a, b);
    EXPECT_LE(evalJointFriction(model, a), evalJointFriction(model, b))
        << frictionModelName(model);
  }
}

TEST(Friction, Dissipative) {
  Rng rng(4);
  for (int i = 0; i < 600; ++i) {
    const JointFriction model = randomModel(rng, i);
    const double v = testing::uniform(rng, -10, 10);
    EXPECT_GE(v * evalJointFriction(model, v), 0.0) << frictionModelName(model);
  }
  // Negative phi1 and phi2 keep phi1 * phi2 >= 0.
  const AsymmetricSigmoid flipped{-1.0, -4.0, 0.2};
  for (double v : {-3.0, -0.1, 0.1, 3.0}) {
    EXPECT_GE(v * evalJointFriction(flipped, v), 0.0);
  }
}

TEST(Friction, PerJointIndependence) {
  Rng rng(5);
  FrictionParams params;
  for (int j = 0; j < 6; ++j) params.joints.push_back(randomModel(rng, j + 1));
  const Eigen::VectorXd qd = testing::uniformVector(rng, 6, -3, 3);
  const Eigen::VectorXd base = evalFriction(params, qd);
  for (int j = 0; j < 6; ++j) {
    Eigen::VectorXd perturbed = qd;
    perturbed(j) += 0.7;
    const Eigen::VectorXd f = evalFriction(params, perturbed);
    for (int k = 0; k < 6; ++k) {
      if (k == j) continue;
      EXPECT_EQ(f(k), base(k));
    }
  }
}

TEST(Friction, NoneIsZeroEverywhere) {
  const FrictionParams params = FrictionParams::none(4);
  EXPECT_EQ(params.size(), 4);
  EXPECT_TRUE(evalFriction(params, vec({1, -2, 3, 100})).isZero(0.0));
}

TEST(Friction, ModelNames) {
  EXPECT_EQ(frictionModelName(NoFriction{}), "none");
  EXPECT_EQ(frictionModelName(ViscousCoulomb{}), "viscous-coulomb");
  EXPECT_EQ(frictionModelName(AsymmetricSigmoid{}), "asymmetric-sigmoid");
}

TEST(Friction, ParameterValidation) {
  EXPECT_NO_THROW(validateFriction(ViscousCoulomb{0.1, 0.2, 1e-3}));
  EXPECT_THROW(validateFriction(ViscousCoulomb{-0.1, 0.2, 1e-3}), InputError);
  EXPECT_THROW(validateFriction(ViscousCoulomb{0.1, -0.2, 1e-3}), InputError);
  EXPECT_THROW(validateFriction(ViscousCoulomb{0.1, 0.2, 0.0}), InputError);
  EXPECT_THROW(validateFriction(
                   AsymmetricSigmoid{std::numeric_limits<double>::infinity(),
                                     1.0, 0.0}),
               InputError);
}

TEST(Friction, EvalErrors) {
  const FrictionParams params = FrictionParams::none(2);
  EXPECT_THROW(evalFriction(params, vec({1})), DimensionError);
  EXPECT_THROW(evalFriction(params, vec({1, std::nan("")})), InputError);
}

TEST(DriveGains, Matrix) {
  const Eigen::MatrixXd K = driveGainsMatrix(DriveGains(vec({10, 20})));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 2);
  expected(0, 0) = 10;
  expected(1, 1) = 20;
  EXPECT_EQ(K, expected);
}

TEST(DriveGains, CurrentsToTorques) {
  EXPECT_EQ(torquesFromCurrents(DriveGains(vec({10})), vec({1.5})),
            vec({15.0}));
  EXPECT_EQ(torquesFromCurrents(DriveGains(vec({2, 3})), vec({1, 1})),
            vec({2, 3}));
  EXPECT_TRUE(torquesFromCurrents(DriveGains(vec({2, 3})), vec({0, 0}))
                  .isZero(0.0));
  const Eigen::VectorXd i = vec({0.3, -1.1, 4.0});
  EXPECT_EQ(torquesFromCurrents(DriveGains(Eigen::VectorXd::Ones(3)), i), i);
}

TEST(DriveGains, InverseRoundTrip) {
  Rng rng(6);
  for (int n = 0; n < 200; ++n) {
    const int dof = 1 + n % 7;
    const DriveGains gains(testing::uniformVector(rng, dof, 0.1, 50));
    const Eigen::VectorXd i = testing::uniformVector(rng, dof, -5, 5);
    EXPECT_LE((currentsFromTorques(gains, torquesFromCurrents(gains, i)) - i)
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(DriveGains, RejectsNonPositive) {
  EXPECT_THROW(DriveGains(vec({1, 0})), InputError);
  EXPECT_THROW(DriveGains(vec({-1})), InputError);
  EXPECT_THROW(DriveGains(vec({std::nan("")})), InputError);
  EXPECT_THROW(torquesFromCurrents(DriveGains(vec({1, 2})), vec({1})),
               DimensionError);
}

}  // namespace
}  // namespace dynsolve
