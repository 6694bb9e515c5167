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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dynsolve/dynsolve.hpp"
#include "fixtures.hpp"

namespace dynsolve {
namespace {

using testing::Rng;

const std::string kDataDir = DYNSOLVE_DATA_DIR;

// Collects warnings for the lifetime of the object.
class WarningCapture {
 public:
  WarningCapture()
      : previous_(log::setWarningHandler(
            [this](std::string_view m) { messages.emplace_back(m); })) {}
  ~WarningCapture() { log::setWarningHandler(previous_); }

  std::vector<std::string> messages;

 private:
  log::WarningHandler previous_;
};

SolverConfig baseConfig(const std::string& plugin, const std::string& urdf,
                        const std::string& root, const std::string& tip,
                        const Eigen::Vector3d& gravity) {
  SolverConfig c;
  c.plugin_name = plugin;
  c.robot_description = urdf;
  c.root = root;
  c.tip = tip;
  c.gravity = gravity;
  return c;
}

SolverConfig pendulumConfig(const std::string& plugin) {
  return baseConfig(plugin, testing::pendulumUrdf(), "base_link", "link1",
                    testing::kPlanarGravity);
}

SolverConfig planarConfig(const std::string& plugin) {
  return baseConfig(plugin, testing::planarArmUrdf(), "base_link", "link2",
                    testing::kPlanarGravity);
}

// The same 2-DOF robot configured for each built-in plugin.
std::vector<SolverConfig> allPluginConfigs() {
  SolverConfig generic = planarConfig("generic");

  SolverConfig current = planarConfig("ur10-current");
  current.drive_gains = DriveGains(Eigen::Vector2d(12.0, 7.5));
  current.friction = FrictionParams{
      {ViscousCoulomb{0.3, 0.1, 1e-3}, ViscousCoulomb{0.2, 0.05, 1e-2}}};
  current.friction_units = FrictionUnits::Current;

  SolverConfig franka = planarConfig("franka-friction");
  franka.friction = FrictionParams{
      {AsymmetricSigmoid{1.0, 10.0, 0.1}, AsymmetricSigmoid{0.5, 4.0, -0.2}}};
  return {generic, current, franka};
}

TEST(Registry, BuiltinsArePreRegistered) {
  const auto names = defaultRegistry().names();
  for (const char* name : {"generic", "ur10-current", "franka-friction"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), name), names.end())
        << name;
  }
}

TEST(Registry, UnknownPluginListsRegisteredNames) {
  try {
    createSolver(pendulumConfig("missing"));
    FAIL() << "expected UnknownPluginError";
  } catch (const UnknownPluginError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("missing"), std::string::npos);
    EXPECT_NE(what.find("generic"), std::string::npos);
    EXPECT_NE(what.find("franka-friction"), std::string::npos);
    EXPECT_EQ(e.category(), ErrorCategory::Model);
  }
}

TEST(Registry, CustomSolverCanBeRegistered) {
  SolverRegistry registry;
  EXPECT_FALSE(registry.contains("generic"));
  registry.registerSolver("generic", [](const SolverConfig& c,
                                        KinematicChain chain) {
    return std::make_unique<GenericSolver>(std::move(chain), c.gravity);
  });
  const auto solver = registry.create(pendulumConfig("generic"));
  EXPECT_EQ(solver->dof(), 1);
  EXPECT_EQ(solver->pluginName(), "generic");
  EXPECT_THROW(registry.create(pendulumConfig("franka-friction")),
               UnknownPluginError);
  EXPECT_THROW(registry.registerSolver("", {}), ConfigError);
}

TEST(Registry, ReplacingWarns) {
  SolverRegistry registry = SolverRegistry::withBuiltins();
  WarningCapture capture;
  registry.registerSolver("generic", [](const SolverConfig& c,
                                        KinematicChain chain) {
    return std::make_unique<GenericSolver>(std::move(chain), c.gravity);
  });
  ASSERT_EQ(capture.messages.size(), 1u);
  EXPECT_NE(capture.messages[0].find("generic"), std::string::npos);
}

TEST(CreateSolver, GenericOnTwoLink) {
  const auto solver = createSolver(planarConfig("generic"));
  EXPECT_EQ(solver->dof(), 2);
  EXPECT_EQ(solver->chain().tip_link, "link2");
}

TEST(CreateSolver, MissingRequirements) {
  EXPECT_THROW(createSolver(planarConfig("ur10-current")), MissingParamError);
  EXPECT_THROW(createSolver(planarConfig("franka-friction")),
               MissingParamError);
  SolverConfig units = planarConfig("franka-friction");
  units.friction = FrictionParams::none(2);
  units.friction_units = FrictionUnits::Current;
  EXPECT_THROW(createSolver(units), MissingParamError);
}

TEST(CreateSolver, ConfigErrors) {
  SolverConfig bad = planarConfig("franka-friction");
  bad.friction = FrictionParams::none(3);
  EXPECT_THROW(createSolver(bad), ConfigError);

  bad = planarConfig("ur10-current");
  bad.drive_gains = DriveGains(Eigen::VectorXd::Ones(1));
  EXPECT_THROW(createSolver(bad), ConfigError);

  bad = planarConfig("generic");
  bad.gravity.z() = std::nan("");
  EXPECT_THROW(createSolver(bad), ConfigError);

  bad = planarConfig("generic");
  bad.tip = "nope";
  EXPECT_THROW(createSolver(bad), ModelError);

  bad = planarConfig("generic");
  bad.robot_description = "<robot";
  EXPECT_THROW(createSolver(bad), ParseError);
}

TEST(Getters, GenericPendulumGravity) {
  const auto solver = createSolver(pendulumConfig("generic"));
  EXPECT_NEAR(solver->getGravityVector(Eigen::VectorXd::Zero(1))(0), 9.81,
              1e-12);
}

TEST(Getters, DynamicComponentsEqualIndividualGetters) {
  Rng rng(1);
  for (const SolverConfig& config : allPluginConfigs()) {
    const auto solver = createSolver(config);
    const JointState s = testing::randomState(rng, 2);
    const DynamicComponents dc = solver->getDynamicComponents(s.q, s.qd);
    EXPECT_EQ(dc.inertia, solver->getInertiaMatrix(s.q));
    EXPECT_EQ(dc.coriolis, solver->getCoriolisVector(s.q, s.qd));
    EXPECT_EQ(dc.gravity, solver->getGravityVector(s.q));
  }
}

TEST(Getters, ShapesAndFinitenessForEveryPlugin) {
  Rng rng(2);
  for (const SolverConfig& config : allPluginConfigs()) {
    const auto solver = createSolver(config);
    for (int i = 0; i < 50; ++i) {
      const JointState s = testing::randomState(rng, 2);
      const Eigen::MatrixXd H = solver->getInertiaMatrix(s.q);
      EXPECT_EQ(H.rows(), 2);
      EXPECT_EQ(H.cols(), 2);
      EXPECT_TRUE(H.allFinite());
      for (const Eigen::VectorXd& v :
           {solver->getCoriolisVector(s.q, s.qd), solver->getGravityVector(s.q),
            solver->getFrictionVector(s.qd),
            solver->getTorques(s.q, s.qd, s.qdd)}) {
        EXPECT_EQ(v.size(), 2);
        EXPECT_TRUE(v.allFinite());
      }
    }
  }
}

TEST(Getters, RigidBodyTermsAgreeAcrossPlugins) {
  Rng rng(3);
  std::vector<std::unique_ptr<InverseDynamicsSolver>> solvers;
  for (const SolverConfig& config : allPluginConfigs()) {
    solvers.push_back(createSolver(config));
  }
  for (int i = 0; i < 100; ++i) {
    const JointState s = testing::randomState(rng, 2);
    const DynamicComponents ref = solvers[0]->getDynamicComponents(s.q, s.qd);
    for (std::size_t k = 1; k < solvers.size(); ++k) {
      const DynamicComponents dc = solvers[k]->getDynamicComponents(s.q, s.qd);
      EXPECT_EQ(dc.inertia, ref.inertia);
      EXPECT_EQ(dc.coriolis, ref.coriolis);
      EXPECT_EQ(dc.gravity, ref.gravity);
    }
  }
}

TEST(Friction, GenericIgnoresFriction) {
  const auto solver = createSolver(planarConfig("generic"));
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const JointState s = testing::randomState(rng, 2);
    EXPECT_TRUE(solver->getFrictionVector(s.qd).isZero(0.0));
    EXPECT_EQ(solver->getTorques(s.q, s.qd, s.qdd),
              rnea(solver->chain(), solver->gravity(), s));
  }
}

TEST(Friction, FrankaDecomposition) {
  const auto configs = allPluginConfigs();
  const auto generic = createSolver(configs[0]);
  const auto franka = createSolver(configs[2]);
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const JointState s = testing::randomState(rng, 2);
    const Eigen::VectorXd diff = franka->getTorques(s.q, s.qd, s.qdd) -
                                 generic->getTorques(s.q, s.qd, s.qdd);
    EXPECT_LE((diff - franka->getFrictionVector(s.qd)).cwiseAbs().maxCoeff(),
              1e-12);
  }
  const Eigen::VectorXd rest = Eigen::VectorXd::Zero(2);
  EXPECT_TRUE(franka->getFrictionVector(rest).isZero(0.0));
  const JointState s = testing::randomState(rng, 2);
  EXPECT_LE((franka->getTorques(s.q, rest, s.qdd) -
             generic->getTorques(s.q, rest, s.qdd))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(Friction, FrankaPendulumFrictionIsNonzeroWhenMoving) {
  SolverConfig config = pendulumConfig("franka-friction");
  config.friction = FrictionParams{{AsymmetricSigmoid{1.0, 10.0, 0.0}}};
  const auto solver = createSolver(config);
  EXPECT_GT(std::abs(solver->getFrictionVector(Eigen::VectorXd::Ones(1))(0)),
            0.1);
}

TEST(Friction, CurrentUnitsScaleByGains) {
  const SolverConfig config = allPluginConfigs()[1];
  const auto solver = createSolver(config);
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXd qd = testing::uniformVector(rng, 2, -3, 3);
    const Eigen::VectorXd f_current = evalFriction(*config.friction, qd);
    const Eigen::VectorXd expected =
        config.drive_gains->values().cwiseProduct(f_current);
    EXPECT_LE((solver->getFrictionVector(qd) - expected).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Currents, RoundTripThroughGains) {
  const auto solver = createSolver(allPluginConfigs()[1]);
  const DriveGains& gains = *solver->driveGains();
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const JointState s = testing::randomState(rng, 2);
    const Eigen::VectorXd tau = solver->getTorques(s.q, s.qd, s.qdd);
    const Eigen::VectorXd back =
        torquesFromCurrents(gains, solver->getJointCurrents(s.q, s.qd, s.qdd));
    EXPECT_LE((back - tau).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Currents, UnitGainsGiveTorques) {
  SolverConfig config = planarConfig("ur10-current");
  config.drive_gains = DriveGains(Eigen::VectorXd::Ones(2));
  const auto solver = createSolver(config);
  Rng rng(8);
  const JointState s = testing::randomState(rng, 2);
  EXPECT_EQ(solver->getJointCurrents(s.q, s.qd, s.qdd),
            solver->getTorques(s.q, s.qd, s.qdd));
  const auto* current = dynamic_cast<const CurrentLevelSolver*>(solver.get());
  ASSERT_NE(current, nullptr);
  EXPECT_EQ(current->getDriveGainsMatrix(), Eigen::MatrixXd::Identity(2, 2));
}

TEST(Currents, UnsupportedOnOtherPlugins) {
  const auto configs = allPluginConfigs();
  const JointState s = JointState::zero(2);
  for (const SolverConfig* c : {&configs[0], &configs[2]}) {
    const auto solver = createSolver(*c);
    EXPECT_THROW(solver->getJointCurrents(s.q, s.qd, s.qdd),
                 UnsupportedOperationError);
  }
}

TEST(Determinism, SameConfigSameOutputs) {
  Rng rng(9);
  for (const SolverConfig& config : allPluginConfigs()) {
    const auto a = createSolver(config);
    const auto b = createSolver(config);
    for (int i = 0; i < 20; ++i) {
      const JointState s = testing::randomState(rng, 2);
      EXPECT_EQ(a->getTorques(s.q, s.qd, s.qdd), b->getTorques(s.q, s.qd, s.qdd));
      EXPECT_EQ(a->getInertiaMatrix(s.q), b->getInertiaMatrix(s.q));
    }
  }
}

TEST(Getters, DimensionErrors) {
  const auto solver = createSolver(allPluginConfigs()[2]);
  EXPECT_THROW(solver->getFrictionVector(Eigen::VectorXd::Zero(3)),
               DimensionError);
  EXPECT_THROW(solver->getInertiaMatrix(Eigen::VectorXd::Zero(1)),
               DimensionError);
  const auto generic = createSolver(planarConfig("generic"));
  EXPECT_THROW(generic->getFrictionVector(Eigen::VectorXd::Zero(3)),
               DimensionError);
}

// ------------------------------------------------------------ config JSON

TEST(SolverConfigJson, ShippedConfigsLoad) {
  for (const char* name :
       {"generic.json", "ur10_current.json", "franka_friction.json"}) {
    const SolverConfig config = loadSolverConfig(kDataDir + "/" + name);
    const auto solver = createSolver(config);
    EXPECT_EQ(solver->dof(), 6) << name;
    EXPECT_EQ(solver->pluginName(), config.plugin_name);
  }
}

TEST(SolverConfigJson, ParsesEveryField) {
  const SolverConfig c = parseSolverConfig(R"({
    "plugin_name": "ur10-current",
    "robot_description_path": "planar2.urdf",
    "root": "base_link", "tip": "link2",
    "gravity": [0, -9.81, 0],
    "friction": [{"model": "viscous-coulomb", "params": {"Fv": 0.5, "Fc": 0.2}},
                 {"model": "none"}],
    "drive_gains": [2, 3],
    "friction_units": "current"
  })",
                                           kDataDir);
  EXPECT_EQ(c.plugin_name, "ur10-current");
  EXPECT_EQ(c.gravity, Eigen::Vector3d(0, -9.81, 0));
  ASSERT_TRUE(c.friction);
  ASSERT_EQ(c.friction->size(), 2);
  EXPECT_EQ(std::get<ViscousCoulomb>(c.friction->joints[0]),
            (ViscousCoulomb{0.5, 0.2, 1e-3}));
  EXPECT_TRUE(std::holds_alternative<NoFriction>(c.friction->joints[1]));
  ASSERT_TRUE(c.drive_gains);
  EXPECT_EQ(c.drive_gains->values(), Eigen::Vector2d(2, 3));
  EXPECT_EQ(c.friction_units, FrictionUnits::Current);
  EXPECT_NE(c.robot_description.find("planar2"), std::string::npos);
  EXPECT_EQ(createSolver(c)->dof(), 2);
}

TEST(SolverConfigJson, UnknownKeyWarns) {
  WarningCapture capture;
  parseSolverConfig(R"({"plugin_name": "generic",
    "robot_description_path": "planar2.urdf", "root": "base_link",
    "tip": "link2", "gravity": [0, 0, -9.81], "colour": "red"})",
                    kDataDir);
  ASSERT_EQ(capture.messages.size(), 1u);
  EXPECT_NE(capture.messages[0].find("colour"), std::string::npos);
}

TEST(SolverConfigJson, SchemaViolations) {
  const std::string head = R"({"plugin_name": "generic",
    "robot_description_path": "planar2.urdf", "root": "base_link",
    "tip": "link2", )";
  EXPECT_THROW(parseSolverConfig(head + R"("gravity": [0, 0]})", kDataDir),
               ConfigError);
  EXPECT_THROW(parseSolverConfig(head + R"("gravity": "down"})", kDataDir),
               ConfigError);
  EXPECT_THROW(parseSolverConfig(head + R"("gravity": [0, 0, -9.81],
    "friction_units": "volts"})",
                                 kDataDir),
               ConfigError);
  EXPECT_THROW(parseSolverConfig(head + R"("gravity": [0, 0, -9.81],
    "friction": [{"model": "stribeck"}]})",
                                 kDataDir),
               ConfigError);
  EXPECT_THROW(parseSolverConfig(head + R"("gravity": [0, 0, -9.81],
    "friction": [{"model": "viscous-coulomb", "params": {"Fv": -1, "Fc": 0}}]})",
                                 kDataDir),
               ConfigError);
  EXPECT_THROW(parseSolverConfig(head + R"("gravity": [0, 0, -9.81],
    "drive_gains": [1, 0]})",
                                 kDataDir),
               ConfigError);
  EXPECT_THROW(parseSolverConfig("{not json", kDataDir), ConfigError);
  EXPECT_THROW(parseSolverConfig(R"({"plugin_name": "generic"})", kDataDir),
               ConfigError);
  EXPECT_THROW(loadSolverConfig(kDataDir + "/does_not_exist.json"), IoError);
  EXPECT_THROW(
      parseSolverConfig(R"({"plugin_name": "generic",
    "robot_description_path": "missing.urdf", "root": "a", "tip": "b",
    "gravity": [0, 0, -9.81]})",
                        kDataDir),
      IoError);
}

TEST(SolverConfigJson, EchoOmitsDescriptionText) {
  const SolverConfig c = loadSolverConfig(kDataDir + "/franka_friction.json");
  const auto echo = configToJson(c);
  EXPECT_EQ(echo["plugin_name"], "franka-friction");
  EXPECT_EQ(echo["friction"].size(), 6u);
  EXPECT_FALSE(echo.contains("robot_description"));
  EXPECT_EQ(echo.dump(), configToJson(loadSolverConfig(
                             kDataDir + "/franka_friction.json"))
                             .dump());
}

}  // namespace
}  // namespace dynsolve
