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

#include "dynsolve/registry.hpp"

#include <utility>

#include "dynsolve/builtin_solvers.hpp"
#include "dynsolve/errors.hpp"
#include "dynsolve/log.hpp"

namespace dynsolve {
namespace {

FrictionParams frictionOrNone(const SolverConfig& config, int dof) {
  return config.friction ? *config.friction : FrictionParams::none(dof);
}

}  // namespace

SolverRegistry SolverRegistry::withBuiltins() {
  SolverRegistry r;
  r.registerSolver(std::string(GenericSolver::kName),
                   [](const SolverConfig& config, KinematicChain chain) {
                     return std::make_unique<GenericSolver>(std::move(chain),
                                                            config.gravity);
                   });
  r.registerSolver(
      std::string(CurrentLevelSolver::kName),
      [](const SolverConfig& config, KinematicChain chain)
          -> std::unique_ptr<InverseDynamicsSolver> {
        if (!config.drive_gains) {
          throw MissingParamError("plugin '" +
                                  std::string(CurrentLevelSolver::kName) +
                                  "' requires drive_gains");
        }
        const int dof = chain.dof();
        return std::make_unique<CurrentLevelSolver>(
            std::move(chain), config.gravity, frictionOrNone(config, dof),
            *config.drive_gains,
            config.friction_units.value_or(FrictionUnits::Torque));
      });
  r.registerSolver(
      std::string(FrictionModelSolver::kName),
      [](const SolverConfig& config, KinematicChain chain)
          -> std::unique_ptr<InverseDynamicsSolver> {
        if (!config.friction) {
          throw MissingParamError("plugin '" +
                                  std::string(FrictionModelSolver::kName) +
                                  "' requires friction");
        }
        return std::make_unique<FrictionModelSolver>(
            std::move(chain), config.gravity, *config.friction,
            config.drive_gains,
            config.friction_units.value_or(FrictionUnits::Torque));
      });
  return r;
}

void SolverRegistry::registerSolver(const std::string& name,
                                    SolverFactory factory) {
  if (name.empty()) throw ConfigError("solver name must not be empty");
  if (factories_.contains(name)) {
    log::warn("replacing registered solver '" + name + "'");
  }
  factories_[name] = std::move(factory);
}

bool SolverRegistry::contains(const std::string& name) const {
  return factories_.contains(name);
}

std::vector<std::string> SolverRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, factory] : factories_) out.push_back(name);
  return out;
}

std::unique_ptr<InverseDynamicsSolver> SolverRegistry::create(
    const SolverConfig& config) const {
  const auto it = factories_.find(config.plugin_name);
  if (it == factories_.end()) {
    std::string known;
    for (const auto& name : names()) {
      known += known.empty() ? name : ", " + name;
    }
    throw UnknownPluginError("unknown plugin '" + config.plugin_name +
                             "'; registered: " + known);
  }
  if (!config.gravity.allFinite()) {
    throw ConfigError("gravity has non-finite entries");
  }

  KinematicChain chain = extractChain(parseUrdf(config.robot_description),
                                      config.root, config.tip);
  for (const auto& w : chain.warnings) log::warn(w.message);

  const int dof = chain.dof();
  if (config.friction && config.friction->size() != dof) {
    throw ConfigError("friction has " +
                      std::to_string(config.friction->size()) +
                      " entries, chain has dof " + std::to_string(dof));
  }
  if (config.drive_gains && config.drive_gains->size() != dof) {
    throw ConfigError("drive_gains has " +
                      std::to_string(config.drive_gains->size()) +
                      " entries, chain has dof " + std::to_string(dof));
  }

  return it->second(config, std::move(chain));
}

SolverRegistry& defaultRegistry() {
  static SolverRegistry registry = SolverRegistry::withBuiltins();
  return registry;
}

void registerSolver(const std::string& name, SolverFactory factory) {
  defaultRegistry().registerSolver(name, std::move(factory));
}

std::unique_ptr<InverseDynamicsSolver> createSolver(const SolverConfig& config) {
  return defaultRegistry().create(config);
}

}  // namespace dynsolve
