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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dynsolve/solver.hpp"

namespace dynsolve {

/// Builds a solver for an already-extracted chain. The config is passed for
/// plugin-specific parameters (friction, gains, units).
using SolverFactory = std::function<std::unique_ptr<InverseDynamicsSolver>(
    const SolverConfig&, KinematicChain)>;

/// Name-keyed solver factories.
///
/// Mutate only during startup; afterwards the registry is read-only and may
/// be shared across threads.
class SolverRegistry {
 public:
  /// Registry holding "generic", "ur10-current" and "franka-friction".
  static SolverRegistry withBuiltins();

  /// Add or replace a factory. Replacing logs a warning. Throws ConfigError
  /// for an empty name.
  void registerSolver(const std::string& name, SolverFactory factory);

  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Parse the description, extract the (root, tip) chain and hand it to the
  /// named factory.
  ///
  /// Throws UnknownPluginError, ConfigError for invalid gravity or parameter
  /// sizes, MissingParamError for absent plugin requirements, and any error
  /// from parseUrdf() / extractChain().
  std::unique_ptr<InverseDynamicsSolver> create(
      const SolverConfig& config) const;

 private:
  std::map<std::string, SolverFactory> factories_;
};

/// Process-wide registry, pre-populated with the built-in solvers.
SolverRegistry& defaultRegistry();

void registerSolver(const std::string& name, SolverFactory factory);

std::unique_ptr<InverseDynamicsSolver> createSolver(const SolverConfig& config);

}  // namespace dynsolve
