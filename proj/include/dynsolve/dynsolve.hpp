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

#include "dynsolve/builtin_solvers.hpp"
#include "dynsolve/errors.hpp"
#include "dynsolve/friction.hpp"
#include "dynsolve/kinematic_chain.hpp"
#include "dynsolve/log.hpp"
#include "dynsolve/registry.hpp"
#include "dynsolve/report.hpp"
#include "dynsolve/rnea.hpp"
#include "dynsolve/robot_model.hpp"
#include "dynsolve/solver.hpp"
#include "dynsolve/solver_config.hpp"
#include "dynsolve/spatial_inertia.hpp"
#include "dynsolve/trajectory.hpp"
