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

#include "dynsolve/solver_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dynsolve/errors.hpp"
#include "dynsolve/log.hpp"

namespace dynsolve {
namespace {

using nlohmann::json;

std::string readFile(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open ") + what + " '" +
                         path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void warnUnknownKeys(const json& object, const std::set<std::string>& known,
                     const std::string& context) {
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) {
      log::warn("ignoring unknown key '" + key + "' in " + context);
    }
  }
}

const json& require(const json& object, const char* key) {
  if (!object.contains(key)) {
    throw ConfigError(std::string("missing required key '") + key + "'");
  }
  return object.at(key);
}

std::string requireString(const json& object, const char* key) {
  const json& v = require(object, key);
  if (!v.is_string()) {
    throw ConfigError(std::string("'") + key + "' must be a string");
  }
  return v.get<std::string>();
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ConfigError(what + " must be a number");
  return v.get<double>();
}

Eigen::VectorXd numberArray(const json& v, const std::string& what) {
  if (!v.is_array()) throw ConfigError(what + " must be an array of numbers");
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) =
        number(v[i], what + "[" + std::to_string(i) + "]");
  }
  return out;
}

double param(const json& params, const char* key, const std::string& context,
             std::optional<double> fallback = std::nullopt) {
  if (!params.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(context + " is missing parameter '" + key + "'");
  }
  return number(params.at(key), context + "." + key);
}

JointFriction parseJointFriction(const json& entry, std::size_t index) {
  const std::string context = "friction[" + std::to_string(index) + "]";
  if (!entry.is_object()) throw ConfigError(context + " must be an object");
  warnUnknownKeys(entry, {"model", "params"}, context);
  const std::string model = requireString(entry, "model");
  const json params = entry.value("params", json::object());
  if (!params.is_object()) {
    throw ConfigError(context + ".params must be an object");
  }

  JointFriction result;
  if (model == "none") {
    result = NoFriction{};
  } else if (model == "viscous-coulomb") {
    warnUnknownKeys(params, {"Fv", "Fc", "vEps"}, context);
    result = ViscousCoulomb{param(params, "Fv", context),
                            param(params, "Fc", context),
                            param(params, "vEps", context, 1e-3)};
  } else if (model == "asymmetric-sigmoid") {
    warnUnknownKeys(params, {"phi1", "phi2", "phi3"}, context);
    result = AsymmetricSigmoid{param(params, "phi1", context),
                               param(params, "phi2", context),
                               param(params, "phi3", context)};
  } else {
    throw ConfigError(context + " has unknown model '" + model + "'");
  }
  try {
    validateFriction(result);
  } catch (const InputError& e) {
    throw ConfigError(context + ": " + e.what());
  }
  return result;
}

}  // namespace

SolverConfig parseSolverConfig(std::string_view json_text,
                               const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid configuration JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("configuration must be an object");

  warnUnknownKeys(doc,
                  {"plugin_name", "robot_description_path", "root", "tip",
                   "gravity", "friction", "drive_gains", "friction_units"},
                  "configuration");

  SolverConfig config;
  config.plugin_name = requireString(doc, "plugin_name");
  config.robot_description_path = requireString(doc, "robot_description_path");
  config.root = requireString(doc, "root");
  config.tip = requireString(doc, "tip");

  const Eigen::VectorXd g = numberArray(require(doc, "gravity"), "gravity");
  if (g.size() != 3) throw ConfigError("gravity must have 3 entries");
  if (!g.allFinite()) throw ConfigError("gravity has non-finite entries");
  config.gravity = g;

  if (doc.contains("friction")) {
    const json& f = doc.at("friction");
    if (!f.is_array()) throw ConfigError("'friction' must be an array");
    FrictionParams params;
    for (std::size_t i = 0; i < f.size(); ++i) {
      params.joints.push_back(parseJointFriction(f[i], i));
    }
    config.friction = std::move(params);
  }
  if (doc.contains("drive_gains")) {
    try {
      config.drive_gains.emplace(
          numberArray(doc.at("drive_gains"), "drive_gains"));
    } catch (const InputError& e) {
      throw ConfigError(std::string("drive_gains: ") + e.what());
    }
  }
  if (doc.contains("friction_units")) {
    const json& u = doc.at("friction_units");
    if (u == "torque") {
      config.friction_units = FrictionUnits::Torque;
    } else if (u == "current") {
      config.friction_units = FrictionUnits::Current;
    } else {
      throw ConfigError("friction_units must be \"torque\" or \"current\"");
    }
  }

  std::filesystem::path description(config.robot_description_path);
  if (description.is_relative()) description = base_dir / description;
  config.robot_description = readFile(description, "robot description");
  return config;
}

SolverConfig loadSolverConfig(const std::filesystem::path& path) {
  return parseSolverConfig(readFile(path, "solver configuration"),
                           path.parent_path());
}

nlohmann::ordered_json configToJson(const SolverConfig& config) {
  nlohmann::ordered_json out;
  out["plugin_name"] = config.plugin_name;
  out["robot_description_path"] = config.robot_description_path;
  out["root"] = config.root;
  out["tip"] = config.tip;
  out["gravity"] = {config.gravity.x(), config.gravity.y(), config.gravity.z()};
  if (config.friction) {
    auto& friction = out["friction"] = nlohmann::ordered_json::array();
    for (const auto& joint : config.friction->joints) {
      nlohmann::ordered_json entry;
      entry["model"] = frictionModelName(joint);
      if (const auto* vc = std::get_if<ViscousCoulomb>(&joint)) {
        entry["params"] = {{"Fv", vc->viscous},
                           {"Fc", vc->coulomb},
                           {"vEps", vc->smoothing}};
      } else if (const auto* s = std::get_if<AsymmetricSigmoid>(&joint)) {
        entry["params"] = {{"phi1", s->phi1}, {"phi2", s->phi2},
                           {"phi3", s->phi3}};
      }
      friction.push_back(std::move(entry));
    }
  }
  if (config.drive_gains) {
    const auto& k = config.drive_gains->values();
    out["drive_gains"] = std::vector<double>(k.data(), k.data() + k.size());
  }
  if (config.friction_units) {
    out["friction_units"] = toString(*config.friction_units);
  }
  return out;
}

}  // namespace dynsolve
