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

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include <expat.h>

#include "dynsolve/errors.hpp"
#include "dynsolve/robot_model.hpp"

namespace dynsolve {
namespace {

constexpr double kAxisWarnTolerance = 1e-6;
constexpr double kInertiaEigenTolerance = 1e-9;

struct Element {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::size_t line = 0;

  const Element* child(std::string_view tag) const {
    for (const auto& c : children) {
      if (c->name == tag) return c.get();
    }
    return nullptr;
  }

  const std::string* attribute(const std::string& key) const {
    auto it = attributes.find(key);
    return it == attributes.end() ? nullptr : &it->second;
  }

  const std::string& requireAttribute(const std::string& key) const {
    const std::string* value = attribute(key);
    if (value == nullptr) {
      throw ParseError("<" + name + "> is missing attribute '" + key + "'",
                       line);
    }
    return *value;
  }
};

// Minimal DOM built from expat callbacks. Character data is not needed for
// the URDF subset and is dropped.
class DomBuilder {
 public:
  std::unique_ptr<Element> parse(std::string_view xml) {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    if (!parser) throw ParseError("cannot allocate XML parser", 0);
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &DomBuilder::onStart, &DomBuilder::onEnd);

    if (xml.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
      throw ParseError("document too large", 0);
    }
    const auto status = XML_Parse(parser_, xml.data(),
                                  static_cast<int>(xml.size()), XML_TRUE);
    if (status != XML_STATUS_OK) {
      const auto line = XML_GetCurrentLineNumber(parser_);
      throw ParseError(XML_ErrorString(XML_GetErrorCode(parser_)),
                       static_cast<std::size_t>(line));
    }
    if (!root_) throw ParseError("empty document", 1);
    return std::move(root_);
  }

 private:
  static void XMLCALL onStart(void* user, const XML_Char* name,
                              const XML_Char** attrs) {
    auto* self = static_cast<DomBuilder*>(user);
    auto element = std::make_unique<Element>();
    element->name = name;
    element->line =
        static_cast<std::size_t>(XML_GetCurrentLineNumber(self->parser_));
    for (int i = 0; attrs[i] != nullptr; i += 2) {
      element->attributes[attrs[i]] = attrs[i + 1];
    }
    Element* raw = element.get();
    if (self->stack_.empty()) {
      self->root_ = std::move(element);
    } else {
      self->stack_.back()->children.push_back(std::move(element));
    }
    self->stack_.push_back(raw);
  }

  static void XMLCALL onEnd(void* user, const XML_Char*) {
    static_cast<DomBuilder*>(user)->stack_.pop_back();
  }

  XML_Parser parser_ = nullptr;
  std::unique_ptr<Element> root_;
  std::vector<Element*> stack_;
};

std::vector<double> parseNumbers(const std::string& text, std::size_t line) {
  std::vector<double> values;
  const char* p = text.c_str();
  while (true) {
    while (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r') ++p;
    if (*p == '\0') break;
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(p, &end);
    if (end == p || errno == ERANGE) {
      throw ParseError("invalid number in '" + text + "'", line);
    }
    values.push_back(v);
    p = end;
    if (*p != '\0' && *p != ' ' && *p != '\t' && *p != '\n' && *p != '\r') {
      throw ParseError("invalid number in '" + text + "'", line);
    }
  }
  return values;
}

double parseScalar(const std::string& text, std::size_t line) {
  const auto values = parseNumbers(text, line);
  if (values.size() != 1) {
    throw ParseError("expected one number, got '" + text + "'", line);
  }
  return values.front();
}

Eigen::Vector3d parseVector3(const std::string& text, std::size_t line) {
  const auto values = parseNumbers(text, line);
  if (values.size() != 3) {
    throw ParseError("expected three numbers, got '" + text + "'", line);
  }
  return {values[0], values[1], values[2]};
}

Eigen::Vector3d vectorAttribute(const Element* e, const std::string& key) {
  if (e == nullptr) return Eigen::Vector3d::Zero();
  const std::string* value = e->attribute(key);
  return value ? parseVector3(*value, e->line) : Eigen::Vector3d::Zero();
}

SpatialInertia parseInertial(const Element& inertial,
                             const std::string& link_name) {
  const Element* origin = inertial.child("origin");
  const Eigen::Vector3d com = vectorAttribute(origin, "xyz");
  const Eigen::Vector3d rpy = vectorAttribute(origin, "rpy");

  const Element* mass_el = inertial.child("mass");
  if (mass_el == nullptr) {
    throw ParseError("<inertial> of link '" + link_name + "' has no <mass>",
                     inertial.line);
  }
  const double mass = parseScalar(mass_el->requireAttribute("value"),
                                  mass_el->line);

  Eigen::Matrix3d I = Eigen::Matrix3d::Zero();
  if (const Element* in = inertial.child("inertia")) {
    auto get = [&](const char* key) {
      return parseScalar(in->requireAttribute(key), in->line);
    };
    I << get("ixx"), get("ixy"), get("ixz"),  //
        get("ixy"), get("iyy"), get("iyz"),   //
        get("ixz"), get("iyz"), get("izz");
  }
  if (!std::isfinite(mass) || mass < 0.0) {
    throw ModelError("link '" + link_name + "' has invalid mass " +
                     std::to_string(mass));
  }
  if (!I.allFinite()) {
    throw ModelError("link '" + link_name + "' has non-finite inertia");
  }

  // The inertial frame sits at the COM; rotate its tensor into the link frame.
  const Eigen::Matrix3d R = rpyToRotation(rpy);
  SpatialInertia result(mass, com, R * I * R.transpose());
  if (result.minEigenvalue() < -kInertiaEigenTolerance) {
    throw ModelError("link '" + link_name +
                     "' has an inertia tensor with a negative eigenvalue");
  }
  return result;
}

JointKind parseJointKind(const std::string& type, const std::string& name,
                         bool& continuous) {
  continuous = false;
  if (type == "revolute") return JointKind::Revolute;
  if (type == "continuous") {
    continuous = true;
    return JointKind::Revolute;
  }
  if (type == "prismatic") return JointKind::Prismatic;
  if (type == "fixed") return JointKind::Fixed;
  throw UnsupportedJointError("joint '" + name + "' has unsupported type '" +
                              type + "'");
}

JointLimits parseLimits(const Element* limit) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  JointLimits limits = JointLimits::unbounded();
  if (limit == nullptr) return limits;
  auto get = [&](const char* key, double fallback) {
    const std::string* v = limit->attribute(key);
    return v ? parseScalar(*v, limit->line) : fallback;
  };
  // Missing lower/upper default to 0 as in URDF; effort/velocity to unbounded.
  limits.lower = get("lower", 0.0);
  limits.upper = get("upper", 0.0);
  limits.effort = get("effort", inf);
  limits.velocity = get("velocity", inf);
  return limits;
}

JointSpec parseJoint(const Element& e, std::vector<Diagnostic>& diagnostics) {
  JointSpec joint;
  joint.name = e.requireAttribute("name");
  bool continuous = false;
  joint.kind = parseJointKind(e.requireAttribute("type"), joint.name,
                              continuous);

  const Element* parent = e.child("parent");
  const Element* child = e.child("child");
  if (parent == nullptr || child == nullptr) {
    throw ParseError("joint '" + joint.name + "' needs <parent> and <child>",
                     e.line);
  }
  joint.parent = parent->requireAttribute("link");
  joint.child = child->requireAttribute("link");

  const Element* origin = e.child("origin");
  joint.origin_xyz = vectorAttribute(origin, "xyz");
  joint.origin_rpy = vectorAttribute(origin, "rpy");
  if (!joint.origin_xyz.allFinite() || !joint.origin_rpy.allFinite()) {
    throw ModelError("joint '" + joint.name + "' has a non-finite origin");
  }

  if (const Element* axis = e.child("axis")) {
    joint.axis = parseVector3(axis->requireAttribute("xyz"), axis->line);
  }
  if (joint.kind != JointKind::Fixed) {
    const double norm = joint.axis.norm();
    if (!std::isfinite(norm) || norm == 0.0) {
      throw ModelError("joint '" + joint.name + "' has a degenerate axis");
    }
    if (std::abs(norm - 1.0) > kAxisWarnTolerance) {
      diagnostics.push_back({Severity::Warning, joint.name,
                             "axis norm " + std::to_string(norm) +
                                 " is not unit; normalized"});
    }
    // Already-unit axes are kept bit-exact so that serialization round-trips.
    if (std::abs(norm - 1.0) > 4 * std::numeric_limits<double>::epsilon()) {
      joint.axis /= norm;
    }
  }

  joint.limits = parseLimits(e.child("limit"));
  if (continuous) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    joint.limits.lower = -inf;
    joint.limits.upper = inf;
  }
  return joint;
}

void checkTree(const RobotModel& model) {
  std::map<std::string, std::string> parent_of;  // child link -> joint
  for (const auto& [name, joint] : model.joints) {
    for (const auto* link : {&joint.parent, &joint.child}) {
      if (!model.links.contains(*link)) {
        throw ModelError("joint '" + name + "' references unknown link '" +
                         *link + "'");
      }
    }
    if (joint.parent == joint.child) {
      throw ModelError("joint '" + name + "' connects link '" + joint.parent +
                       "' to itself");
    }
    auto [it, inserted] = parent_of.emplace(joint.child, name);
    if (!inserted) {
      throw ModelError("link '" + joint.child + "' is the child of both '" +
                       it->second + "' and '" + name + "'");
    }
  }

  const std::string& root = model.rootLink();

  // With one parent per link and a single root, any link not reachable from
  // the root lies on a cycle.
  std::set<std::string> reached{root};
  std::vector<std::string> frontier{root};
  while (!frontier.empty()) {
    const std::string link = frontier.back();
    frontier.pop_back();
    for (const JointSpec* j : model.childJoints(link)) {
      if (reached.insert(j->child).second) frontier.push_back(j->child);
    }
  }
  if (reached.size() != model.links.size()) {
    for (const auto& [name, link] : model.links) {
      if (!reached.contains(name)) {
        throw ModelError("link graph has a cycle through link '" + name + "'");
      }
    }
  }
}

}  // namespace

RobotModel parseUrdf(std::string_view xml) {
  const std::unique_ptr<Element> root = DomBuilder().parse(xml);
  if (root->name != "robot") {
    throw ParseError("expected <robot> root element, found <" + root->name +
                         ">",
                     root->line);
  }

  RobotModel model;
  if (const std::string* name = root->attribute("name")) model.name = *name;

  for (const auto& e : root->children) {
    if (e->name == "link") {
      LinkSpec link;
      link.name = e->requireAttribute("name");
      if (const Element* inertial = e->child("inertial")) {
        link.inertia = parseInertial(*inertial, link.name);
      }
      const std::string key = link.name;
      if (!model.links.emplace(key, std::move(link)).second) {
        throw ModelError("duplicate link '" + key + "'");
      }
    } else if (e->name == "joint") {
      JointSpec joint = parseJoint(*e, model.diagnostics);
      const std::string key = joint.name;
      if (!model.joints.emplace(key, std::move(joint)).second) {
        throw ModelError("duplicate joint '" + key + "'");
      }
    }
  }
  if (model.links.empty()) throw ModelError("robot has no links");

  checkTree(model);
  return model;
}

RobotModel loadUrdf(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open robot description '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseUrdf(buffer.str());
}

}  // namespace dynsolve
