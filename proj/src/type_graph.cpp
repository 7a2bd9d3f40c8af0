// Copyright 2026 The Gatorview Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatorview/type_graph.hpp"

#include <set>

namespace gatorview {

AttrKind kind_of(const AttrValue& value) {
  switch (value.index()) {
    case 0: return AttrKind::String;
    case 1: return AttrKind::Integer;
    default: return AttrKind::Boolean;
  }
}

std::string attr_to_string(const AttrValue& value) {
  switch (value.index()) {
    case 0: return std::get<std::string>(value);
    case 1: return std::to_string(std::get<std::int64_t>(value));
    default: return std::get<bool>(value) ? "true" : "false";
  }
}

std::string to_string(NodeLayer layer) {
  return layer == NodeLayer::Base ? "base" : "view";
}

std::string to_string(EdgeLayer layer) {
  switch (layer) {
    case EdgeLayer::Base: return "base";
    case EdgeLayer::ViewRole: return "view-role";
    default: return "scope";
  }
}

std::string to_string(AttrKind kind) {
  switch (kind) {
    case AttrKind::String: return "string";
    case AttrKind::Integer: return "integer";
    default: return "boolean";
  }
}

void TypeGraph::add_node_type(NodeTypeDef def) {
  if (def.name.empty()) throw ValidationError("node type with empty name");
  if (node_types_.count(def.name))
    throw ValidationError("duplicate node type: " + def.name);
  node_types_.emplace(def.name, std::move(def));
}

void TypeGraph::add_edge_type(EdgeTypeDef def) {
  if (def.name.empty()) throw ValidationError("edge type with empty name");
  if (def.name == kScopeEdge)
    throw ValidationError("'scope' is a built-in edge kind and cannot be declared");
  if (edge_types_.count(def.name))
    throw ValidationError("duplicate edge type: " + def.name);
  edge_types_.emplace(def.name, std::move(def));
}

void TypeGraph::validate() const {
  for (const auto& [name, def] : node_types_) {
    if (!def.supertype.empty()) {
      auto it = node_types_.find(def.supertype);
      if (it == node_types_.end())
        throw ValidationError("unknown supertype '" + def.supertype + "' of node type " + name);
      if (it->second.layer != def.layer)
        throw ValidationError("node type " + name + " and its supertype differ in layer");
    }
    // Walk the chain to reject cycles.
    std::set<std::string> seen{name};
    const NodeTypeDef* cur = &def;
    while (!cur->supertype.empty()) {
      if (!seen.insert(cur->supertype).second)
        throw ValidationError("supertype cycle through node type " + name);
      cur = &node_types_.at(cur->supertype);
    }
    // Attribute names unique including inherited ones.
    std::set<std::string> attrs;
    cur = &def;
    while (true) {
      for (const auto& a : cur->attributes)
        if (!attrs.insert(a.name).second)
          throw ValidationError("attribute '" + a.name + "' redeclared along hierarchy of " + name);
      if (cur->supertype.empty()) break;
      cur = &node_types_.at(cur->supertype);
    }
  }
  for (const auto& [name, def] : edge_types_) {
    if (!node_types_.count(def.source_type))
      throw ValidationError("edge type " + name + " has unknown source type " + def.source_type);
    if (!node_types_.count(def.target_type))
      throw ValidationError("edge type " + name + " has unknown target type " + def.target_type);
    NodeLayer src = node_types_.at(def.source_type).layer;
    NodeLayer dst = node_types_.at(def.target_type).layer;
    switch (def.layer) {
      case EdgeLayer::Base:
        if (src != NodeLayer::Base || dst != NodeLayer::Base)
          throw ValidationError("base edge type " + name + " must connect base node types");
        break;
      case EdgeLayer::ViewRole:
        if (src != NodeLayer::View)
          throw ValidationError("view-role edge type " + name + " must have a view-layer source type");
        break;
      case EdgeLayer::Scope:
        throw ValidationError("scope edges are built in; edge type " + name + " must not declare layer scope");
    }
  }
}

bool TypeGraph::has_node_type(const std::string& name) const {
  return node_types_.count(name) > 0;
}

bool TypeGraph::has_edge_type(const std::string& name) const {
  return name == kScopeEdge || edge_types_.count(name) > 0;
}

const NodeTypeDef& TypeGraph::node_type(const std::string& name) const {
  auto it = node_types_.find(name);
  if (it == node_types_.end()) throw ValidationError("unknown node type: " + name);
  return it->second;
}

const EdgeTypeDef& TypeGraph::edge_type(const std::string& name) const {
  if (name == kScopeEdge) {
    static const EdgeTypeDef scope{kScopeEdge, "", "", EdgeLayer::Scope};
    return scope;
  }
  auto it = edge_types_.find(name);
  if (it == edge_types_.end()) throw ValidationError("unknown edge type: " + name);
  return it->second;
}

bool TypeGraph::conforms(const std::string& actual, const std::string& required) const {
  const NodeTypeDef* cur = &node_type(actual);
  node_type(required);  // both must resolve
  while (true) {
    if (cur->name == required) return true;
    if (cur->supertype.empty()) return false;
    cur = &node_type(cur->supertype);
  }
}

const AttributeDef* TypeGraph::find_attribute(const std::string& node_type_name,
                                              const std::string& attr) const {
  const NodeTypeDef* cur = &node_type(node_type_name);
  while (true) {
    for (const auto& a : cur->attributes)
      if (a.name == attr) return &a;
    if (cur->supertype.empty()) return nullptr;
    cur = &node_type(cur->supertype);
  }
}

NodeLayer TypeGraph::node_layer(const std::string& type_name) const {
  return node_type(type_name).layer;
}

EdgeLayer TypeGraph::edge_layer(const std::string& type_name) const {
  return edge_type(type_name).layer;
}

std::vector<std::string> TypeGraph::subtypes_of(const std::string& required) const {
  std::vector<std::string> out;
  for (const auto& [name, def] : node_types_)
    if (conforms(name, required)) out.push_back(name);
  return out;
}

bool type_conforms(const TypeGraph& types, const std::string& actual,
                   const std::string& required) {
  return types.conforms(actual, required);
}

}  // namespace gatorview
