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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gatorview/types.hpp"

namespace gatorview {

struct AttributeDef {
  std::string name;
  AttrKind kind = AttrKind::String;

  bool operator==(const AttributeDef&) const = default;
};

/// Node type with single inheritance. An empty supertype means the type is a
/// root. Subtypes share their supertype's layer and inherit its attributes.
struct NodeTypeDef {
  std::string name;
  std::string supertype;  // empty: none
  NodeLayer layer = NodeLayer::Base;
  std::vector<AttributeDef> attributes;

  bool operator==(const NodeTypeDef&) const = default;
};

struct EdgeTypeDef {
  std::string name;
  std::string source_type;
  std::string target_type;
  EdgeLayer layer = EdgeLayer::Base;

  bool operator==(const EdgeTypeDef&) const = default;
};

/// Shared node/edge type hierarchy for base and view layers. Scopes are a
/// single built-in, untyped edge kind named "scope": any view node may own a
/// scope targeting any node, so the type is implicit and cannot be declared.
class TypeGraph {
 public:
  static constexpr const char* kScopeEdge = "scope";

  void add_node_type(NodeTypeDef def);
  void add_edge_type(EdgeTypeDef def);

  /// Checks the whole hierarchy: supertype resolution, acyclicity, layer
  /// agreement along inheritance, and edge endpoint layer rules (view-role
  /// edges have a view source; base edges connect base types).
  void validate() const;

  bool has_node_type(const std::string& name) const;
  bool has_edge_type(const std::string& name) const;
  const NodeTypeDef& node_type(const std::string& name) const;
  const EdgeTypeDef& edge_type(const std::string& name) const;

  /// true iff `actual` equals `required` or `required` is a transitive
  /// supertype of `actual`.
  bool conforms(const std::string& actual, const std::string& required) const;

  /// Attribute declared on the type or inherited; nullptr if absent.
  const AttributeDef* find_attribute(const std::string& node_type,
                                     const std::string& attr) const;

  NodeLayer node_layer(const std::string& type_name) const;
  EdgeLayer edge_layer(const std::string& type_name) const;

  const std::map<std::string, NodeTypeDef>& node_types() const { return node_types_; }
  const std::map<std::string, EdgeTypeDef>& edge_types() const { return edge_types_; }

  /// All node type names conforming to `required` (required itself included
  /// when declared), in name order.
  std::vector<std::string> subtypes_of(const std::string& required) const;

  bool operator==(const TypeGraph&) const = default;

 private:
  std::map<std::string, NodeTypeDef> node_types_;
  std::map<std::string, EdgeTypeDef> edge_types_;
};

/// Free-function form used throughout pattern matching.
bool type_conforms(const TypeGraph& types, const std::string& actual,
                   const std::string& required);

}  // namespace gatorview
