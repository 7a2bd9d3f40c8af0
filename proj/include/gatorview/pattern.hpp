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

#include "gatorview/type_graph.hpp"
#include "gatorview/types.hpp"

namespace gatorview {

enum class Binding { Free, InputBound };
enum class AttrCmp { Eq, Ne };

struct AttributePredicate {
  std::string attribute;
  AttrCmp cmp = AttrCmp::Eq;
  AttrValue constant;

  bool holds(const AttrValue* actual) const;
  bool operator==(const AttributePredicate&) const = default;
};

struct PatternNode {
  std::string var;
  std::string required_type;
  Binding binding = Binding::Free;
  std::vector<AttributePredicate> predicates;
  bool negated = false;

  bool operator==(const PatternNode&) const = default;
};

struct PatternEdge {
  std::string source_var;
  std::string target_var;
  std::string edge_type;
  bool negated = false;

  bool operator==(const PatternEdge&) const = default;
};

struct RoleSpec {
  std::string edge_type;
  std::string var;

  bool operator==(const RoleSpec&) const = default;
};

/// How matches are materialized: one marker node, a typed role edge per
/// role-bearing var, an untyped scope per remaining positive var. Role edges
/// in declaration order form the marker's duplicate key; scopes stay outside
/// the key.
struct MarkingSpec {
  std::string marker_type;
  std::vector<RoleSpec> role_edges;
  std::vector<std::string> scoped_vars;

  bool operator==(const MarkingSpec&) const = default;
};

/// Left-hand-side graph condition plus marking instructions. The positive
/// part must be a connected graph; negated elements express simple NACs and
/// must attach directly to positive nodes (anything larger is split across
/// modules at network level).
struct Pattern {
  std::string name;
  std::vector<PatternNode> nodes;
  std::vector<PatternEdge> edges;
  MarkingSpec marking;

  const PatternNode* find_node(const std::string& var) const;
  std::vector<std::string> positive_vars() const;
  std::vector<std::string> input_bound_vars() const;

  /// Full structural validation against a type graph. Throws ValidationError.
  void validate(const TypeGraph& types) const;

  bool operator==(const Pattern&) const = default;
};

/// Injective binding of pattern vars to graph nodes.
struct Match {
  std::map<std::string, NodeId> bindings;

  bool operator==(const Match&) const = default;
  auto operator<=>(const Match&) const = default;
};

}  // namespace gatorview
