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

#include "gatorview/pattern.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace gatorview {

bool AttributePredicate::holds(const AttrValue* actual) const {
  // A missing attribute satisfies no equality and every inequality.
  bool equal = actual != nullptr && *actual == constant;
  return cmp == AttrCmp::Eq ? equal : !equal;
}

const PatternNode* Pattern::find_node(const std::string& var) const {
  for (const auto& n : nodes)
    if (n.var == var) return &n;
  return nullptr;
}

std::vector<std::string> Pattern::positive_vars() const {
  std::vector<std::string> out;
  for (const auto& n : nodes)
    if (!n.negated) out.push_back(n.var);
  return out;
}

std::vector<std::string> Pattern::input_bound_vars() const {
  std::vector<std::string> out;
  for (const auto& n : nodes)
    if (!n.negated && n.binding == Binding::InputBound) out.push_back(n.var);
  return out;
}

void Pattern::validate(const TypeGraph& types) const {
  if (nodes.empty()) throw ValidationError("pattern " + name + " has no nodes");
  std::set<std::string> vars;
  for (const auto& n : nodes) {
    if (n.var.empty()) throw ValidationError("pattern " + name + ": node with empty var");
    if (!vars.insert(n.var).second)
      throw ValidationError("pattern " + name + ": duplicate var " + n.var);
    const NodeTypeDef& def = types.node_type(n.required_type);
    if (n.negated && n.binding == Binding::InputBound)
      throw ValidationError("pattern " + name + ": negated var " + n.var + " cannot be input-bound");
    for (const auto& p : n.predicates) {
      const AttributeDef* attr = types.find_attribute(def.name, p.attribute);
      if (!attr)
        throw ValidationError("pattern " + name + ": predicate on unknown attribute " +
                              p.attribute + " of " + def.name);
      if (attr->kind != kind_of(p.constant))
        throw ValidationError("pattern " + name + ": predicate constant kind mismatch on " +
                              p.attribute);
    }
  }
  for (const auto& e : edges) {
    const PatternNode* s = find_node(e.source_var);
    const PatternNode* t = find_node(e.target_var);
    if (!s || !t)
      throw ValidationError("pattern " + name + ": edge references unknown var");
    const EdgeTypeDef& et = types.edge_type(e.edge_type);
    if (et.layer != EdgeLayer::Scope) {
      if (!types.conforms(s->required_type, et.source_type))
        throw ValidationError("pattern " + name + ": edge " + e.edge_type +
                              " source var " + e.source_var + " does not conform");
      if (!types.conforms(t->required_type, et.target_type))
        throw ValidationError("pattern " + name + ": edge " + e.edge_type +
                              " target var " + e.target_var + " does not conform");
    }
    if (!e.negated && (s->negated || t->negated))
      throw ValidationError("pattern " + name + ": positive edge touches negated var " +
                            (s->negated ? e.source_var : e.target_var));
  }

  // Positive part connected, checked over positive edges only.
  std::vector<std::string> positives = positive_vars();
  if (positives.empty()) throw ValidationError("pattern " + name + " has no positive nodes");
  std::set<std::string> reached{positives.front()};
  std::queue<std::string> work;
  work.push(positives.front());
  while (!work.empty()) {
    std::string cur = work.front();
    work.pop();
    for (const auto& e : edges) {
      if (e.negated) continue;
      std::string other;
      if (e.source_var == cur) other = e.target_var;
      else if (e.target_var == cur) other = e.source_var;
      else continue;
      if (reached.insert(other).second) work.push(other);
    }
  }
  for (const auto& v : positives)
    if (!reached.count(v))
      throw ValidationError("pattern " + name + ": positive part is not connected (var " + v + ")");

  // Simple-NAC shape: every negated node is directly adjacent to a positive one.
  for (const auto& n : nodes) {
    if (!n.negated) continue;
    bool attached = false;
    for (const auto& e : edges) {
      if (e.source_var == n.var && !find_node(e.target_var)->negated) attached = true;
      if (e.target_var == n.var && !find_node(e.source_var)->negated) attached = true;
    }
    if (!attached)
      throw ValidationError("pattern " + name + ": negated var " + n.var +
                            " is not directly connected to a positive node (complex NACs are "
                            "split at network level)");
  }

  // Marking: covers every positive var exactly once.
  if (marking.marker_type.empty())
    throw ValidationError("pattern " + name + ": marking has no marker type");
  const NodeTypeDef& marker = types.node_type(marking.marker_type);
  if (marker.layer != NodeLayer::View)
    throw ValidationError("pattern " + name + ": marker type must be view-layer");
  std::set<std::string> covered;
  std::set<std::string> role_types;
  for (const auto& r : marking.role_edges) {
    const PatternNode* v = find_node(r.var);
    if (!v || v->negated)
      throw ValidationError("pattern " + name + ": marking role targets unknown or negated var " + r.var);
    if (!covered.insert(r.var).second)
      throw ValidationError("pattern " + name + ": var " + r.var + " marked twice");
    if (!role_types.insert(r.edge_type).second)
      throw ValidationError("pattern " + name + ": role edge type " + r.edge_type + " used twice");
    const EdgeTypeDef& et = types.edge_type(r.edge_type);
    if (et.layer != EdgeLayer::ViewRole)
      throw ValidationError("pattern " + name + ": role edge type " + r.edge_type +
                            " is not a view-role edge");
    if (!types.conforms(marking.marker_type, et.source_type))
      throw ValidationError("pattern " + name + ": marker type does not own role edge " + r.edge_type);
    if (!types.conforms(v->required_type, et.target_type))
      throw ValidationError("pattern " + name + ": role edge " + r.edge_type +
                            " cannot target var " + r.var);
  }
  for (const auto& v : marking.scoped_vars) {
    const PatternNode* n = find_node(v);
    if (!n || n->negated)
      throw ValidationError("pattern " + name + ": marking scope targets unknown or negated var " + v);
    if (!covered.insert(v).second)
      throw ValidationError("pattern " + name + ": var " + v + " marked twice");
  }
  for (const auto& v : positives)
    if (!covered.count(v))
      throw ValidationError("pattern " + name + ": positive var " + v + " is not marked");
}

}  // namespace gatorview
