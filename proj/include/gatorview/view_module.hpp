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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gatorview/matcher.hpp"
#include "gatorview/pattern.hpp"

namespace gatorview {

enum class ConnectorDirection { Input, Output };

struct Connector {
  std::string name;
  std::string module;
  ConnectorDirection direction = ConnectorDirection::Input;
  std::string required_type;
  std::string binds_var;  // input connectors: the pattern var they seed

  bool operator==(const Connector&) const = default;
};

/// Encapsulated graph transformation rule: a pattern plus connectors. Input
/// connectors describe which kinds of nodes the rule needs and map 1:1 onto
/// the pattern's input-bound vars; the output connector carries the marker
/// type.
struct ViewModule {
  std::string name;
  Pattern pattern;
  std::vector<Connector> inputs;
  Connector output;

  const std::string& marker_type() const { return pattern.marking.marker_type; }
  const Connector* input_named(const std::string& connector_name) const;

  /// View-layer types negated by the pattern; producers of conforming
  /// markers become implicit negative dependencies (complex NACs).
  std::vector<std::string> negated_view_types(const TypeGraph& types) const;

  /// Types traversed by the complex-NAC reachability test: the positive
  /// pattern node types.
  std::set<std::string> positive_node_types() const;

  void validate(const TypeGraph& types) const;
};

/// Duplicate-marking index: (marker type, role-edge targets in declared role
/// order) -> marker node. Scoped nodes are outside the key. Mirrors the live
/// role edges; entries vanish when Update strips a marker or Delete removes
/// it.
class MarkerIndex {
 public:
  using Key = std::pair<std::string, std::vector<NodeId>>;

  /// Reads a marker's role-edge targets in the module's declared role order.
  /// nullopt when a role edge is missing (stripped or corrupt marker).
  static std::optional<std::vector<NodeId>> role_tuple(const Graph& graph,
                                                       const ViewModule& module,
                                                       NodeId marker);

  /// Rebuilds from an existing graph; markers of unknown modules are an
  /// error, stripped (obsolete) markers are skipped.
  void build(const Graph& graph, const std::map<std::string, const ViewModule*>& modules);

  bool contains(const Key& key) const { return map_.count(key) > 0; }
  std::optional<NodeId> find(const Key& key) const;
  void insert(Key key, NodeId marker);
  void erase_marker(const std::string& type, NodeId marker);

  std::size_t size() const { return map_.size(); }

 private:
  std::map<Key, NodeId> map_;
};

/// Create mode: searches for matches seeded by the candidate sets and marks
/// every match not already marked (at-most-once per duplicate key). Returns
/// the created marker ids in ascending order.
std::vector<NodeId> execute_create(const ViewModule& module, Graph& graph,
                                   const CandidateSets& candidates, MarkerIndex& index);

/// Update mode: re-checks each suspicious marker owned by the module. A
/// marker survives iff the pattern still matches with its role bindings
/// fixed (scoped nodes may rebind). Failures get the obsolete flag, lose all
/// role edges and scopes, and are returned.
std::vector<NodeId> execute_update(const ViewModule& module, Graph& graph,
                                   const std::set<NodeId>& suspicious, MarkerIndex& index);

/// Delete mode: removes obsolete or dangling markers and returns the nodes
/// they previously marked (still-existing ones).
std::set<NodeId> execute_delete(const ViewModule& module, Graph& graph,
                                const std::set<NodeId>& obsoletes, MarkerIndex& index);

/// true when the marker owns a role edge or scope whose target is gone.
bool has_dangling_mark(const Graph& graph, NodeId marker);

}  // namespace gatorview
