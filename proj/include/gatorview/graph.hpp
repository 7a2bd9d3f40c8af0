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
#include <set>
#include <string>
#include <vector>

#include "gatorview/type_graph.hpp"
#include "gatorview/types.hpp"

namespace gatorview {

enum class ChangeKind {
  NodeCreated,
  NodeDeleted,
  EdgeAdded,
  EdgeRemoved,
  AttributeChanged,
};

std::string to_string(ChangeKind kind);

/// One atomic graph change. Creation events carry the data needed to replay
/// them bit-for-bit (explicit ids, types, initial attributes). Deletion
/// events are enriched at apply time with a snapshot of the deleted node's
/// former neighborhood so backward look-ups still work after the node is
/// gone.
struct ChangeEvent {
  ChangeKind kind = ChangeKind::NodeCreated;
  NodeId node = 0;   // node-created / node-deleted / attribute-changed
  EdgeId edge = 0;   // edge-added / edge-removed
  std::string type;  // node or edge type name
  NodeId src = 0;    // edge endpoints
  NodeId dst = 0;
  std::string attr;
  AttrValue value;
  std::map<std::string, AttrValue> attrs;  // initial attributes on creation
  std::string module;                      // origin for view-node creation
  std::vector<NodeId> neighbors;           // deletion snapshot: former adjacent node ids

  static ChangeEvent create_node(std::string type,
                                 std::map<std::string, AttrValue> attrs = {},
                                 NodeId id = 0, std::string module = {});
  static ChangeEvent delete_node(NodeId id);
  static ChangeEvent add_edge(std::string type, NodeId src, NodeId dst, EdgeId id = 0);
  static ChangeEvent remove_edge(EdgeId id);
  static ChangeEvent set_attr(NodeId id, std::string attr, AttrValue value);
};

struct Node {
  NodeId id = 0;
  std::string type;
  std::map<std::string, AttrValue> attrs;
  std::string module;    // view nodes: module of origin; empty on base nodes
  bool obsolete = false; // view nodes only
  /// Targets this marker marked before Update mode stripped its role edges
  /// and scopes; Delete mode reports them as previously marked.
  std::vector<NodeId> former_marked;

  bool operator==(const Node&) const = default;
};

struct Edge {
  EdgeId id = 0;
  std::string type;
  NodeId src = 0;
  NodeId dst = 0;

  bool operator==(const Edge&) const = default;
};

/// Typed property graph holding the base layer and the view layer, plus the
/// pending change log that drives maintenance.
///
/// Deletion semantics: deleting a node removes its incident base-layer edges
/// and its own outgoing view-role/scope edges, each emitting an edge-removed
/// event. Incoming view-role/scope edges from other markers are left
/// dangling on purpose; the Delete maintenance phase resolves them. The
/// in-edge index keeps entries for deleted targets alive until the dangling
/// edges themselves disappear, so backward look-ups keep working.
///
/// Single-writer: mutations and maintenance run on one thread of control.
class Graph {
 public:
  explicit Graph(const TypeGraph* types) : types_(types) {}

  const TypeGraph& types() const { return *types_; }
  void rebind_types(const TypeGraph* types) { types_ = types; }

  /// Applies a change and returns the enriched event (assigned ids, deletion
  /// snapshot). Cascaded edge removals are applied before the node-deleted
  /// event itself. Does not touch the pending log.
  ChangeEvent apply(ChangeEvent ev);

  /// External mutation entry: applies the change, appends the enriched event
  /// (and any cascaded edge removals) to the pending change log. Rejected
  /// while maintenance is running.
  ChangeEvent apply_change(ChangeEvent ev);

  // Convenience wrappers over apply() — engine-internal, unlogged.
  NodeId create_node(const std::string& type, std::map<std::string, AttrValue> attrs = {});
  NodeId create_view_node(const std::string& type, const std::string& module);
  void delete_node(NodeId id);
  EdgeId add_edge(const std::string& type, NodeId src, NodeId dst);
  void remove_edge(EdgeId id);
  void set_attribute(NodeId id, const std::string& attr, AttrValue value);

  bool has_node(NodeId id) const { return nodes_.count(id) > 0; }
  bool has_edge(EdgeId id) const { return edges_.count(id) > 0; }
  const Node& node(NodeId id) const;
  Node& node_mut(NodeId id);
  const Edge& edge(EdgeId id) const;
  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }

  const std::vector<EdgeId>& out_edges(NodeId id) const;
  /// Incoming edges; valid also for already-deleted ids while dangling view
  /// edges still reference them.
  const std::vector<EdgeId>& in_edges(NodeId id) const;

  NodeLayer node_layer(NodeId id) const { return types_->node_layer(node(id).type); }
  EdgeLayer edge_layer(const Edge& e) const { return types_->edge_layer(e.type); }

  /// Every view-layer node owning a role edge or scope targeting `id`.
  /// Works for deleted ids through the persisting in-edge index.
  std::set<NodeId> backward_marks(NodeId id) const;

  // Pending change log.
  const std::vector<ChangeEvent>& pending() const { return pending_; }
  std::vector<ChangeEvent> drain_pending();
  void set_maintenance_active(bool active) { maintenance_active_ = active; }
  bool maintenance_active() const { return maintenance_active_; }

  // Id counters, exposed for snapshot round-trips.
  NodeId next_node_id() const { return next_node_; }
  EdgeId next_edge_id() const { return next_edge_; }
  void set_counters(NodeId next_node, EdgeId next_edge);

  /// Copy with only the base layer (ids and counters preserved); the
  /// starting point for batch recomputation oracles.
  Graph clone_base() const;

  /// Structural equality: nodes, edges, flags and counters. The pending log
  /// is not part of the structure.
  bool structurally_equal(const Graph& other) const;

 private:
  ChangeEvent apply_impl(ChangeEvent ev, bool log);
  void insert_edge_record(Edge e);
  void erase_edge_record(EdgeId id);
  void check_attr(const std::string& node_type, const std::string& attr,
                  const AttrValue& value) const;

  const TypeGraph* types_;
  std::map<NodeId, Node> nodes_;
  std::map<EdgeId, Edge> edges_;
  std::map<NodeId, std::vector<EdgeId>> out_;
  std::map<NodeId, std::vector<EdgeId>> in_;
  NodeId next_node_ = 1;
  EdgeId next_edge_ = 1;
  std::vector<ChangeEvent> pending_;
  bool maintenance_active_ = false;
};

}  // namespace gatorview
