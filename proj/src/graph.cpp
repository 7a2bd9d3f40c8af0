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

#include "gatorview/graph.hpp"

#include <algorithm>

namespace gatorview {

std::string to_string(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::NodeCreated: return "node-created";
    case ChangeKind::NodeDeleted: return "node-deleted";
    case ChangeKind::EdgeAdded: return "edge-added";
    case ChangeKind::EdgeRemoved: return "edge-removed";
    default: return "attr-changed";
  }
}

ChangeEvent ChangeEvent::create_node(std::string type, std::map<std::string, AttrValue> attrs,
                                     NodeId id, std::string module) {
  ChangeEvent ev;
  ev.kind = ChangeKind::NodeCreated;
  ev.type = std::move(type);
  ev.attrs = std::move(attrs);
  ev.node = id;
  ev.module = std::move(module);
  return ev;
}

ChangeEvent ChangeEvent::delete_node(NodeId id) {
  ChangeEvent ev;
  ev.kind = ChangeKind::NodeDeleted;
  ev.node = id;
  return ev;
}

ChangeEvent ChangeEvent::add_edge(std::string type, NodeId src, NodeId dst, EdgeId id) {
  ChangeEvent ev;
  ev.kind = ChangeKind::EdgeAdded;
  ev.type = std::move(type);
  ev.src = src;
  ev.dst = dst;
  ev.edge = id;
  return ev;
}

ChangeEvent ChangeEvent::remove_edge(EdgeId id) {
  ChangeEvent ev;
  ev.kind = ChangeKind::EdgeRemoved;
  ev.edge = id;
  return ev;
}

ChangeEvent ChangeEvent::set_attr(NodeId id, std::string attr, AttrValue value) {
  ChangeEvent ev;
  ev.kind = ChangeKind::AttributeChanged;
  ev.node = id;
  ev.attr = std::move(attr);
  ev.value = std::move(value);
  return ev;
}

const Node& Graph::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw ValidationError("unknown node id " + std::to_string(id));
  return it->second;
}

Node& Graph::node_mut(NodeId id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw ValidationError("unknown node id " + std::to_string(id));
  return it->second;
}

const Edge& Graph::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw ValidationError("unknown edge id " + std::to_string(id));
  return it->second;
}

const std::vector<EdgeId>& Graph::out_edges(NodeId id) const {
  static const std::vector<EdgeId> empty;
  auto it = out_.find(id);
  return it == out_.end() ? empty : it->second;
}

const std::vector<EdgeId>& Graph::in_edges(NodeId id) const {
  static const std::vector<EdgeId> empty;
  auto it = in_.find(id);
  return it == in_.end() ? empty : it->second;
}

std::set<NodeId> Graph::backward_marks(NodeId id) const {
  std::set<NodeId> marks;
  for (EdgeId eid : in_edges(id)) {
    const Edge& e = edges_.at(eid);
    EdgeLayer layer = edge_layer(e);
    if (layer == EdgeLayer::ViewRole || layer == EdgeLayer::Scope) marks.insert(e.src);
  }
  return marks;
}

void Graph::check_attr(const std::string& node_type, const std::string& attr,
                       const AttrValue& value) const {
  const AttributeDef* def = types_->find_attribute(node_type, attr);
  if (!def)
    throw ValidationError("attribute '" + attr + "' not declared on node type " + node_type);
  if (def->kind != kind_of(value))
    throw ValidationError("attribute '" + attr + "' of " + node_type + " expects " +
                          to_string(def->kind) + " values");
}

void Graph::insert_edge_record(Edge e) {
  out_[e.src].push_back(e.id);
  in_[e.dst].push_back(e.id);
  edges_.emplace(e.id, std::move(e));
}

void Graph::erase_edge_record(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) return;
  const Edge& e = it->second;
  auto drop = [id](std::map<NodeId, std::vector<EdgeId>>& index, NodeId key) {
    auto vit = index.find(key);
    if (vit == index.end()) return;
    auto& vec = vit->second;
    vec.erase(std::remove(vec.begin(), vec.end(), id), vec.end());
    if (vec.empty()) index.erase(vit);
  };
  drop(out_, e.src);
  drop(in_, e.dst);
  edges_.erase(it);
}

ChangeEvent Graph::apply(ChangeEvent ev) { return apply_impl(std::move(ev), false); }

ChangeEvent Graph::apply_change(ChangeEvent ev) {
  if (maintenance_active_)
    throw ValidationError("changes are rejected while maintenance is running");
  return apply_impl(std::move(ev), true);
}

ChangeEvent Graph::apply_impl(ChangeEvent ev, bool log) {
  switch (ev.kind) {
    case ChangeKind::NodeCreated: {
      if (!types_->has_node_type(ev.type))
        throw ValidationError("unknown node type: " + ev.type);
      if (ev.node == 0) ev.node = next_node_;
      if (nodes_.count(ev.node))
        throw ValidationError("duplicate node id " + std::to_string(ev.node));
      next_node_ = std::max(next_node_, ev.node + 1);
      NodeLayer layer = types_->node_layer(ev.type);
      if (layer == NodeLayer::View && ev.module.empty())
        throw ValidationError("view node of type " + ev.type + " needs a module of origin");
      if (layer == NodeLayer::Base && !ev.module.empty())
        throw ValidationError("base nodes do not carry a module of origin");
      for (const auto& [name, value] : ev.attrs) check_attr(ev.type, name, value);
      Node n;
      n.id = ev.node;
      n.type = ev.type;
      n.attrs = ev.attrs;
      n.module = ev.module;
      nodes_.emplace(n.id, std::move(n));
      break;
    }
    case ChangeKind::NodeDeleted: {
      const Node& n = node(ev.node);
      ev.type = n.type;
      // Snapshot the former neighborhood before any cascade.
      std::set<NodeId> neighbors;
      std::vector<EdgeId> cascade;
      for (EdgeId eid : out_edges(ev.node)) {
        const Edge& e = edges_.at(eid);
        if (has_node(e.dst)) neighbors.insert(e.dst);
        cascade.push_back(eid);  // own edges always go (base + owned view edges)
      }
      for (EdgeId eid : in_edges(ev.node)) {
        const Edge& e = edges_.at(eid);
        neighbors.insert(e.src);
        // Incoming view-role/scope edges stay dangling until the Delete
        // phase; incoming base edges are cascaded away.
        if (edge_layer(e) == EdgeLayer::Base) cascade.push_back(eid);
      }
      neighbors.erase(ev.node);
      ev.neighbors.assign(neighbors.begin(), neighbors.end());
      std::sort(cascade.begin(), cascade.end());
      cascade.erase(std::unique(cascade.begin(), cascade.end()), cascade.end());
      for (EdgeId eid : cascade) {
        ChangeEvent removal = ChangeEvent::remove_edge(eid);
        const Edge& e = edges_.at(eid);
        removal.type = e.type;
        removal.src = e.src;
        removal.dst = e.dst;
        erase_edge_record(eid);
        if (log) pending_.push_back(std::move(removal));
      }
      nodes_.erase(ev.node);
      out_.erase(ev.node);
      break;
    }
    case ChangeKind::EdgeAdded: {
      const EdgeTypeDef& et = types_->edge_type(ev.type);
      if (ev.edge == 0) ev.edge = next_edge_;
      if (edges_.count(ev.edge))
        throw ValidationError("duplicate edge id " + std::to_string(ev.edge));
      next_edge_ = std::max(next_edge_, ev.edge + 1);
      const Node& src = node(ev.src);
      const Node& dst = node(ev.dst);
      if (et.layer == EdgeLayer::Scope) {
        if (types_->node_layer(src.type) != NodeLayer::View)
          throw ValidationError("scopes must be owned by view-layer nodes");
      } else {
        if (!types_->conforms(src.type, et.source_type))
          throw ValidationError("edge type " + ev.type + " expects source " + et.source_type +
                                ", got " + src.type);
        if (!types_->conforms(dst.type, et.target_type))
          throw ValidationError("edge type " + ev.type + " expects target " + et.target_type +
                                ", got " + dst.type);
      }
      insert_edge_record(Edge{ev.edge, ev.type, ev.src, ev.dst});
      break;
    }
    case ChangeKind::EdgeRemoved: {
      const Edge& e = edge(ev.edge);
      ev.type = e.type;
      ev.src = e.src;
      ev.dst = e.dst;
      erase_edge_record(ev.edge);
      break;
    }
    case ChangeKind::AttributeChanged: {
      Node& n = node_mut(ev.node);
      check_attr(n.type, ev.attr, ev.value);
      n.attrs[ev.attr] = ev.value;
      break;
    }
  }
  if (log) pending_.push_back(ev);
  return ev;
}

NodeId Graph::create_node(const std::string& type, std::map<std::string, AttrValue> attrs) {
  return apply(ChangeEvent::create_node(type, std::move(attrs))).node;
}

NodeId Graph::create_view_node(const std::string& type, const std::string& module) {
  return apply(ChangeEvent::create_node(type, {}, 0, module)).node;
}

void Graph::delete_node(NodeId id) { apply(ChangeEvent::delete_node(id)); }

EdgeId Graph::add_edge(const std::string& type, NodeId src, NodeId dst) {
  return apply(ChangeEvent::add_edge(type, src, dst)).edge;
}

void Graph::remove_edge(EdgeId id) { apply(ChangeEvent::remove_edge(id)); }

void Graph::set_attribute(NodeId id, const std::string& attr, AttrValue value) {
  apply(ChangeEvent::set_attr(id, attr, std::move(value)));
}

std::vector<ChangeEvent> Graph::drain_pending() {
  std::vector<ChangeEvent> out;
  out.swap(pending_);
  return out;
}

void Graph::set_counters(NodeId next_node, EdgeId next_edge) {
  next_node_ = next_node;
  next_edge_ = next_edge;
}

Graph Graph::clone_base() const {
  Graph g(types_);
  for (const auto& [id, n] : nodes_)
    if (types_->node_layer(n.type) == NodeLayer::Base) g.nodes_.emplace(id, n);
  for (const auto& [id, e] : edges_) {
    if (edge_layer(e) != EdgeLayer::Base) continue;
    if (!g.nodes_.count(e.src) || !g.nodes_.count(e.dst)) continue;
    g.insert_edge_record(e);
  }
  g.next_node_ = next_node_;
  g.next_edge_ = next_edge_;
  return g;
}

bool Graph::structurally_equal(const Graph& other) const {
  return nodes_ == other.nodes_ && edges_ == other.edges_ &&
         next_node_ == other.next_node_ && next_edge_ == other.next_edge_;
}

}  // namespace gatorview
