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

#include "gatorview/view_module.hpp"

#include <algorithm>

namespace gatorview {

const Connector* ViewModule::input_named(const std::string& connector_name) const {
  for (const auto& c : inputs)
    if (c.name == connector_name) return &c;
  return nullptr;
}

std::vector<std::string> ViewModule::negated_view_types(const TypeGraph& types) const {
  std::vector<std::string> out;
  for (const auto& n : pattern.nodes)
    if (n.negated && types.node_layer(n.required_type) == NodeLayer::View)
      out.push_back(n.required_type);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<std::string> ViewModule::positive_node_types() const {
  std::set<std::string> out;
  for (const auto& n : pattern.nodes)
    if (!n.negated) out.insert(n.required_type);
  return out;
}

void ViewModule::validate(const TypeGraph& types) const {
  if (name.empty()) throw ValidationError("view module with empty name");
  pattern.validate(types);
  if (output.required_type != pattern.marking.marker_type)
    throw ValidationError("module " + name + ": output connector must carry the marker type");

  std::vector<std::string> bound_vars = pattern.input_bound_vars();
  std::set<std::string> seen_vars;
  std::set<std::string> seen_names;
  for (const auto& c : inputs) {
    if (!seen_names.insert(c.name).second)
      throw ValidationError("module " + name + ": duplicate input connector " + c.name);
    if (c.binds_var.empty())
      throw ValidationError("module " + name + ": input connector " + c.name + " binds no var");
    const PatternNode* pn = pattern.find_node(c.binds_var);
    if (!pn || pn->negated || pn->binding != Binding::InputBound)
      throw ValidationError("module " + name + ": connector " + c.name +
                            " must bind an input-bound pattern var");
    if (!seen_vars.insert(c.binds_var).second)
      throw ValidationError("module " + name + ": var " + c.binds_var +
                            " bound by two connectors");
    // The connector may widen the var's type (e.g. TypeReference feeding a
    // NamespaceClassifierReference var) but must stay compatible.
    if (!types.conforms(pn->required_type, c.required_type))
      throw ValidationError("module " + name + ": connector " + c.name + " type " +
                            c.required_type + " does not cover var " + c.binds_var);
  }
  for (const auto& v : bound_vars)
    if (!seen_vars.count(v))
      throw ValidationError("module " + name + ": input-bound var " + v + " has no connector");
}

std::optional<std::vector<NodeId>> MarkerIndex::role_tuple(const Graph& graph,
                                                           const ViewModule& module,
                                                           NodeId marker) {
  std::vector<NodeId> tuple;
  for (const auto& role : module.pattern.marking.role_edges) {
    std::optional<NodeId> target;
    for (EdgeId eid : graph.out_edges(marker)) {
      const Edge& e = graph.edge(eid);
      if (e.type == role.edge_type) {
        target = e.dst;
        break;
      }
    }
    if (!target) return std::nullopt;
    tuple.push_back(*target);
  }
  return tuple;
}

void MarkerIndex::build(const Graph& graph,
                        const std::map<std::string, const ViewModule*>& modules) {
  map_.clear();
  for (const auto& [id, node] : graph.nodes()) {
    if (graph.types().node_layer(node.type) != NodeLayer::View) continue;
    auto it = modules.find(node.module);
    if (it == modules.end())
      throw ValidationError("view node " + std::to_string(id) + " was created by unknown module '" +
                            node.module + "'");
    auto tuple = role_tuple(graph, *it->second, id);
    if (!tuple) continue;  // stripped marker awaiting deletion
    insert({node.type, *tuple}, id);
  }
}

std::optional<NodeId> MarkerIndex::find(const Key& key) const {
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MarkerIndex::insert(Key key, NodeId marker) {
  auto [it, inserted] = map_.emplace(std::move(key), marker);
  if (!inserted && it->second != marker)
    throw ValidationError("duplicate markers share a duplicate key on type " + it->first.first);
}

void MarkerIndex::erase_marker(const std::string& type, NodeId marker) {
  for (auto it = map_.lower_bound({type, {}}); it != map_.end() && it->first.first == type;)
    it = it->second == marker ? map_.erase(it) : std::next(it);
}

bool has_dangling_mark(const Graph& graph, NodeId marker) {
  for (EdgeId eid : graph.out_edges(marker)) {
    const Edge& e = graph.edge(eid);
    EdgeLayer layer = graph.edge_layer(e);
    if (layer == EdgeLayer::Base) continue;
    if (!graph.has_node(e.dst)) return true;
  }
  return false;
}

namespace {

void check_marking_types(const ViewModule& module, const TypeGraph& types) {
  if (!types.has_node_type(module.marker_type()))
    throw ValidationError("module " + module.name + ": marker type " + module.marker_type() +
                          " absent from type graph");
  for (const auto& role : module.pattern.marking.role_edges)
    if (!types.has_edge_type(role.edge_type))
      throw ValidationError("module " + module.name + ": role edge type " + role.edge_type +
                            " absent from type graph");
}

/// Targets of the marker's current role edges and scopes plus the stash of
/// targets recorded before Update stripped it; existing nodes only.
std::set<NodeId> previously_marked(const Graph& graph, NodeId marker) {
  std::set<NodeId> out;
  for (EdgeId eid : graph.out_edges(marker)) {
    const Edge& e = graph.edge(eid);
    EdgeLayer layer = graph.edge_layer(e);
    if (layer == EdgeLayer::Base) continue;
    if (graph.has_node(e.dst)) out.insert(e.dst);
  }
  for (NodeId id : graph.node(marker).former_marked)
    if (graph.has_node(id)) out.insert(id);
  return out;
}

void strip_marking_edges(Graph& graph, NodeId marker) {
  std::vector<EdgeId> doomed;
  for (EdgeId eid : graph.out_edges(marker)) {
    const Edge& e = graph.edge(eid);
    if (graph.edge_layer(e) != EdgeLayer::Base) doomed.push_back(eid);
  }
  for (EdgeId eid : doomed) graph.remove_edge(eid);
}

}  // namespace

std::vector<NodeId> execute_create(const ViewModule& module, Graph& graph,
                                   const CandidateSets& candidates, MarkerIndex& index) {
  check_marking_types(module, graph.types());
  std::vector<NodeId> created;
  for (const Match& match : find_matches(graph, module.pattern, candidates)) {
    MarkerIndex::Key key{module.marker_type(), {}};
    for (const auto& role : module.pattern.marking.role_edges)
      key.second.push_back(match.bindings.at(role.var));
    if (index.contains(key)) continue;  // marked at most once
    NodeId marker = graph.create_view_node(module.marker_type(), module.name);
    for (const auto& role : module.pattern.marking.role_edges)
      graph.add_edge(role.edge_type, marker, match.bindings.at(role.var));
    for (const auto& var : module.pattern.marking.scoped_vars)
      graph.add_edge(TypeGraph::kScopeEdge, marker, match.bindings.at(var));
    index.insert(std::move(key), marker);
    created.push_back(marker);
  }
  return created;
}

std::vector<NodeId> execute_update(const ViewModule& module, Graph& graph,
                                   const std::set<NodeId>& suspicious, MarkerIndex& index) {
  std::vector<NodeId> obsoleted;
  for (NodeId id : suspicious) {
    const Node& node = graph.node(id);
    if (node.module != module.name)
      throw ValidationError("suspicious node " + std::to_string(id) + " not owned by module " +
                            module.name);
    if (node.obsolete) {
      obsoleted.push_back(id);
      continue;
    }
    bool valid = false;
    auto tuple = MarkerIndex::role_tuple(graph, module, id);
    if (tuple) {
      std::map<std::string, NodeId> fixed;
      bool roles_alive = true;
      for (std::size_t i = 0; i < tuple->size(); ++i) {
        NodeId target = (*tuple)[i];
        if (!graph.has_node(target)) {
          roles_alive = false;
          break;
        }
        fixed.emplace(module.pattern.marking.role_edges[i].var, target);
      }
      // Roles are the marker's contract; any extension over the scoped vars
      // keeps it valid.
      if (roles_alive) valid = !find_matches(graph, module.pattern, {}, fixed).empty();
    }
    if (!valid) {
      Node& mut = graph.node_mut(id);
      mut.obsolete = true;
      auto prev = previously_marked(graph, id);
      mut.former_marked.assign(prev.begin(), prev.end());
      strip_marking_edges(graph, id);
      index.erase_marker(node.type, id);
      obsoleted.push_back(id);
    }
  }
  return obsoleted;
}

std::set<NodeId> execute_delete(const ViewModule& module, Graph& graph,
                                const std::set<NodeId>& obsoletes, MarkerIndex& index) {
  std::set<NodeId> marked;
  for (NodeId id : obsoletes) {
    if (!graph.has_node(id)) continue;
    const Node& node = graph.node(id);
    if (node.module != module.name)
      throw ValidationError("obsolete node " + std::to_string(id) + " not owned by module " +
                            module.name);
    auto prev = previously_marked(graph, id);
    marked.insert(prev.begin(), prev.end());
    index.erase_marker(node.type, id);
    strip_marking_edges(graph, id);
    graph.delete_node(id);
  }
  return marked;
}

}  // namespace gatorview
