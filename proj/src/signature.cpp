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

#include "gatorview/signature.hpp"

#include <map>
#include <sstream>

namespace gatorview {

namespace {

std::string signature_of(const Graph& graph, const Network& network, NodeId id,
                         std::map<NodeId, std::string>* memo) {
  auto it = memo->find(id);
  if (it != memo->end()) return it->second;
  const Node& node = graph.node(id);
  if (graph.types().node_layer(node.type) == NodeLayer::Base) {
    std::string sig = "#" + std::to_string(id);
    memo->emplace(id, sig);
    return sig;
  }
  const ViewModule& module = network.module(node.module);
  std::string sig = node.type + "(";
  bool first = true;
  for (const auto& role : module.pattern.marking.role_edges) {
    NodeId target = 0;
    bool found = false;
    for (EdgeId eid : graph.out_edges(id)) {
      const Edge& e = graph.edge(eid);
      if (e.type == role.edge_type) {
        target = e.dst;
        found = true;
        break;
      }
    }
    if (!first) sig += ",";
    first = false;
    if (!found || !graph.has_node(target)) {
      sig += "!missing";
      continue;
    }
    sig += signature_of(graph, network, target, memo);
  }
  sig += ")";
  memo->emplace(id, sig);
  return sig;
}

}  // namespace

std::set<std::string> view_signatures(const Graph& graph, const Network& network,
                                      bool top_level_only) {
  std::set<std::string> top_types = network.top_level_types();
  std::map<NodeId, std::string> memo;
  std::set<std::string> out;
  for (const auto& [id, node] : graph.nodes()) {
    if (graph.types().node_layer(node.type) != NodeLayer::View) continue;
    if (top_level_only && !top_types.count(node.type)) continue;
    out.insert(signature_of(graph, network, id, &memo));
  }
  return out;
}

std::string signature_diff(const std::set<std::string>& left, const std::set<std::string>& right) {
  std::ostringstream out;
  for (const auto& s : left)
    if (!right.count(s)) out << "- " << s << "\n";
  for (const auto& s : right)
    if (!left.count(s)) out << "+ " << s << "\n";
  return out.str();
}

}  // namespace gatorview
