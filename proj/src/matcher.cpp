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

#include "gatorview/matcher.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace gatorview {

std::size_t CandidateSets::total() const {
  std::size_t n = 0;
  for (const auto& [var, nodes] : by_var) n += nodes.size();
  return n;
}

namespace {

struct Search {
  const Graph& graph;
  const Pattern& pattern;
  const CandidateSets& candidates;
  const std::map<std::string, NodeId>& fixed;

  std::map<std::string, NodeId> bound;
  std::set<NodeId> used;
  std::vector<Match> results;

  struct NacCluster {
    std::vector<std::string> vars;          // negated vars
    std::vector<const PatternEdge*> edges;  // negated edges of the cluster
  };
  std::vector<NacCluster> clusters;

  bool has_edge_between(NodeId src, NodeId dst, const std::string& type) const {
    for (EdgeId eid : graph.out_edges(src)) {
      const Edge& e = graph.edge(eid);
      if (e.dst == dst && e.type == type) return true;
    }
    return false;
  }

  bool node_satisfies(const PatternNode& pn, NodeId id) const {
    if (!graph.has_node(id)) return false;
    const Node& n = graph.node(id);
    if (!graph.types().conforms(n.type, pn.required_type)) return false;
    for (const auto& p : pn.predicates) {
      auto it = n.attrs.find(p.attribute);
      if (!p.holds(it == n.attrs.end() ? nullptr : &it->second)) return false;
    }
    return true;
  }

  /// All structural constraints of `var` against already-bound vars.
  bool consistent(const std::string& var, NodeId id) const {
    if (used.count(id)) return false;
    const PatternNode& pn = *pattern.find_node(var);
    if (!node_satisfies(pn, id)) return false;
    auto cit = candidates.by_var.find(var);
    if (cit != candidates.by_var.end() && !fixed.count(var) &&
        !std::binary_search(cit->second.begin(), cit->second.end(), id))
      return false;
    for (const auto& e : pattern.edges) {
      if (e.negated) continue;
      if (e.source_var == var) {
        auto it = bound.find(e.target_var);
        if (it != bound.end() && !has_edge_between(id, it->second, e.edge_type)) return false;
      } else if (e.target_var == var) {
        auto it = bound.find(e.source_var);
        if (it != bound.end() && !has_edge_between(it->second, id, e.edge_type)) return false;
      }
    }
    return true;
  }

  /// Domain for an unbound var: a fixed node, an adjacency expansion from a
  /// bound neighbor, the candidate set, or (last resort) all nodes.
  std::vector<NodeId> domain(const std::string& var) const {
    auto fit = fixed.find(var);
    if (fit != fixed.end()) return {fit->second};
    for (const auto& e : pattern.edges) {
      if (e.negated) continue;
      if (e.source_var == var && bound.count(e.target_var)) {
        std::vector<NodeId> dom;
        for (EdgeId eid : graph.in_edges(bound.at(e.target_var))) {
          const Edge& ge = graph.edge(eid);
          if (ge.type == e.edge_type) dom.push_back(ge.src);
        }
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
        return dom;
      }
      if (e.target_var == var && bound.count(e.source_var)) {
        std::vector<NodeId> dom;
        for (EdgeId eid : graph.out_edges(bound.at(e.source_var))) {
          const Edge& ge = graph.edge(eid);
          if (ge.type == e.edge_type) dom.push_back(ge.dst);
        }
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
        return dom;
      }
    }
    auto cit = candidates.by_var.find(var);
    if (cit != candidates.by_var.end()) return cit->second;
    std::vector<NodeId> dom;
    for (const auto& [id, n] : graph.nodes()) dom.push_back(id);
    return dom;
  }

  void assign(std::vector<std::string>& order, std::size_t depth) {
    if (depth == order.size()) {
      if (!nac_blocked()) {
        Match m;
        m.bindings = bound;
        results.push_back(std::move(m));
      }
      return;
    }
    const std::string& var = order[depth];
    for (NodeId id : domain(var)) {
      if (!consistent(var, id)) continue;
      bound.emplace(var, id);
      used.insert(id);
      assign(order, depth + 1);
      used.erase(id);
      bound.erase(var);
    }
  }

  // --- NAC handling ----------------------------------------------------

  std::vector<NacCluster> nac_clusters() const {
    std::vector<NacCluster> clusters;
    std::set<std::string> seen;
    // Clusters grown from negated vars over negated edges.
    for (const auto& n : pattern.nodes) {
      if (!n.negated || seen.count(n.var)) continue;
      NacCluster c;
      std::vector<std::string> work{n.var};
      seen.insert(n.var);
      std::set<const PatternEdge*> cluster_edges;
      while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        c.vars.push_back(cur);
        for (const auto& e : pattern.edges) {
          if (!e.negated) continue;
          if (e.source_var != cur && e.target_var != cur) continue;
          cluster_edges.insert(&e);
          for (const std::string& other : {e.source_var, e.target_var}) {
            const PatternNode* on = pattern.find_node(other);
            if (on->negated && seen.insert(other).second) work.push_back(other);
          }
        }
      }
      c.edges.assign(cluster_edges.begin(), cluster_edges.end());
      clusters.push_back(std::move(c));
    }
    // Negated edges between positive vars form their own prohibitions.
    for (const auto& e : pattern.edges) {
      if (!e.negated) continue;
      if (!pattern.find_node(e.source_var)->negated && !pattern.find_node(e.target_var)->negated)
        clusters.push_back(NacCluster{{}, {&e}});
    }
    return clusters;
  }

  bool cluster_embeds(const NacCluster& cluster, std::map<std::string, NodeId>& nac_bound,
                      std::size_t depth) const {
    if (depth == cluster.vars.size()) {
      for (const PatternEdge* e : cluster.edges) {
        NodeId s = nac_bound.count(e->source_var) ? nac_bound.at(e->source_var)
                                                  : bound.at(e->source_var);
        NodeId t = nac_bound.count(e->target_var) ? nac_bound.at(e->target_var)
                                                  : bound.at(e->target_var);
        if (!has_edge_between(s, t, e->edge_type)) return false;
      }
      return true;
    }
    const std::string& var = cluster.vars[depth];
    const PatternNode& pn = *pattern.find_node(var);
    // Derive the domain from an attachment edge whose other endpoint is known.
    std::vector<NodeId> dom;
    bool derived = false;
    for (const PatternEdge* e : cluster.edges) {
      if (e->source_var == var) {
        const std::string& other = e->target_var;
        NodeId anchor;
        if (nac_bound.count(other)) anchor = nac_bound.at(other);
        else if (bound.count(other)) anchor = bound.at(other);
        else continue;
        for (EdgeId eid : graph.in_edges(anchor)) {
          const Edge& ge = graph.edge(eid);
          if (ge.type == e->edge_type) dom.push_back(ge.src);
        }
        derived = true;
        break;
      }
      if (e->target_var == var) {
        const std::string& other = e->source_var;
        NodeId anchor;
        if (nac_bound.count(other)) anchor = nac_bound.at(other);
        else if (bound.count(other)) anchor = bound.at(other);
        else continue;
        for (EdgeId eid : graph.out_edges(anchor)) {
          const Edge& ge = graph.edge(eid);
          if (ge.type == e->edge_type) dom.push_back(ge.dst);
        }
        derived = true;
        break;
      }
    }
    if (!derived)
      for (const auto& [id, n] : graph.nodes()) dom.push_back(id);
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    for (NodeId id : dom) {
      if (used.count(id)) continue;  // injective against positive bindings
      bool taken = false;
      for (const auto& [v, b] : nac_bound)
        if (b == id) taken = true;
      if (taken) continue;
      if (!node_satisfies(pn, id)) continue;
      nac_bound.emplace(var, id);
      if (cluster_embeds(cluster, nac_bound, depth + 1)) {
        nac_bound.erase(var);
        return true;
      }
      nac_bound.erase(var);
    }
    return false;
  }

  bool nac_blocked() const {
    for (const auto& cluster : clusters) {
      std::map<std::string, NodeId> nac_bound;
      if (cluster_embeds(cluster, nac_bound, 0)) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Match> find_matches(const Graph& graph, const Pattern& pattern,
                                const CandidateSets& candidates,
                                const std::map<std::string, NodeId>& fixed) {
  const TypeGraph& types = graph.types();
  for (const auto& n : pattern.nodes)
    if (!types.has_node_type(n.required_type))
      throw ValidationError("pattern " + pattern.name + " references unknown node type " +
                            n.required_type);
  for (const auto& e : pattern.edges)
    if (!types.has_edge_type(e.edge_type))
      throw ValidationError("pattern " + pattern.name + " references unknown edge type " +
                            e.edge_type);

  Search search{graph, pattern, candidates, fixed};
  search.clusters = search.nac_clusters();
  for (auto& c : search.clusters) std::sort(c.vars.begin(), c.vars.end());

  // Assignment order: fixed vars, then the smallest restricted domain as
  // anchor, then connectivity-first expansion.
  std::vector<std::string> positives = pattern.positive_vars();
  std::vector<std::string> order;
  std::set<std::string> placed;
  for (const auto& v : positives)
    if (fixed.count(v)) {
      order.push_back(v);
      placed.insert(v);
    }
  auto connected_to_placed = [&](const std::string& v) {
    for (const auto& e : pattern.edges) {
      if (e.negated) continue;
      if (e.source_var == v && placed.count(e.target_var)) return true;
      if (e.target_var == v && placed.count(e.source_var)) return true;
    }
    return false;
  };
  if (placed.empty()) {
    std::string anchor;
    std::size_t best = 0;
    for (const auto& v : positives) {
      auto cit = candidates.by_var.find(v);
      if (cit == candidates.by_var.end()) continue;
      if (anchor.empty() || cit->second.size() < best) {
        anchor = v;
        best = cit->second.size();
      }
    }
    if (anchor.empty()) anchor = positives.front();
    order.push_back(anchor);
    placed.insert(anchor);
  }
  while (placed.size() < positives.size()) {
    std::string next;
    for (const auto& v : positives) {
      if (placed.count(v)) continue;
      if (connected_to_placed(v)) {
        next = v;
        break;
      }
    }
    if (next.empty())
      for (const auto& v : positives)
        if (!placed.count(v)) {
          next = v;
          break;
        }
    order.push_back(next);
    placed.insert(next);
  }

  search.assign(order, 0);
  std::sort(search.results.begin(), search.results.end());
  return search.results;
}

}  // namespace gatorview
