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

#include "gatorview/rete.hpp"

#include <algorithm>

namespace gatorview {

namespace {

/// Accumulation order: first input-bound var in declared connector order,
/// then declaration-ordered vars connected to the accumulated set
/// (input-bound ones first).
std::vector<std::string> accumulation_order(const ViewModule& module) {
  const Pattern& p = module.pattern;
  std::vector<std::string> positives = p.positive_vars();
  std::vector<std::string> order;
  std::set<std::string> placed;

  auto declared_rank = [&](const std::string& var) {
    for (std::size_t i = 0; i < module.inputs.size(); ++i)
      if (module.inputs[i].binds_var == var) return i;
    return module.inputs.size();
  };
  auto connected = [&](const std::string& var) {
    for (const auto& e : p.edges) {
      if (e.negated) continue;
      if (e.source_var == var && placed.count(e.target_var)) return true;
      if (e.target_var == var && placed.count(e.source_var)) return true;
    }
    return false;
  };

  std::string first = positives.front();
  for (const auto& in : module.inputs)
    if (!in.binds_var.empty()) {
      first = in.binds_var;
      break;
    }
  order.push_back(first);
  placed.insert(first);
  while (order.size() < positives.size()) {
    std::string best;
    std::size_t best_rank = module.inputs.size() + 1;
    for (const auto& v : positives) {
      if (placed.count(v) || !connected(v)) continue;
      std::size_t rank = declared_rank(v);
      if (best.empty() || rank < best_rank) {
        best = v;
        best_rank = rank;
      }
    }
    if (best.empty())
      for (const auto& v : positives)
        if (!placed.count(v)) {
          best = v;
          break;
        }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

/// Positive subpattern induced on the accumulated vars.
void copy_induced(const Pattern& src, const std::set<std::string>& vars, Pattern* dst,
                  const std::set<std::string>& bound_vars) {
  for (const auto& n : src.nodes) {
    if (n.negated || !vars.count(n.var)) continue;
    PatternNode copy = n;
    copy.binding = bound_vars.count(n.var) ? Binding::InputBound : Binding::Free;
    dst->nodes.push_back(std::move(copy));
  }
  for (const auto& e : src.edges) {
    if (e.negated) continue;
    if (vars.count(e.source_var) && vars.count(e.target_var)) dst->edges.push_back(e);
  }
}

}  // namespace

Network emulate_rete(const Network& network, TypeGraph& types) {
  if (!network.recursion_cycles().empty())
    throw ValidationError("Rete emulation is restricted to acyclic networks");

  NetworkDef def;
  std::set<std::string> intermediates;

  for (const auto& [name, module] : network.modules()) {
    std::vector<std::string> positives = module.pattern.positive_vars();
    if (positives.size() <= 2) {
      def.patterns.push_back(module.pattern);
      ModuleDef md;
      md.name = name;
      md.pattern = module.pattern.name;
      for (const auto& in : module.inputs)
        md.inputs.push_back(ModuleDef::InputDef{in.name, in.required_type, in.binds_var});
      def.modules.push_back(std::move(md));
      continue;
    }

    std::vector<std::string> order = accumulation_order(module);
    const std::size_t n = order.size();

    auto join_type = [&](std::size_t k) { return name + "__join" + std::to_string(k); };
    auto role_type = [&](std::size_t k, const std::string& var) {
      return join_type(k) + "__" + var;
    };

    // Register intermediate marker and role-edge types.
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (types.has_node_type(join_type(k)))
        throw ValidationError("intermediate type name collision: " + join_type(k));
      types.add_node_type(NodeTypeDef{join_type(k), "", NodeLayer::View, {}});
      intermediates.insert(join_type(k));
      for (std::size_t i = 0; i <= k; ++i) {
        const PatternNode* pn = module.pattern.find_node(order[i]);
        types.add_edge_type(EdgeTypeDef{role_type(k, order[i]), join_type(k),
                                        pn->required_type, EdgeLayer::ViewRole});
      }
    }

    // Chain module k materializes vars order[0..k]; the final one (k = n-1)
    // produces the original marker.
    for (std::size_t k = 1; k < n; ++k) {
      const bool final_stage = (k + 1 == n);
      Pattern p;
      p.name = final_stage ? module.pattern.name : name + "__join" + std::to_string(k) + "_p";
      std::set<std::string> acc(order.begin(), order.begin() + k + 1);
      std::set<std::string> bound;
      ModuleDef md;
      md.name = final_stage ? name : join_type(k);

      if (k == 1) {
        bound = {order[0], order[1]};
        copy_induced(module.pattern, acc, &p, bound);
        md.inputs.push_back(ModuleDef::InputDef{
            order[0], module.pattern.find_node(order[0])->required_type, order[0]});
      } else {
        bound = {order[k]};
        copy_induced(module.pattern, acc, &p, bound);
        // Previous join marker with role edges recovering the partial match.
        PatternNode prev;
        prev.var = "prev";
        prev.required_type = join_type(k - 1);
        prev.binding = Binding::InputBound;
        p.nodes.push_back(prev);
        for (std::size_t i = 0; i < k; ++i)
          p.edges.push_back(PatternEdge{"prev", order[i], role_type(k - 1, order[i]), false});
        md.inputs.push_back(ModuleDef::InputDef{"prev", join_type(k - 1), "prev"});
      }
      md.inputs.push_back(ModuleDef::InputDef{
          order[k], module.pattern.find_node(order[k])->required_type, order[k]});

      if (final_stage) {
        // Original marking plus negated elements; the previous join marker
        // is scoped so every positive var stays covered exactly once.
        for (const auto& node : module.pattern.nodes)
          if (node.negated) p.nodes.push_back(node);
        for (const auto& e : module.pattern.edges)
          if (e.negated) p.edges.push_back(e);
        p.marking = module.pattern.marking;
        p.marking.scoped_vars.push_back("prev");
      } else {
        p.marking.marker_type = join_type(k);
        for (std::size_t i = 0; i <= k; ++i)
          p.marking.role_edges.push_back(RoleSpec{role_type(k, order[i]), order[i]});
        if (k > 1) p.marking.scoped_vars.push_back("prev");
      }
      md.pattern = p.name;
      def.patterns.push_back(std::move(p));
      def.modules.push_back(std::move(md));
      // Chain-internal wire from the previous join.
      if (k > 1) def.wires.push_back(WireDef{join_type(k - 1), md.name, "prev"});
    }
  }

  // Original wires re-targeted: the producer chain's final module keeps the
  // producer's name; the consumer side lands on whichever chain module binds
  // the original connector's var.
  for (const auto& w : network.wires()) {
    if (w.negative) continue;  // re-derived by build_network
    const Connector* original = network.module(w.consumer).input_named(w.input);
    const std::string& var = original->binds_var;
    for (const auto& md : def.modules) {
      if (md.name != w.consumer && md.name.rfind(w.consumer + "__join", 0) != 0) continue;
      for (const auto& in : md.inputs)
        if (in.binds == var) def.wires.push_back(WireDef{w.producer, md.name, in.name});
    }
  }

  Network rete = build_network(def, types);
  rete.intermediate_types_ = std::move(intermediates);
  return rete;
}

}  // namespace gatorview
