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

#include "gatorview/network.hpp"

#include <algorithm>
#include <functional>

namespace gatorview {

const ViewModule& Network::module(const std::string& name) const {
  auto it = modules_.find(name);
  if (it == modules_.end()) throw ValidationError("unknown module: " + name);
  return it->second;
}

std::vector<const Wire*> Network::wires_into(const std::string& consumer) const {
  std::vector<const Wire*> out;
  for (const auto& w : wires_)
    if (w.consumer == consumer) out.push_back(&w);
  return out;
}

std::vector<const Wire*> Network::wires_out_of(const std::string& producer) const {
  std::vector<const Wire*> out;
  for (const auto& w : wires_)
    if (w.producer == producer) out.push_back(&w);
  return out;
}

std::vector<const ViewModule*> Network::nac_dependents(const std::string& producer) const {
  std::vector<const ViewModule*> out;
  std::set<std::string> seen;
  for (const auto& w : wires_)
    if (w.producer == producer && w.negative && seen.insert(w.consumer).second)
      out.push_back(&module(w.consumer));
  return out;
}

std::set<std::string> Network::top_level_types() const {
  std::set<std::string> out;
  for (const auto& [name, m] : modules_)
    if (!intermediate_types_.count(m.marker_type())) out.insert(m.marker_type());
  return out;
}

std::map<std::string, const ViewModule*> Network::module_ptrs() const {
  std::map<std::string, const ViewModule*> out;
  for (const auto& [name, m] : modules_) out.emplace(name, &m);
  return out;
}

namespace {

/// Tarjan strongly connected components over the wire graph.
std::vector<std::vector<std::string>> strongly_connected(
    const std::map<std::string, ViewModule>& modules, const std::vector<Wire>& wires) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& w : wires) succ[w.producer].push_back(w.consumer);

  std::map<std::string, int> index, low;
  std::vector<std::string> stack;
  std::set<std::string> on_stack;
  std::vector<std::vector<std::string>> sccs;
  int counter = 0;

  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const auto& w : succ[v]) {
      if (!index.count(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.count(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> scc;
      while (true) {
        std::string w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        scc.push_back(w);
        if (w == v) break;
      }
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  };
  for (const auto& [name, m] : modules)
    if (!index.count(name)) visit(name);
  return sccs;
}

bool has_self_loop(const std::string& name, const std::vector<Wire>& wires) {
  for (const auto& w : wires)
    if (w.producer == name && w.consumer == name) return true;
  return false;
}

}  // namespace

Network build_network(const NetworkDef& def, const TypeGraph& types) {
  Network net;

  std::map<std::string, const Pattern*> patterns;
  for (const auto& p : def.patterns) {
    p.validate(types);
    if (!patterns.emplace(p.name, &p).second)
      throw ValidationError("duplicate pattern: " + p.name);
  }

  std::set<std::string> marker_types;
  for (const auto& md : def.modules) {
    auto pit = patterns.find(md.pattern);
    if (pit == patterns.end())
      throw ValidationError("module " + md.name + " references unknown pattern " + md.pattern);
    ViewModule m;
    m.name = md.name;
    m.pattern = *pit->second;
    for (const auto& in : md.inputs) {
      if (!types.has_node_type(in.type))
        throw ValidationError("module " + md.name + ": connector " + in.name +
                              " has unknown type " + in.type);
      m.inputs.push_back(Connector{in.name, md.name, ConnectorDirection::Input, in.type, in.binds});
    }
    m.output = Connector{"out", md.name, ConnectorDirection::Output, m.marker_type(), ""};
    m.validate(types);
    // Each view node type is produced by exactly one module kind.
    if (!marker_types.insert(m.marker_type()).second)
      throw ValidationError("marker type " + m.marker_type() + " produced by two modules");
    if (!net.modules_.emplace(m.name, std::move(m)).second)
      throw ValidationError("duplicate module: " + md.name);
  }

  for (const auto& wd : def.wires) {
    const ViewModule& producer = net.module(wd.from);
    const ViewModule& consumer = net.module(wd.to);
    const Connector* input = consumer.input_named(wd.input);
    if (!input)
      throw ValidationError("wire into unknown connector " + wd.to + "." + wd.input);
    if (!types.conforms(producer.marker_type(), input->required_type))
      throw ValidationError("type-incompatible wire " + wd.from + " -> " + wd.to + "." +
                            wd.input + ": " + producer.marker_type() + " does not conform to " +
                            input->required_type);
    net.wires_.push_back(Wire{wd.from, wd.to, wd.input, false});
  }

  // Derived negative wires: producers of markers a pattern negates.
  for (const auto& [cname, consumer] : net.modules_) {
    for (const auto& negated_type : consumer.negated_view_types(types)) {
      for (const auto& [pname, producer] : net.modules_) {
        if (!types.conforms(producer.marker_type(), negated_type)) continue;
        Wire w{pname, cname, "", true};
        if (std::find(net.wires_.begin(), net.wires_.end(), w) == net.wires_.end())
          net.wires_.push_back(std::move(w));
      }
    }
  }

  // Every view-typed input connector needs at least one producer.
  for (const auto& [name, m] : net.modules_) {
    for (const auto& in : m.inputs) {
      if (types.node_layer(in.required_type) == NodeLayer::Base) continue;
      bool fed = false;
      for (const auto& w : net.wires_)
        if (!w.negative && w.consumer == name && w.input == in.name) fed = true;
      if (!fed)
        throw ValidationError("module " + name + ": view-typed input connector " + in.name +
                              " has no producer");
    }
  }

  // Cycle discipline: every non-trivial SCC must be declared.
  std::set<std::vector<std::string>> declared;
  for (auto cycle : def.cycles) {
    std::sort(cycle.begin(), cycle.end());
    cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
    for (const auto& m : cycle) net.module(m);
    declared.insert(cycle);
  }
  std::set<std::vector<std::string>> actual;
  for (auto& scc : strongly_connected(net.modules_, net.wires_))
    if (scc.size() > 1 || has_self_loop(scc.front(), net.wires_)) actual.insert(scc);
  for (const auto& scc : actual)
    if (!declared.count(scc)) {
      std::string names;
      for (const auto& m : scc) names += (names.empty() ? "" : ", ") + m;
      throw ValidationError("undeclared recursion cycle: " + names);
    }
  for (const auto& cycle : declared)
    if (!actual.count(cycle))
      throw ValidationError("declared cycle is not a cycle of the wire graph");
  net.cycles_.assign(actual.begin(), actual.end());

  return net;
}

}  // namespace gatorview
