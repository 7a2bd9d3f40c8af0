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

#include "gatorview/plan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gatorview {

std::size_t ExecutionPlan::index_of(const std::string& module) const {
  for (std::size_t i = 0; i < schedule.size(); ++i)
    for (const auto& m : schedule[i].modules)
      if (m == module) return i;
  throw ValidationError("module " + module + " not in plan");
}

std::size_t ExecutionPlan::module_count() const {
  std::size_t n = 0;
  for (const auto& step : schedule) n += step.modules.size();
  return n;
}

ExecutionPlan plan_execution(const Network& network) {
  // Condense declared cycles into components keyed by their smallest member.
  std::map<std::string, std::string> component_of;
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& cycle : network.recursion_cycles()) {
    const std::string& key = cycle.front();  // cycles stored sorted
    members[key] = cycle;
    for (const auto& m : cycle) component_of[m] = key;
  }
  for (const auto& [name, m] : network.modules())
    if (!component_of.count(name)) {
      component_of[name] = name;
      members[name] = {name};
    }

  std::map<std::string, std::set<std::string>> succ;
  std::map<std::string, std::size_t> indegree;
  for (const auto& [key, ms] : members) indegree[key] = 0;
  for (const auto& w : network.wires()) {
    std::string p = component_of.at(w.producer);
    std::string c = component_of.at(w.consumer);
    if (p == c) continue;
    if (succ[p].insert(c).second) ++indegree[c];
  }

  // Kahn with a name-ordered ready set for determinism.
  std::set<std::string> ready;
  for (const auto& [key, deg] : indegree)
    if (deg == 0) ready.insert(key);
  ExecutionPlan plan;
  while (!ready.empty()) {
    std::string key = *ready.begin();
    ready.erase(ready.begin());
    PlanStep step;
    step.modules = members.at(key);
    if (step.modules.size() > 1 ||
        network.recursion_cycles().end() !=
            std::find(network.recursion_cycles().begin(), network.recursion_cycles().end(),
                      step.modules)) {
      // Fix-point module: a member with a dependent outside the cycle, or —
      // when the cycle is the network's termination — any member.
      std::set<std::string> in_cycle(step.modules.begin(), step.modules.end());
      std::vector<std::string> eligible;
      for (const auto& m : step.modules)
        for (const Wire* w : network.wires_out_of(m))
          if (!in_cycle.count(w->consumer)) {
            eligible.push_back(m);
            break;
          }
      if (eligible.empty()) eligible = step.modules;
      std::sort(eligible.begin(), eligible.end());
      step.fixpoint = eligible.front();
      // The fix point runs last within each pass.
      step.modules.erase(std::remove(step.modules.begin(), step.modules.end(), step.fixpoint),
                         step.modules.end());
      std::sort(step.modules.begin(), step.modules.end());
      step.modules.push_back(step.fixpoint);
    }
    plan.schedule.push_back(std::move(step));
    for (const auto& next : succ[key])
      if (--indegree[next] == 0) ready.insert(next);
  }
  if (plan.module_count() != network.modules().size())
    throw ValidationError("plan incomplete: wire graph has an undeclared cycle");
  return plan;
}

std::string format_plan(const ExecutionPlan& plan) {
  std::ostringstream out;
  for (std::size_t i = 0; i < plan.schedule.size(); ++i) {
    const PlanStep& step = plan.schedule[i];
    out << i + 1 << ". ";
    if (step.is_cycle()) {
      out << "cycle {";
      for (std::size_t j = 0; j < step.modules.size(); ++j)
        out << (j ? ", " : "") << step.modules[j];
      out << "} fix point: " << step.fixpoint;
    } else {
      out << step.modules.front();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gatorview
