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

#include "gatorview/maintenance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <queue>

namespace gatorview {

MaintenanceEngine::MaintenanceEngine(Graph& graph, const Network& network, Options options)
    : graph_(graph), network_(network), plan_(plan_execution(network)), options_(options) {
  index_.build(graph_, network_.module_ptrs());
}

std::size_t MaintenanceEngine::loop_limit() const {
  if (options_.loop_limit > 0) return options_.loop_limit;
  return 10 * std::max<std::size_t>(network_.modules().size(), 1);
}

void MaintenanceEngine::trace_line(const std::string& line) {
  if (options_.trace) *options_.trace << line << "\n";
}

void MaintenanceEngine::trace_action(const char* phase, const std::string& module, NodeId id,
                                     const char* verb) {
  if (options_.trace)
    *options_.trace << phase << " " << module << " " << id << " " << verb << "\n";
}

const ViewModule& MaintenanceEngine::owning_module(NodeId id) const {
  const Node& node = graph_.node(id);
  if (node.module.empty())
    throw ValidationError("node " + std::to_string(id) + " has no module of origin");
  return network_.module(node.module);
}

// --- event classification -------------------------------------------------

namespace {

/// Modified base nodes: attribute-changed nodes plus both endpoints of added
/// and removed edges, still-existing base-layer ones.
std::set<NodeId> modified_base_nodes(const Graph& graph, const EventBatch& batch) {
  std::set<NodeId> out;
  auto add = [&](NodeId id) {
    if (id != 0 && graph.has_node(id) &&
        graph.types().node_layer(graph.node(id).type) == NodeLayer::Base)
      out.insert(id);
  };
  for (const auto& ev : batch.events) {
    switch (ev.kind) {
      case ChangeKind::AttributeChanged:
        add(ev.node);
        break;
      case ChangeKind::EdgeAdded:
      case ChangeKind::EdgeRemoved:
        add(ev.src);
        add(ev.dst);
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace

std::set<NodeId> MaintenanceEngine::suspicious_nodes(const EventBatch& batch) const {
  std::set<NodeId> out;
  for (NodeId id : modified_base_nodes(graph_, batch)) {
    std::set<NodeId> marks = graph_.backward_marks(id);
    out.insert(marks.begin(), marks.end());
  }
  return out;
}

std::set<NodeId> MaintenanceEngine::obsolete_nodes(const EventBatch& batch) const {
  std::set<NodeId> out;
  for (const auto& ev : batch.events) {
    if (ev.kind != ChangeKind::NodeDeleted) continue;
    // Markers still holding a dangling role edge or scope onto the deleted
    // node; found through the persisting in-edge index.
    std::set<NodeId> marks = graph_.backward_marks(ev.node);
    for (NodeId m : marks)
      if (graph_.has_node(m)) out.insert(m);
  }
  return out;
}

std::set<NodeId> MaintenanceEngine::changed_nodes(const EventBatch& batch) const {
  std::set<NodeId> out = modified_base_nodes(graph_, batch);
  for (const auto& ev : batch.events)
    if (ev.kind == ChangeKind::NodeCreated && graph_.has_node(ev.node) &&
        graph_.types().node_layer(ev.type) == NodeLayer::Base)
      out.insert(ev.node);
  return out;
}

// --- reachability ----------------------------------------------------------

CandidateSets MaintenanceEngine::reachability_missing(const std::set<NodeId>& changed,
                                                      const ViewModule& module) const {
  CandidateSets out;
  for (const auto& in : module.inputs) out.by_var[in.binds_var];
  if (changed.empty()) return out;

  std::set<NodeId> visited;
  std::queue<NodeId> work;
  for (NodeId id : changed)
    if (graph_.has_node(id) && visited.insert(id).second) work.push(id);
  while (!work.empty()) {
    NodeId id = work.front();
    work.pop();
    const Node& node = graph_.node(id);
    for (const auto& in : module.inputs)
      if (graph_.types().conforms(node.type, in.required_type))
        out.by_var[in.binds_var].push_back(id);
    for (EdgeId eid : graph_.out_edges(id)) {
      NodeId next = graph_.edge(eid).dst;
      if (graph_.has_node(next) && visited.insert(next).second) work.push(next);
    }
    for (EdgeId eid : graph_.in_edges(id)) {
      NodeId next = graph_.edge(eid).src;
      if (graph_.has_node(next) && visited.insert(next).second) work.push(next);
    }
  }
  for (auto& [var, nodes] : out.by_var) std::sort(nodes.begin(), nodes.end());
  return out;
}

std::set<NodeId> MaintenanceEngine::reachability_suspicious(const std::vector<NodeId>& created,
                                                            const ViewModule& producer) const {
  std::set<NodeId> out;
  for (const ViewModule* dependent : network_.nac_dependents(producer.name)) {
    std::set<std::string> traversal = dependent->positive_node_types();
    std::set<NodeId> visited;
    std::queue<NodeId> work;
    for (NodeId id : created)
      if (graph_.has_node(id) && visited.insert(id).second) work.push(id);
    while (!work.empty()) {
      NodeId id = work.front();
      work.pop();
      auto visit = [&](NodeId next) {
        if (!graph_.has_node(next) || visited.count(next)) return;
        const Node& node = graph_.node(next);
        if (graph_.types().conforms(node.type, dependent->marker_type())) {
          visited.insert(next);
          out.insert(next);
          return;  // collected, not traversed through
        }
        for (const auto& t : traversal)
          if (graph_.types().conforms(node.type, t)) {
            visited.insert(next);
            work.push(next);
            return;
          }
      };
      for (EdgeId eid : graph_.out_edges(id)) visit(graph_.edge(eid).dst);
      for (EdgeId eid : graph_.in_edges(id)) visit(graph_.edge(eid).src);
    }
  }
  return out;
}

CandidateSets MaintenanceEngine::candidate_universe(const ViewModule& module) const {
  CandidateSets out;
  for (const auto& in : module.inputs) {
    auto& dom = out.by_var[in.binds_var];
    for (const auto& [id, node] : graph_.nodes())
      if (graph_.types().conforms(node.type, in.required_type)) dom.push_back(id);
  }
  return out;
}

// --- phases -----------------------------------------------------------------

std::set<NodeId> MaintenanceEngine::update_phase(const std::set<NodeId>& suspicious,
                                                 IterationStats* stats) {
  std::set<NodeId> obsoletes;
  std::set<NodeId> visited;
  std::function<void(const std::set<NodeId>&)> walk = [&](const std::set<NodeId>& nodes) {
    for (NodeId id : nodes) {
      if (!graph_.has_node(id)) continue;  // deleted earlier in this cycle
      if (!visited.insert(id).second) continue;
      const ViewModule& module = owning_module(id);
      if (stats) ++stats->updated;
      execute_update(module, graph_, {id}, index_);
      if (graph_.node(id).obsolete) {
        trace_action("update", module.name, id, "obsolete");
        if (stats) ++stats->obsoleted;
        obsoletes.insert(id);
      } else {
        trace_action("update", module.name, id, "kept");
        if (stats) ++stats->kept;
        walk(graph_.backward_marks(id));
      }
    }
  };
  walk(suspicious);
  return obsoletes;
}

std::set<NodeId> MaintenanceEngine::delete_phase(const std::set<NodeId>& obsoletes,
                                                 IterationStats* stats) {
  std::set<NodeId> changed;
  std::function<void(const std::set<NodeId>&)> walk = [&](const std::set<NodeId>& nodes) {
    for (NodeId id : nodes) {
      if (!graph_.has_node(id)) continue;
      const ViewModule& module = owning_module(id);
      std::set<NodeId> dependents = graph_.backward_marks(id);
      std::set<NodeId> marked = execute_delete(module, graph_, {id}, index_);
      trace_action("delete", module.name, id, "deleted");
      if (stats) {
        ++stats->deleted;
        stats->changed += marked.size();
      }
      changed.insert(marked.begin(), marked.end());
      walk(dependents);
    }
  };
  walk(obsoletes);
  return changed;
}

std::set<NodeId> MaintenanceEngine::create_phase(const std::set<NodeId>& changed,
                                                 IterationStats* stats, bool batch_universe) {
  std::set<NodeId> suspicious;
  std::set<NodeId> seeds = changed;

  auto run_module = [&](const ViewModule& module) -> std::size_t {
    CandidateSets candidates =
        batch_universe ? candidate_universe(module) : reachability_missing(seeds, module);
    if (stats) stats->candidates += candidates.total();
    std::vector<NodeId> created = execute_create(module, graph_, candidates, index_);
    for (NodeId id : created) {
      trace_action("create", module.name, id, "created");
      seeds.insert(id);
    }
    if (stats) stats->created += created.size();
    if (!created.empty()) {
      std::set<NodeId> more = reachability_suspicious(created, module);
      suspicious.insert(more.begin(), more.end());
    }
    return created.size();
  };

  for (const PlanStep& step : plan_.schedule) {
    if (!step.is_cycle()) {
      run_module(network_.module(step.modules.front()));
      continue;
    }
    // Recursion: created markers feed in-cycle dependents first; the cycle
    // re-runs until the fix-point module creates nothing in a full pass.
    std::size_t passes = 0;
    while (true) {
      if (++passes > loop_limit())
        throw LoopLimitError("recursion cycle around " + step.fixpoint +
                             " exceeded the iteration limit");
      trace_line("# cycle " + step.fixpoint + " pass " + std::to_string(passes));
      std::size_t fixpoint_created = 0;
      for (const auto& name : step.modules) {
        std::size_t n = run_module(network_.module(name));
        if (name == step.fixpoint) fixpoint_created = n;
      }
      if (fixpoint_created == 0) break;
    }
    if (stats) stats->cycle_passes += passes;
  }
  return suspicious;
}

// --- the loop ----------------------------------------------------------------

MaintenanceReport MaintenanceEngine::run_loop(EventBatch batch, bool batch_universe,
                                              std::set<NodeId> initial_suspicious) {
  auto started = std::chrono::steady_clock::now();
  graph_.set_maintenance_active(true);
  MaintenanceReport report;
  trace_line("# maintain begin");
  try {
    std::set<NodeId> suspicious = std::move(initial_suspicious);
    bool events_live = true;
    while (true) {
      if (report.iterations >= loop_limit())
        throw LoopLimitError("maintenance loop exceeded " + std::to_string(loop_limit()) +
                             " iterations; undeclared cycle or module bug");
      ++report.iterations;
      IterationStats stats;
      trace_line("# iteration " + std::to_string(report.iterations));

      if (events_live) {
        std::set<NodeId> more = suspicious_nodes(batch);
        suspicious.insert(more.begin(), more.end());
      }
      report.suspicious_processed += suspicious.size();
      std::set<NodeId> obsoletes = update_phase(suspicious, &stats);
      if (events_live) {
        std::set<NodeId> more = obsolete_nodes(batch);
        obsoletes.insert(more.begin(), more.end());
      }
      if (batch_universe && report.iterations == 1) {
        // The batch algorithm also purges markers left dangling by whatever
        // state the graph arrived in.
        for (const auto& [id, node] : graph_.nodes())
          if (graph_.types().node_layer(node.type) == NodeLayer::View &&
              (node.obsolete || has_dangling_mark(graph_, id)))
            obsoletes.insert(id);
      }
      std::set<NodeId> changed = delete_phase(obsoletes, &stats);
      if (events_live) {
        std::set<NodeId> more = changed_nodes(batch);
        changed.insert(more.begin(), more.end());
      }
      suspicious = create_phase(changed, &stats, batch_universe);
      if (events_live) {
        trace_line("# events consumed=" + std::to_string(batch.events.size()));
        batch.events.clear();
        events_live = false;
      }

      report.markers_created += stats.create.created;
      report.markers_deleted += stats.del.deleted;
      report.markers_obsoleted += stats.update.obsoleted;
      report.candidate_total += stats.create.candidates;
      report.cycle_iterations += stats.create.cycle_passes;
      report.per_iteration.push_back(stats);
      if (suspicious.empty()) break;
    }
  } catch (...) {
    graph_.set_maintenance_active(false);
    throw;
  }
  graph_.set_maintenance_active(false);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             started)
                       .count();
  trace_line("# maintain end");
  return report;
}

MaintenanceReport MaintenanceEngine::maintain(EventBatch batch) {
  return run_loop(std::move(batch), false, {});
}

MaintenanceReport MaintenanceEngine::maintain_pending() {
  return maintain(EventBatch{graph_.drain_pending()});
}

MaintenanceReport MaintenanceEngine::batch_maintain() {
  std::set<NodeId> all_markers;
  for (const auto& [id, node] : graph_.nodes())
    if (graph_.types().node_layer(node.type) == NodeLayer::View) all_markers.insert(id);
  return run_loop(EventBatch{}, true, std::move(all_markers));
}

}  // namespace gatorview
