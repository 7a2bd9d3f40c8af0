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

#include <iosfwd>
#include <set>
#include <vector>

#include "gatorview/graph.hpp"
#include "gatorview/plan.hpp"

namespace gatorview {

struct EventBatch {
  std::vector<ChangeEvent> events;
};

/// Node sets flowing between the maintenance phases.
struct WorkSets {
  std::set<NodeId> suspicious;
  std::set<NodeId> obsoletes;
  std::set<NodeId> changed;
};

struct PhaseStats {
  std::size_t updated = 0;
  std::size_t kept = 0;
  std::size_t obsoleted = 0;
  std::size_t deleted = 0;
  std::size_t changed = 0;
  std::size_t created = 0;
  std::size_t candidates = 0;
};

struct IterationStats {
  PhaseStats update;
  PhaseStats del;
  PhaseStats create;
  std::size_t cycle_passes = 0;
};

struct MaintenanceReport {
  std::size_t iterations = 0;
  std::vector<IterationStats> per_iteration;
  std::size_t markers_created = 0;
  std::size_t markers_deleted = 0;
  std::size_t markers_obsoleted = 0;
  std::size_t suspicious_processed = 0;
  std::size_t candidate_total = 0;
  std::size_t cycle_iterations = 0;  // total cycle passes across create phases
  double wall_ms = 0.0;
};

/// Incremental maintenance loop over a graph, a network, and its execution
/// plan. Runs the Update -> Delete -> Create phase sequence until the Create
/// phase stops producing suspicious nodes:
///
///   repeat
///     suspicious := suspicious + suspiciousNodes(events)
///     obsoletes  := update(suspicious) + obsoleteNodes(events)
///     changed    := delete(obsoletes) + changedNodes(events)
///     suspicious := create(changed)
///     events     := {}
///   until suspicious = {}
///
/// Requires exclusive access to the graph; external changes are rejected
/// while a maintenance call runs.
class MaintenanceEngine {
 public:
  struct Options {
    /// Maximum loop iterations and per-cycle passes. 0 means the default of
    /// 10 x module count.
    std::size_t loop_limit = 0;
    /// Optional phase-action trace: `<phase> <module> <node-id> <verb>`
    /// lines plus `# ...` structural markers.
    std::ostream* trace = nullptr;
  };

  MaintenanceEngine(Graph& graph, const Network& network, Options options = {});

  const ExecutionPlan& plan() const { return plan_; }
  std::size_t loop_limit() const;

  /// Maintains the view layer after the given base-graph changes.
  MaintenanceReport maintain(EventBatch batch);
  /// Drains the graph's pending change log into maintain().
  MaintenanceReport maintain_pending();

  /// Full recomputation: every marker suspicious, candidate sets spanning
  /// all type-conforming nodes. The correctness oracle.
  MaintenanceReport batch_maintain();

  // Event classification (§ view module input computation).
  std::set<NodeId> suspicious_nodes(const EventBatch& batch) const;
  std::set<NodeId> obsolete_nodes(const EventBatch& batch) const;
  std::set<NodeId> changed_nodes(const EventBatch& batch) const;

  /// Per-connector candidate sets: breadth-first over current edges in both
  /// directions from the changed nodes, unbounded within components,
  /// collecting nodes that conform to some input connector.
  CandidateSets reachability_missing(const std::set<NodeId>& changed,
                                     const ViewModule& module) const;

  /// View nodes that created markers make suspicious: traverses only node
  /// types positive in a NAC-dependent's pattern, collecting nodes typed as
  /// the dependent's marker.
  std::set<NodeId> reachability_suspicious(const std::vector<NodeId>& created,
                                           const ViewModule& producer) const;

  // The three phases (public so Fig. 7a-c behavior is directly testable).
  std::set<NodeId> update_phase(const std::set<NodeId>& suspicious, IterationStats* stats);
  std::set<NodeId> delete_phase(const std::set<NodeId>& obsoletes, IterationStats* stats);
  std::set<NodeId> create_phase(const std::set<NodeId>& changed, IterationStats* stats,
                                bool batch_universe = false);

  MarkerIndex& marker_index() { return index_; }

 private:
  MaintenanceReport run_loop(EventBatch batch, bool batch_universe,
                             std::set<NodeId> initial_suspicious);
  CandidateSets candidate_universe(const ViewModule& module) const;
  const ViewModule& owning_module(NodeId id) const;
  void trace_line(const std::string& line);
  void trace_action(const char* phase, const std::string& module, NodeId id, const char* verb);

  Graph& graph_;
  const Network& network_;
  ExecutionPlan plan_;
  MarkerIndex index_;
  Options options_;
};

}  // namespace gatorview
