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

#include <cstdint>
#include <filesystem>

#include "gatorview/json_io.hpp"

namespace gatorview {

/// Deterministic workload over the running-example network. The generator
/// constructs occurrences from fresh reference nodes so the initial
/// occurrence counts are exact by construction; noise edges only ever touch
/// incomplete chains and can complete no pattern.
struct SyntheticWorkloadSpec {
  std::uint64_t seed = 1;
  std::size_t classes = 100;
  std::size_t generalizations = 10;  // plain ones, in addition to composites'
  std::size_t bounded_associations = 5;
  std::size_t unbounded_associations = 0;
  std::size_t composites = 2;  // each adds one generalization + one bounded association
  std::size_t noise_edges = 20;
  std::size_t script_length = 50;
  /// Fraction of script edits that create or destroy pattern occurrences;
  /// the rest are attribute flips and noise-structure edits.
  double churn_rate = 0.5;
};

SyntheticWorkloadSpec genspec_from_json(const nlohmann::json& j);
nlohmann::json genspec_to_json(const SyntheticWorkloadSpec& spec);

struct SyntheticWorkload {
  std::unique_ptr<TypeGraph> types;
  std::unique_ptr<Graph> graph;  // initial state, before the script
  NetworkDef network_def;
  std::vector<ChangeEvent> script;
  // Ground truth for the initial graph, recorded by construction.
  std::size_t true_generalizations = 0;
  std::size_t true_bounded = 0;
  std::size_t true_unbounded = 0;
  std::size_t true_composites = 0;
};

SyntheticWorkload generate_synthetic(const SyntheticWorkloadSpec& spec);

/// Writes typegraph.json, graph.json, network.json, script.jsonl, truth.json
/// and the ws.json manifest into `dir`.
void write_workspace(const SyntheticWorkload& workload, const std::filesystem::path& dir);

}  // namespace gatorview
