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

#include <map>
#include <vector>

#include "gatorview/graph.hpp"
#include "gatorview/pattern.hpp"

namespace gatorview {

/// Candidate node sets keyed by pattern var. Input-bound vars listed here may
/// only bind nodes from their set; vars without an entry are unrestricted.
/// Sets must be sorted ascending.
struct CandidateSets {
  std::map<std::string, std::vector<NodeId>> by_var;

  std::size_t total() const;
};

/// Seeded subgraph matching with simple-NAC semantics.
///
/// Returns every injective binding of the pattern's positive vars such that
/// all positive edges exist with the declared edge types, attribute
/// predicates hold, input-bound vars are drawn from their candidate sets,
/// `fixed` vars bind exactly the given nodes, and no embedding of any negated
/// element extends the binding. Anchored backtracking: search starts from the
/// smallest restricted domain and expands along pattern edges in both
/// directions; ties break on ascending node ids, so results are
/// deterministic.
std::vector<Match> find_matches(const Graph& graph, const Pattern& pattern,
                                const CandidateSets& candidates = {},
                                const std::map<std::string, NodeId>& fixed = {});

}  // namespace gatorview
