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

#include <set>
#include <string>

#include "gatorview/graph.hpp"
#include "gatorview/network.hpp"

namespace gatorview {

/// Canonical, id-independent form of the view layer: every marker rendered
/// as `Type(target, ...)` with role targets in declared role order, base
/// targets as `#id` and marker targets recursively by their own signature.
/// Scopes are excluded, matching the duplicate key. Two graphs over the same
/// base layer carry the same view content iff their signature sets are
/// equal.
std::set<std::string> view_signatures(const Graph& graph, const Network& network,
                                      bool top_level_only = true);

/// Human-readable diff of two signature sets; empty when equal.
std::string signature_diff(const std::set<std::string>& left, const std::set<std::string>& right);

}  // namespace gatorview
