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

#include <string>
#include <vector>

#include "gatorview/network.hpp"

namespace gatorview {

/// One schedule entry: a single module, or a recursion cycle run to the fix
/// point of its designated module. Within a cycle pass the fix-point module
/// runs last so it sees the other members' output before the quiescence
/// check.
struct PlanStep {
  std::vector<std::string> modules;
  std::string fixpoint;  // empty for single-module steps

  bool is_cycle() const { return !fixpoint.empty(); }
};

struct ExecutionPlan {
  std::vector<PlanStep> schedule;

  std::size_t index_of(const std::string& module) const;
  std::size_t module_count() const;
};

/// Topological order over the cycle-condensed wire graph, deterministic via
/// lexicographic tie-breaks. Each cycle's fix-point module is one with a
/// dependent outside the cycle; when the whole cycle is terminal every
/// member is eligible. Ties break on module name.
ExecutionPlan plan_execution(const Network& network);

std::string format_plan(const ExecutionPlan& plan);

}  // namespace gatorview
