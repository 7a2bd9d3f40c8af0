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
#include <utility>
#include <vector>

#include "gatorview/network.hpp"
#include "gatorview/pattern.hpp"

namespace gatorview {

/// Graph-condition tree: atomic patterns, conjunction, disjunction,
/// negation.
///
/// A conjunction carries an explicit glue pattern whose placeholder vars are
/// bound to the children; the glue supplies the join structure (role edges
/// on the placeholders, extra base nodes) and the conjunction's marking.
/// Negation is only valid as a conjunction child bound to a negated
/// placeholder var.
struct ConditionAST {
  enum class Kind { Atomic, And, Or, Not };

  Kind kind = Kind::Atomic;
  Pattern pattern;  // Atomic
  Pattern glue;     // And
  std::vector<std::pair<std::string, ConditionAST>> children;  // And: glue var -> child
  std::vector<ConditionAST> alts;  // Or
  std::string common_supertype;    // Or: declared common view supertype
  std::vector<ConditionAST> inner; // Not: exactly one element

  static ConditionAST atomic(Pattern p);
  static ConditionAST conj(Pattern glue,
                           std::vector<std::pair<std::string, ConditionAST>> children);
  static ConditionAST disj(std::vector<ConditionAST> alts, std::string supertype);
  static ConditionAST neg(ConditionAST child);
};

struct LoweredNetwork {
  NetworkDef def;
  /// Modules producing the condition's result markers (several for a
  /// disjunction root).
  std::vector<std::string> output_modules;
  std::string output_type;
};

/// Maps a graph condition onto a network fragment:
///  - atomic conditions become single modules fed only by base types,
///  - conjunctions become one consumer with an input per conjunct,
///  - disjunctions wire all producers into one input typed with the common
///    marker supertype,
///  - negations over directly-attached atomics get embedded into the
///    consumer's pattern (simple NAC), anything larger splits into a
///    positive matcher plus a consumer negating its marker.
LoweredNetwork lower_condition(const ConditionAST& ast, const TypeGraph& types);

}  // namespace gatorview
