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

#include "gatorview/network.hpp"

namespace gatorview {

/// Rewrites an acyclic network into an equivalent one in which every module
/// joins at most two inputs: modules whose pattern has more than two
/// positive nodes become left-associative chains of binary join modules
/// materializing partial matches as intermediate markers. Intermediate
/// marker and role-edge types are registered on `types` as
/// `<module>__join<k>` / `<module>__join<k>__<var>`. Top-level marker types
/// and markings are unchanged; negated elements move into the chain's final
/// module. Networks with recursion cycles are rejected.
Network emulate_rete(const Network& network, TypeGraph& types);

}  // namespace gatorview
