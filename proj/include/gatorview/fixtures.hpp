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

#include "gatorview/graph.hpp"
#include "gatorview/network.hpp"

namespace gatorview::fixtures {

// Design-pattern-recovery workload: abstract-syntax-graph base types (Class,
// Field, type references, ...) with view types marking Generalization,
// Association, Composite, MultiLevelGeneralization, InterfaceImplementation
// and ExtractInterface matches.

/// The shared type graph of every shipped fixture.
TypeGraph asg_typegraph();

Pattern generalization_pattern();
Pattern bounded_association_pattern();
Pattern unbounded_association_pattern();
Pattern composite_pattern();
Pattern multi_level_generalization_pattern();
Pattern interface_implementation_pattern();
Pattern extract_interface_pattern();

/// Generalization, BoundedAssociation, UnboundedAssociation and Composite —
/// the four-module generalized discrimination network.
NetworkDef running_example_network();

/// Running example plus the MultiLevelGeneralization self-cycle.
NetworkDef recursion_network();

/// InterfaceImplementation producer plus ExtractInterface consumer (a split
/// complex NAC).
NetworkDef extract_interface_network();

/// The container/component instance graph: one Generalization, one
/// BoundedAssociation and one Composite occurrence.
struct CompositeFixture {
  NodeId container = 0;
  NodeId component = 0;
  NodeId gen_ncr = 0;
  NodeId gen_cr = 0;
  NodeId children = 0;
  NodeId dim = 0;
  NodeId assoc_ncr = 0;
  NodeId assoc_cr = 0;
};
CompositeFixture build_composite_fixture(Graph& graph);

/// Class chain c0 <|-- c1 <|-- ... <|-- ck (k generalization links). Returns
/// the k+1 class ids in chain order.
std::vector<NodeId> build_generalization_chain(Graph& graph, std::size_t links);

/// Adds one generalization link (subclass extends superclass) between two
/// existing classes; returns the created reference node ids.
std::pair<NodeId, NodeId> link_generalization(Graph& graph, NodeId subclass, NodeId superclass);

/// A class owning a public method, plus a detached interface: the
/// ExtractInterface situation before any InterfaceImplementation exists.
struct ExtractInterfaceFixture {
  NodeId klass = 0;
  NodeId method = 0;
  NodeId modifier = 0;
  NodeId iface = 0;
};
ExtractInterfaceFixture build_extract_interface_fixture(Graph& graph);

/// Wires klass up to implement iface; returns the created reference nodes.
std::pair<NodeId, NodeId> link_interface_implementation(Graph& graph, NodeId klass, NodeId iface);

}  // namespace gatorview::fixtures
