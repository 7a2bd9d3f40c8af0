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

#include "gatorview/fixtures.hpp"

namespace gatorview::fixtures {

TypeGraph asg_typegraph() {
  TypeGraph t;
  // Base layer.
  t.add_node_type({"Classifier", "", NodeLayer::Base, {{"name", AttrKind::String}}});
  t.add_node_type({"Class", "Classifier", NodeLayer::Base, {{"abstract", AttrKind::Boolean}}});
  t.add_node_type({"Interface", "Classifier", NodeLayer::Base, {}});
  t.add_node_type({"Field", "", NodeLayer::Base, {{"name", AttrKind::String}}});
  t.add_node_type({"ArrayDimension", "", NodeLayer::Base, {{"size", AttrKind::Integer}}});
  t.add_node_type({"TypeReference", "", NodeLayer::Base, {}});
  t.add_node_type({"NamespaceClassifierReference", "TypeReference", NodeLayer::Base, {}});
  t.add_node_type({"ClassifierReference", "TypeReference", NodeLayer::Base, {}});
  t.add_node_type({"QualifiedTypeArgument", "", NodeLayer::Base, {}});
  t.add_node_type({"Method", "", NodeLayer::Base, {{"name", AttrKind::String}}});
  t.add_node_type({"Public", "", NodeLayer::Base, {}});

  t.add_edge_type({"extends", "Class", "NamespaceClassifierReference", EdgeLayer::Base});
  t.add_edge_type({"implements", "Class", "NamespaceClassifierReference", EdgeLayer::Base});
  t.add_edge_type({"classifierRef", "NamespaceClassifierReference", "ClassifierReference",
                   EdgeLayer::Base});
  t.add_edge_type({"refTarget", "ClassifierReference", "Classifier", EdgeLayer::Base});
  t.add_edge_type({"ownsField", "Class", "Field", EdgeLayer::Base});
  t.add_edge_type({"arrayDimension", "Field", "ArrayDimension", EdgeLayer::Base});
  t.add_edge_type({"typeRef", "Field", "NamespaceClassifierReference", EdgeLayer::Base});
  t.add_edge_type({"typeArgument", "ClassifierReference", "QualifiedTypeArgument", EdgeLayer::Base});
  t.add_edge_type({"argTypeRef", "QualifiedTypeArgument", "NamespaceClassifierReference",
                   EdgeLayer::Base});
  t.add_edge_type({"ownsMethod", "Class", "Method", EdgeLayer::Base});
  t.add_edge_type({"hasModifier", "Method", "Public", EdgeLayer::Base});

  // View layer.
  t.add_node_type({"Generalization", "", NodeLayer::View, {}});
  t.add_node_type({"MultiLevelGeneralization", "Generalization", NodeLayer::View, {}});
  t.add_node_type({"Association", "", NodeLayer::View, {}});
  t.add_node_type({"BoundedAssociation", "Association", NodeLayer::View, {}});
  t.add_node_type({"UnboundedAssociation", "Association", NodeLayer::View, {}});
  t.add_node_type({"Composite", "", NodeLayer::View, {}});
  t.add_node_type({"InterfaceImplementation", "", NodeLayer::View, {}});
  t.add_node_type({"ExtractInterface", "", NodeLayer::View, {}});

  t.add_edge_type({"SubRole", "Generalization", "Class", EdgeLayer::ViewRole});
  t.add_edge_type({"SuperRole", "Generalization", "Class", EdgeLayer::ViewRole});
  t.add_edge_type({"Reference", "Association", "Field", EdgeLayer::ViewRole});
  t.add_edge_type({"Target", "Association", "Classifier", EdgeLayer::ViewRole});
  t.add_edge_type({"Composite", "Composite", "Class", EdgeLayer::ViewRole});
  t.add_edge_type({"Component", "Composite", "Class", EdgeLayer::ViewRole});
  t.add_edge_type({"Generalization", "Composite", "Generalization", EdgeLayer::ViewRole});
  t.add_edge_type({"Association", "Composite", "Association", EdgeLayer::ViewRole});
  t.add_edge_type({"ImplClass", "InterfaceImplementation", "Class", EdgeLayer::ViewRole});
  t.add_edge_type({"ImplInterface", "InterfaceImplementation", "Interface", EdgeLayer::ViewRole});
  t.add_edge_type({"ClassRole", "ExtractInterface", "Class", EdgeLayer::ViewRole});

  t.validate();
  return t;
}

Pattern generalization_pattern() {
  Pattern p;
  p.name = "Generalization";
  p.nodes = {
      {"sub", "Class", Binding::InputBound, {}, false},
      {"ncr", "NamespaceClassifierReference", Binding::InputBound, {}, false},
      {"cr", "ClassifierReference", Binding::Free, {}, false},
      {"super", "Class", Binding::Free, {}, false},
  };
  p.edges = {
      {"sub", "ncr", "extends", false},
      {"ncr", "cr", "classifierRef", false},
      {"cr", "super", "refTarget", false},
  };
  p.marking.marker_type = "Generalization";
  p.marking.role_edges = {{"SubRole", "sub"}, {"SuperRole", "super"}};
  p.marking.scoped_vars = {"ncr", "cr"};
  return p;
}

Pattern bounded_association_pattern() {
  Pattern p;
  p.name = "BoundedAssociation";
  p.nodes = {
      {"field", "Field", Binding::InputBound, {}, false},
      {"dim", "ArrayDimension", Binding::Free, {}, false},
      {"ncr", "NamespaceClassifierReference", Binding::InputBound, {}, false},
      {"cr", "ClassifierReference", Binding::Free, {}, false},
      {"target", "Class", Binding::Free, {}, false},
  };
  p.edges = {
      {"field", "dim", "arrayDimension", false},
      {"field", "ncr", "typeRef", false},
      {"ncr", "cr", "classifierRef", false},
      {"cr", "target", "refTarget", false},
  };
  p.marking.marker_type = "BoundedAssociation";
  p.marking.role_edges = {{"Reference", "field"}, {"Target", "target"}};
  p.marking.scoped_vars = {"dim", "ncr", "cr"};
  return p;
}

Pattern unbounded_association_pattern() {
  Pattern p;
  p.name = "UnboundedAssociation";
  p.nodes = {
      {"field", "Field", Binding::InputBound, {}, false},
      {"ncr", "NamespaceClassifierReference", Binding::InputBound, {}, false},
      {"cr", "ClassifierReference", Binding::Free, {}, false},
      {"list", "Class", Binding::Free, {{"name", AttrCmp::Eq, AttrValue{std::string("List")}}}, false},
      {"qta", "QualifiedTypeArgument", Binding::Free, {}, false},
      {"ncr2", "NamespaceClassifierReference", Binding::Free, {}, false},
      {"cr2", "ClassifierReference", Binding::Free, {}, false},
      {"target", "Class", Binding::Free, {}, false},
  };
  p.edges = {
      {"field", "ncr", "typeRef", false},
      {"ncr", "cr", "classifierRef", false},
      {"cr", "list", "refTarget", false},
      {"cr", "qta", "typeArgument", false},
      {"qta", "ncr2", "argTypeRef", false},
      {"ncr2", "cr2", "classifierRef", false},
      {"cr2", "target", "refTarget", false},
  };
  p.marking.marker_type = "UnboundedAssociation";
  p.marking.role_edges = {{"Reference", "field"}, {"Target", "target"}};
  p.marking.scoped_vars = {"ncr", "cr", "list", "qta", "ncr2", "cr2"};
  return p;
}

Pattern composite_pattern() {
  Pattern p;
  p.name = "Composite";
  p.nodes = {
      {"gen", "Generalization", Binding::InputBound, {}, false},
      {"assoc", "Association", Binding::InputBound, {}, false},
      {"sub", "Class", Binding::Free, {}, false},
      {"super", "Class", Binding::Free, {}, false},
      {"field", "Field", Binding::Free, {}, false},
  };
  p.edges = {
      {"gen", "sub", "SubRole", false},
      {"gen", "super", "SuperRole", false},
      {"assoc", "field", "Reference", false},
      {"assoc", "super", "Target", false},
      {"sub", "field", "ownsField", false},
  };
  p.marking.marker_type = "Composite";
  p.marking.role_edges = {{"Composite", "sub"},
                          {"Component", "super"},
                          {"Generalization", "gen"},
                          {"Association", "assoc"}};
  p.marking.scoped_vars = {"field"};
  return p;
}

Pattern multi_level_generalization_pattern() {
  // Two (multi-level) generalizations sharing a class that is superclass in
  // one and subclass in the other. The reused markers and the shared class
  // are scoped: the duplicate key stays (sub, super), which collapses the
  // decompositions of one chain into a single marker.
  Pattern p;
  p.name = "MultiLevelGeneralization";
  p.nodes = {
      {"lower", "Generalization", Binding::InputBound, {}, false},
      {"upper", "Generalization", Binding::InputBound, {}, false},
      {"sub", "Class", Binding::Free, {}, false},
      {"mid", "Class", Binding::Free, {}, false},
      {"super", "Class", Binding::Free, {}, false},
  };
  p.edges = {
      {"lower", "sub", "SubRole", false},
      {"lower", "mid", "SuperRole", false},
      {"upper", "mid", "SubRole", false},
      {"upper", "super", "SuperRole", false},
  };
  p.marking.marker_type = "MultiLevelGeneralization";
  p.marking.role_edges = {{"SubRole", "sub"}, {"SuperRole", "super"}};
  p.marking.scoped_vars = {"lower", "upper", "mid"};
  return p;
}

Pattern interface_implementation_pattern() {
  Pattern p;
  p.name = "InterfaceImplementation";
  p.nodes = {
      {"c", "Class", Binding::InputBound, {}, false},
      {"ncr", "NamespaceClassifierReference", Binding::InputBound, {}, false},
      {"cr", "ClassifierReference", Binding::Free, {}, false},
      {"i", "Interface", Binding::Free, {}, false},
  };
  p.edges = {
      {"c", "ncr", "implements", false},
      {"ncr", "cr", "classifierRef", false},
      {"cr", "i", "refTarget", false},
  };
  p.marking.marker_type = "InterfaceImplementation";
  p.marking.role_edges = {{"ImplClass", "c"}, {"ImplInterface", "i"}};
  p.marking.scoped_vars = {"ncr", "cr"};
  return p;
}

Pattern extract_interface_pattern() {
  // Classes owning a public method that do not implement any interface: the
  // split complex NAC, negating the InterfaceImplementation marker.
  Pattern p;
  p.name = "ExtractInterface";
  p.nodes = {
      {"c", "Class", Binding::InputBound, {}, false},
      {"m", "Method", Binding::InputBound, {}, false},
      {"p", "Public", Binding::Free, {}, false},
      {"ii", "InterfaceImplementation", Binding::Free, {}, true},
  };
  p.edges = {
      {"c", "m", "ownsMethod", false},
      {"m", "p", "hasModifier", false},
      {"ii", "c", "ImplClass", true},
  };
  p.marking.marker_type = "ExtractInterface";
  p.marking.role_edges = {{"ClassRole", "c"}};
  p.marking.scoped_vars = {"m", "p"};
  return p;
}

namespace {

ModuleDef module_for(const Pattern& p, std::vector<ModuleDef::InputDef> inputs) {
  ModuleDef m;
  m.name = p.name;
  m.pattern = p.name;
  m.inputs = std::move(inputs);
  return m;
}

NetworkDef base_network() {
  NetworkDef def;
  def.patterns = {generalization_pattern(), bounded_association_pattern(),
                  unbounded_association_pattern(), composite_pattern()};
  def.modules = {
      module_for(def.patterns[0], {{"classes", "Class", "sub"}, {"refs", "TypeReference", "ncr"}}),
      module_for(def.patterns[1], {{"fields", "Field", "field"}, {"refs", "TypeReference", "ncr"}}),
      module_for(def.patterns[2], {{"fields", "Field", "field"}, {"refs", "TypeReference", "ncr"}}),
      module_for(def.patterns[3],
                 {{"gens", "Generalization", "gen"}, {"assocs", "Association", "assoc"}}),
  };
  def.wires = {
      {"Generalization", "Composite", "gens"},
      {"BoundedAssociation", "Composite", "assocs"},
      {"UnboundedAssociation", "Composite", "assocs"},
  };
  return def;
}

}  // namespace

NetworkDef running_example_network() { return base_network(); }

NetworkDef recursion_network() {
  NetworkDef def = base_network();
  def.patterns.push_back(multi_level_generalization_pattern());
  def.modules.push_back(module_for(def.patterns.back(), {{"lowers", "Generalization", "lower"},
                                                         {"uppers", "Generalization", "upper"}}));
  def.wires.push_back({"Generalization", "MultiLevelGeneralization", "lowers"});
  def.wires.push_back({"Generalization", "MultiLevelGeneralization", "uppers"});
  def.wires.push_back({"MultiLevelGeneralization", "MultiLevelGeneralization", "lowers"});
  def.wires.push_back({"MultiLevelGeneralization", "MultiLevelGeneralization", "uppers"});
  def.wires.push_back({"MultiLevelGeneralization", "Composite", "gens"});
  def.cycles.push_back({"MultiLevelGeneralization"});
  return def;
}

NetworkDef extract_interface_network() {
  NetworkDef def;
  def.patterns = {interface_implementation_pattern(), extract_interface_pattern()};
  def.modules = {
      module_for(def.patterns[0], {{"classes", "Class", "c"}, {"refs", "TypeReference", "ncr"}}),
      module_for(def.patterns[1], {{"classes", "Class", "c"}, {"methods", "Method", "m"}}),
  };
  // The NAC dependency on InterfaceImplementation is derived, not wired.
  return def;
}

CompositeFixture build_composite_fixture(Graph& graph) {
  CompositeFixture f;
  f.container = graph.create_node("Class", {{"name", std::string("Container")}});
  f.component = graph.create_node("Class", {{"name", std::string("Component")}});
  f.gen_ncr = graph.create_node("NamespaceClassifierReference");
  f.gen_cr = graph.create_node("ClassifierReference");
  f.children = graph.create_node("Field", {{"name", std::string("children")}});
  f.dim = graph.create_node("ArrayDimension");
  f.assoc_ncr = graph.create_node("NamespaceClassifierReference");
  f.assoc_cr = graph.create_node("ClassifierReference");

  graph.add_edge("extends", f.container, f.gen_ncr);
  graph.add_edge("classifierRef", f.gen_ncr, f.gen_cr);
  graph.add_edge("refTarget", f.gen_cr, f.component);
  graph.add_edge("ownsField", f.container, f.children);
  graph.add_edge("arrayDimension", f.children, f.dim);
  graph.add_edge("typeRef", f.children, f.assoc_ncr);
  graph.add_edge("classifierRef", f.assoc_ncr, f.assoc_cr);
  graph.add_edge("refTarget", f.assoc_cr, f.component);
  return f;
}

std::pair<NodeId, NodeId> link_generalization(Graph& graph, NodeId subclass, NodeId superclass) {
  NodeId ncr = graph.create_node("NamespaceClassifierReference");
  NodeId cr = graph.create_node("ClassifierReference");
  graph.add_edge("extends", subclass, ncr);
  graph.add_edge("classifierRef", ncr, cr);
  graph.add_edge("refTarget", cr, superclass);
  return {ncr, cr};
}

std::vector<NodeId> build_generalization_chain(Graph& graph, std::size_t links) {
  std::vector<NodeId> classes;
  for (std::size_t i = 0; i <= links; ++i)
    classes.push_back(graph.create_node("Class", {{"name", "C" + std::to_string(i)}}));
  for (std::size_t i = 0; i < links; ++i) link_generalization(graph, classes[i], classes[i + 1]);
  return classes;
}

ExtractInterfaceFixture build_extract_interface_fixture(Graph& graph) {
  ExtractInterfaceFixture f;
  f.klass = graph.create_node("Class", {{"name", std::string("Widget")}});
  f.method = graph.create_node("Method", {{"name", std::string("draw")}});
  f.modifier = graph.create_node("Public");
  f.iface = graph.create_node("Interface", {{"name", std::string("Drawable")}});
  graph.add_edge("ownsMethod", f.klass, f.method);
  graph.add_edge("hasModifier", f.method, f.modifier);
  return f;
}

std::pair<NodeId, NodeId> link_interface_implementation(Graph& graph, NodeId klass, NodeId iface) {
  NodeId ncr = graph.create_node("NamespaceClassifierReference");
  NodeId cr = graph.create_node("ClassifierReference");
  graph.add_edge("implements", klass, ncr);
  graph.add_edge("classifierRef", ncr, cr);
  graph.add_edge("refTarget", cr, iface);
  return {ncr, cr};
}

}  // namespace gatorview::fixtures
