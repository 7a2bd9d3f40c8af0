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

#include "gatorview/json_io.hpp"

#include <fstream>
#include <sstream>

namespace gatorview {

using nlohmann::json;

namespace {

json attr_value_to_json(const AttrValue& v) {
  switch (v.index()) {
    case 0: return std::get<std::string>(v);
    case 1: return std::get<std::int64_t>(v);
    default: return std::get<bool>(v);
  }
}

AttrValue attr_value_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw ParseError("attribute values must be string, integer or boolean");
}

json attrs_to_json(const std::map<std::string, AttrValue>& attrs) {
  json out = json::object();
  for (const auto& [name, value] : attrs) out[name] = attr_value_to_json(value);
  return out;
}

std::map<std::string, AttrValue> attrs_from_json(const json& j) {
  std::map<std::string, AttrValue> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.emplace(it.key(), attr_value_from_json(it.value()));
  return out;
}

NodeLayer node_layer_from_string(const std::string& s) {
  if (s == "base") return NodeLayer::Base;
  if (s == "view") return NodeLayer::View;
  throw ParseError("unknown node layer: " + s);
}

EdgeLayer edge_layer_from_string(const std::string& s) {
  if (s == "base") return EdgeLayer::Base;
  if (s == "view-role") return EdgeLayer::ViewRole;
  if (s == "scope") return EdgeLayer::Scope;
  throw ParseError("unknown edge layer: " + s);
}

AttrKind attr_kind_from_string(const std::string& s) {
  if (s == "string") return AttrKind::String;
  if (s == "integer") return AttrKind::Integer;
  if (s == "boolean") return AttrKind::Boolean;
  throw ParseError("unknown attribute kind: " + s);
}

const json& require(const json& j, const char* field, const char* context) {
  auto it = j.find(field);
  if (it == j.end())
    throw ParseError(std::string(context) + ": missing field '" + field + "'");
  return *it;
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace

json typegraph_to_json(const TypeGraph& types) {
  json node_types = json::array();
  for (const auto& [name, def] : types.node_types()) {
    json attrs = json::array();
    for (const auto& a : def.attributes)
      attrs.push_back({{"name", a.name}, {"kind", to_string(a.kind)}});
    node_types.push_back({{"name", def.name},
                          {"supertype", def.supertype},
                          {"layer", to_string(def.layer)},
                          {"attributes", attrs}});
  }
  json edge_types = json::array();
  for (const auto& [name, def] : types.edge_types())
    edge_types.push_back({{"name", def.name},
                          {"source", def.source_type},
                          {"target", def.target_type},
                          {"layer", to_string(def.layer)}});
  return {{"node_types", node_types}, {"edge_types", edge_types}};
}

TypeGraph typegraph_from_json(const json& j) {
  TypeGraph types;
  for (const auto& nt : require(j, "node_types", "typegraph")) {
    NodeTypeDef def;
    def.name = require(nt, "name", "node type").get<std::string>();
    def.supertype = nt.value("supertype", std::string{});
    def.layer = node_layer_from_string(require(nt, "layer", "node type").get<std::string>());
    for (const auto& a : nt.value("attributes", json::array()))
      def.attributes.push_back(AttributeDef{
          require(a, "name", "attribute").get<std::string>(),
          attr_kind_from_string(require(a, "kind", "attribute").get<std::string>())});
    types.add_node_type(std::move(def));
  }
  for (const auto& et : j.value("edge_types", json::array())) {
    EdgeTypeDef def;
    def.name = require(et, "name", "edge type").get<std::string>();
    def.source_type = require(et, "source", "edge type").get<std::string>();
    def.target_type = require(et, "target", "edge type").get<std::string>();
    def.layer = edge_layer_from_string(require(et, "layer", "edge type").get<std::string>());
    types.add_edge_type(std::move(def));
  }
  types.validate();
  return types;
}

json graph_to_json(const Graph& graph) {
  json nodes = json::array();
  for (const auto& [id, n] : graph.nodes()) {
    json jn = {{"id", n.id}, {"type", n.type}, {"attrs", attrs_to_json(n.attrs)}};
    if (!n.module.empty()) jn["module"] = n.module;
    if (n.obsolete) jn["obsolete"] = true;
    if (!n.former_marked.empty()) jn["former_marked"] = n.former_marked;
    nodes.push_back(std::move(jn));
  }
  json edges = json::array();
  for (const auto& [id, e] : graph.edges())
    edges.push_back({{"id", e.id},
                     {"type", e.type},
                     {"src", e.src},
                     {"dst", e.dst},
                     {"layer", to_string(graph.types().edge_layer(e.type))}});
  return {{"typegraph", typegraph_to_json(graph.types())},
          {"nodes", nodes},
          {"edges", edges},
          {"next_node_id", graph.next_node_id()},
          {"next_edge_id", graph.next_edge_id()}};
}

namespace {

std::unique_ptr<Graph> graph_body_from_json(const json& j, const TypeGraph& types) {
  auto graph = std::make_unique<Graph>(&types);
  for (const auto& jn : require(j, "nodes", "graph")) {
    ChangeEvent ev = ChangeEvent::create_node(
        require(jn, "type", "node").get<std::string>(),
        attrs_from_json(jn.value("attrs", json::object())),
        require(jn, "id", "node").get<NodeId>(), jn.value("module", std::string{}));
    graph->apply(ev);
    if (jn.value("obsolete", false)) graph->node_mut(ev.node).obsolete = true;
    if (jn.contains("former_marked"))
      graph->node_mut(ev.node).former_marked = jn["former_marked"].get<std::vector<NodeId>>();
  }
  // All nodes first so edges resolve their endpoints.
  for (const auto& je : require(j, "edges", "graph"))
    graph->apply(ChangeEvent::add_edge(require(je, "type", "edge").get<std::string>(),
                                       require(je, "src", "edge").get<NodeId>(),
                                       require(je, "dst", "edge").get<NodeId>(),
                                       require(je, "id", "edge").get<EdgeId>()));
  if (j.contains("next_node_id"))
    graph->set_counters(j["next_node_id"].get<NodeId>(), j["next_edge_id"].get<EdgeId>());
  return graph;
}

}  // namespace

Snapshot graph_from_json(const json& j) {
  Snapshot snap;
  snap.types =
      std::make_unique<TypeGraph>(typegraph_from_json(require(j, "typegraph", "graph")));
  snap.graph = graph_body_from_json(j, *snap.types);
  return snap;
}

std::unique_ptr<Graph> graph_from_json(const json& j, const TypeGraph& types) {
  TypeGraph embedded = typegraph_from_json(require(j, "typegraph", "graph"));
  if (!(embedded == types))
    throw ValidationError("snapshot's embedded type graph differs from the workspace type graph");
  return graph_body_from_json(j, types);
}

json event_to_json(const ChangeEvent& ev) {
  json j = {{"op", to_string(ev.kind)}};
  switch (ev.kind) {
    case ChangeKind::NodeCreated:
      j["id"] = ev.node;
      j["type"] = ev.type;
      if (!ev.attrs.empty()) j["attrs"] = attrs_to_json(ev.attrs);
      if (!ev.module.empty()) j["module"] = ev.module;
      break;
    case ChangeKind::NodeDeleted:
      j["id"] = ev.node;
      if (!ev.neighbors.empty()) j["neighbors"] = ev.neighbors;
      break;
    case ChangeKind::EdgeAdded:
      j["id"] = ev.edge;
      j["type"] = ev.type;
      j["src"] = ev.src;
      j["dst"] = ev.dst;
      break;
    case ChangeKind::EdgeRemoved:
      j["id"] = ev.edge;
      break;
    case ChangeKind::AttributeChanged:
      j["id"] = ev.node;
      j["attr"] = ev.attr;
      j["value"] = attr_value_to_json(ev.value);
      break;
  }
  return j;
}

ChangeEvent event_from_json(const json& j) {
  std::string op = require(j, "op", "event").get<std::string>();
  if (op == "node-created") {
    return ChangeEvent::create_node(require(j, "type", "event").get<std::string>(),
                                    attrs_from_json(j.value("attrs", json::object())),
                                    require(j, "id", "event").get<NodeId>(),
                                    j.value("module", std::string{}));
  }
  if (op == "node-deleted") {
    ChangeEvent ev = ChangeEvent::delete_node(require(j, "id", "event").get<NodeId>());
    if (j.contains("neighbors")) ev.neighbors = j["neighbors"].get<std::vector<NodeId>>();
    return ev;
  }
  if (op == "edge-added")
    return ChangeEvent::add_edge(require(j, "type", "event").get<std::string>(),
                                 require(j, "src", "event").get<NodeId>(),
                                 require(j, "dst", "event").get<NodeId>(),
                                 require(j, "id", "event").get<EdgeId>());
  if (op == "edge-removed") return ChangeEvent::remove_edge(require(j, "id", "event").get<EdgeId>());
  if (op == "attr-changed")
    return ChangeEvent::set_attr(require(j, "id", "event").get<NodeId>(),
                                 require(j, "attr", "event").get<std::string>(),
                                 attr_value_from_json(require(j, "value", "event")));
  throw ParseError("unknown event op: " + op);
}

json pattern_to_json(const Pattern& p) {
  json nodes = json::array();
  for (const auto& n : p.nodes) {
    json jn = {{"var", n.var},
               {"type", n.required_type},
               {"binding", n.binding == Binding::InputBound ? "input" : "free"}};
    if (!n.predicates.empty()) {
      json preds = json::array();
      for (const auto& pr : n.predicates)
        preds.push_back({{"attr", pr.attribute},
                         {"op", pr.cmp == AttrCmp::Eq ? "eq" : "ne"},
                         {"value", attr_value_to_json(pr.constant)}});
      jn["predicates"] = preds;
    }
    nodes.push_back(std::move(jn));
  }
  json edges = json::array();
  for (const auto& e : p.edges)
    edges.push_back({{"from", e.source_var}, {"to", e.target_var}, {"type", e.edge_type}});
  json negated = json::object();
  json neg_nodes = json::array();
  for (const auto& n : p.nodes)
    if (n.negated) neg_nodes.push_back(n.var);
  json neg_edges = json::array();
  for (const auto& e : p.edges)
    if (e.negated) neg_edges.push_back(json::array({e.source_var, e.target_var, e.edge_type}));
  negated["nodes"] = neg_nodes;
  negated["edges"] = neg_edges;
  json roles = json::array();
  for (const auto& r : p.marking.role_edges)
    roles.push_back({{"type", r.edge_type}, {"var", r.var}});
  return {{"name", p.name},
          {"nodes", nodes},
          {"edges", edges},
          {"negated", negated},
          {"marking",
           {{"marker", p.marking.marker_type},
            {"roles", roles},
            {"scopes", p.marking.scoped_vars}}}};
}

Pattern pattern_from_json(const json& j) {
  Pattern p;
  p.name = require(j, "name", "pattern").get<std::string>();
  for (const auto& jn : require(j, "nodes", "pattern")) {
    PatternNode n;
    n.var = require(jn, "var", "pattern node").get<std::string>();
    n.required_type = require(jn, "type", "pattern node").get<std::string>();
    std::string binding = jn.value("binding", "free");
    if (binding == "input") n.binding = Binding::InputBound;
    else if (binding == "free") n.binding = Binding::Free;
    else throw ParseError("unknown binding: " + binding);
    for (const auto& jp : jn.value("predicates", json::array())) {
      AttributePredicate pr;
      pr.attribute = require(jp, "attr", "predicate").get<std::string>();
      std::string op = require(jp, "op", "predicate").get<std::string>();
      if (op == "eq") pr.cmp = AttrCmp::Eq;
      else if (op == "ne") pr.cmp = AttrCmp::Ne;
      else throw ParseError("unknown predicate op: " + op);
      pr.constant = attr_value_from_json(require(jp, "value", "predicate"));
      n.predicates.push_back(std::move(pr));
    }
    p.nodes.push_back(std::move(n));
  }
  for (const auto& je : require(j, "edges", "pattern"))
    p.edges.push_back(PatternEdge{require(je, "from", "pattern edge").get<std::string>(),
                                  require(je, "to", "pattern edge").get<std::string>(),
                                  require(je, "type", "pattern edge").get<std::string>()});
  if (j.contains("negated")) {
    const json& neg = j["negated"];
    for (const auto& v : neg.value("nodes", json::array())) {
      bool found = false;
      for (auto& n : p.nodes)
        if (n.var == v.get<std::string>()) {
          n.negated = true;
          found = true;
        }
      if (!found) throw ParseError("pattern " + p.name + ": negated unknown var");
    }
    for (const auto& t : neg.value("edges", json::array())) {
      if (!t.is_array() || t.size() != 3)
        throw ParseError("pattern " + p.name + ": negated edges are [from, to, type] triples");
      bool found = false;
      for (auto& e : p.edges)
        if (e.source_var == t[0].get<std::string>() && e.target_var == t[1].get<std::string>() &&
            e.edge_type == t[2].get<std::string>()) {
          e.negated = true;
          found = true;
        }
      if (!found) throw ParseError("pattern " + p.name + ": negated unknown edge");
    }
  }
  const json& marking = require(j, "marking", "pattern");
  p.marking.marker_type = require(marking, "marker", "marking").get<std::string>();
  for (const auto& jr : marking.value("roles", json::array()))
    p.marking.role_edges.push_back(RoleSpec{require(jr, "type", "role").get<std::string>(),
                                            require(jr, "var", "role").get<std::string>()});
  for (const auto& v : marking.value("scopes", json::array()))
    p.marking.scoped_vars.push_back(v.get<std::string>());
  return p;
}

json network_def_to_json(const NetworkDef& def) {
  json patterns = json::array();
  for (const auto& p : def.patterns) patterns.push_back(pattern_to_json(p));
  json modules = json::array();
  for (const auto& m : def.modules) {
    json inputs = json::array();
    for (const auto& in : m.inputs)
      inputs.push_back({{"name", in.name}, {"type", in.type}, {"binds", in.binds}});
    modules.push_back({{"name", m.name}, {"pattern", m.pattern}, {"inputs", inputs}});
  }
  json wires = json::array();
  for (const auto& w : def.wires)
    wires.push_back({{"from", w.from}, {"to", w.to}, {"input", w.input}});
  return {{"patterns", patterns}, {"modules", modules}, {"wires", wires}, {"cycles", def.cycles}};
}

NetworkDef network_def_from_json(const json& j) {
  NetworkDef def;
  for (const auto& jp : j.value("patterns", json::array()))
    def.patterns.push_back(pattern_from_json(jp));
  for (const auto& jm : require(j, "modules", "network")) {
    ModuleDef m;
    m.name = require(jm, "name", "module").get<std::string>();
    m.pattern = require(jm, "pattern", "module").get<std::string>();
    for (const auto& ji : jm.value("inputs", json::array()))
      m.inputs.push_back(ModuleDef::InputDef{require(ji, "name", "input").get<std::string>(),
                                             require(ji, "type", "input").get<std::string>(),
                                             require(ji, "binds", "input").get<std::string>()});
    def.modules.push_back(std::move(m));
  }
  for (const auto& jw : j.value("wires", json::array()))
    def.wires.push_back(WireDef{require(jw, "from", "wire").get<std::string>(),
                                require(jw, "to", "wire").get<std::string>(),
                                require(jw, "input", "wire").get<std::string>()});
  for (const auto& jc : j.value("cycles", json::array()))
    def.cycles.push_back(jc.get<std::vector<std::string>>());
  return def;
}

json report_to_json(const MaintenanceReport& report) {
  json iterations = json::array();
  for (const auto& it : report.per_iteration) {
    iterations.push_back(
        {{"update", {{"processed", it.update.updated}, {"kept", it.update.kept}, {"obsoleted", it.update.obsoleted}}},
         {"delete", {{"deleted", it.del.deleted}, {"changed", it.del.changed}}},
         {"create", {{"created", it.create.created}, {"candidates", it.create.candidates}}},
         {"cycle_passes", it.create.cycle_passes}});
  }
  return {{"iterations", report.iterations},
          {"per_iteration", iterations},
          {"markers_created", report.markers_created},
          {"markers_deleted", report.markers_deleted},
          {"markers_obsoleted", report.markers_obsoleted},
          {"suspicious_processed", report.suspicious_processed},
          {"candidate_total", report.candidate_total},
          {"cycle_iterations", report.cycle_iterations},
          {"wall_ms", report.wall_ms}};
}

void save_typegraph(const TypeGraph& types, const std::filesystem::path& path) {
  write_file(path, typegraph_to_json(types));
}

TypeGraph load_typegraph(const std::filesystem::path& path) {
  return typegraph_from_json(parse_file(path));
}

void save_snapshot(const Graph& graph, const std::filesystem::path& path) {
  write_file(path, graph_to_json(graph));
}

Snapshot load_snapshot(const std::filesystem::path& path) {
  return graph_from_json(parse_file(path));
}

void save_network_def(const NetworkDef& def, const std::filesystem::path& path) {
  write_file(path, network_def_to_json(def));
}

NetworkDef load_network_def(const std::filesystem::path& path) {
  return network_def_from_json(parse_file(path));
}

void save_script(const std::vector<ChangeEvent>& script, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  for (const auto& ev : script) out << event_to_json(ev).dump() << "\n";
}

std::vector<ChangeEvent> load_script(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<ChangeEvent> script;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      script.push_back(event_from_json(json::parse(line)));
    } catch (const json::parse_error& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return script;
}

Workspace load_workspace(const std::filesystem::path& manifest_path) {
  json manifest = parse_file(manifest_path);
  std::filesystem::path dir = manifest_path.parent_path();
  auto resolve = [&](const char* field) {
    return dir / require(manifest, field, "workspace").get<std::string>();
  };
  Workspace ws;
  ws.types = std::make_unique<TypeGraph>(load_typegraph(resolve("typegraph")));
  ws.graph = graph_from_json(parse_file(resolve("graph")), *ws.types);
  ws.network_def = load_network_def(resolve("network"));
  ws.network = std::make_unique<Network>(build_network(ws.network_def, *ws.types));
  ws.script = load_script(resolve("script"));
  return ws;
}

void save_workspace_manifest(const std::filesystem::path& manifest_path) {
  write_file(manifest_path, json{{"typegraph", "typegraph.json"},
                                 {"graph", "graph.json"},
                                 {"network", "network.json"},
                                 {"script", "script.jsonl"}});
}

}  // namespace gatorview
