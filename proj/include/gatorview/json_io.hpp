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

#include <filesystem>
#include <memory>
#include <string>

#include <json.hpp>

#include "gatorview/maintenance.hpp"
#include "gatorview/network.hpp"

namespace gatorview {

// Field names of all formats are documented in docs/formats.md and frozen by
// round-trip tests.

nlohmann::json typegraph_to_json(const TypeGraph& types);
TypeGraph typegraph_from_json(const nlohmann::json& j);

/// Snapshot object: `typegraph` (embedded), `nodes` (id, type, attrs),
/// `edges` (id, type, src, dst, layer), plus id counters.
nlohmann::json graph_to_json(const Graph& graph);

/// A snapshot is self-contained: it owns the type graph its graph points to.
struct Snapshot {
  std::unique_ptr<TypeGraph> types;
  std::unique_ptr<Graph> graph;
};
Snapshot graph_from_json(const nlohmann::json& j);
/// Loads the graph against an external type graph; the embedded one must be
/// structurally identical.
std::unique_ptr<Graph> graph_from_json(const nlohmann::json& j, const TypeGraph& types);

nlohmann::json event_to_json(const ChangeEvent& ev);
ChangeEvent event_from_json(const nlohmann::json& j);

nlohmann::json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const nlohmann::json& j);

nlohmann::json network_def_to_json(const NetworkDef& def);
NetworkDef network_def_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MaintenanceReport& report);

// File-level helpers. Change scripts are JSON-lines, one event per line.
void save_typegraph(const TypeGraph& types, const std::filesystem::path& path);
TypeGraph load_typegraph(const std::filesystem::path& path);
void save_snapshot(const Graph& graph, const std::filesystem::path& path);
Snapshot load_snapshot(const std::filesystem::path& path);
void save_network_def(const NetworkDef& def, const std::filesystem::path& path);
NetworkDef load_network_def(const std::filesystem::path& path);
void save_script(const std::vector<ChangeEvent>& script, const std::filesystem::path& path);
std::vector<ChangeEvent> load_script(const std::filesystem::path& path);

/// A workspace manifest names the four input files (paths relative to the
/// manifest): {"typegraph": ..., "graph": ..., "network": ..., "script": ...}.
struct Workspace {
  std::unique_ptr<TypeGraph> types;
  std::unique_ptr<Graph> graph;
  NetworkDef network_def;
  std::unique_ptr<Network> network;
  std::vector<ChangeEvent> script;
};

Workspace load_workspace(const std::filesystem::path& manifest_path);
void save_workspace_manifest(const std::filesystem::path& manifest_path);

}  // namespace gatorview
