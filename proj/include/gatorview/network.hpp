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
#include <set>
#include <string>
#include <vector>

#include "gatorview/view_module.hpp"

namespace gatorview {

/// Serializable module description: pattern by name plus input connectors.
struct ModuleDef {
  struct InputDef {
    std::string name;
    std::string type;
    std::string binds;

    bool operator==(const InputDef&) const = default;
  };
  std::string name;
  std::string pattern;
  std::vector<InputDef> inputs;

  bool operator==(const ModuleDef&) const = default;
};

struct WireDef {
  std::string from;
  std::string to;
  std::string input;

  bool operator==(const WireDef&) const = default;
};

struct NetworkDef {
  std::vector<Pattern> patterns;
  std::vector<ModuleDef> modules;
  std::vector<WireDef> wires;
  std::vector<std::vector<std::string>> cycles;
};

/// Resolved wire. Negative wires are derived from negated view-layer pattern
/// nodes (complex NACs): they order execution and drive the suspicious
/// reachability test, but feed no input connector.
struct Wire {
  std::string producer;
  std::string consumer;
  std::string input;  // empty on negative wires
  bool negative = false;

  bool operator==(const Wire&) const = default;
};

/// Validated generalized discrimination network: a module DAG except for
/// declared recursion cycles.
class Network {
 public:
  const std::map<std::string, ViewModule>& modules() const { return modules_; }
  const ViewModule& module(const std::string& name) const;
  const std::vector<Wire>& wires() const { return wires_; }
  const std::vector<std::vector<std::string>>& recursion_cycles() const { return cycles_; }

  std::vector<const Wire*> wires_into(const std::string& consumer) const;
  std::vector<const Wire*> wires_out_of(const std::string& producer) const;

  /// Modules depending on `producer` through a negative wire (complex NACs).
  std::vector<const ViewModule*> nac_dependents(const std::string& producer) const;

  /// Marker types of the original user-defined modules. Equals all marker
  /// types unless this network came out of Rete emulation.
  std::set<std::string> top_level_types() const;
  const std::set<std::string>& intermediate_types() const { return intermediate_types_; }

  std::map<std::string, const ViewModule*> module_ptrs() const;

  friend Network build_network(const NetworkDef& def, const TypeGraph& types);
  friend Network emulate_rete(const Network& network, TypeGraph& types);

 private:
  std::map<std::string, ViewModule> modules_;
  std::vector<Wire> wires_;
  std::vector<std::vector<std::string>> cycles_;
  std::set<std::string> intermediate_types_;
};

/// Builds and validates a network: resolves patterns, checks connector and
/// wire type compatibility, derives negative wires, and rejects undeclared
/// cycles.
Network build_network(const NetworkDef& def, const TypeGraph& types);

}  // namespace gatorview
