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

#include "gatorview/condition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gatorview {

ConditionAST ConditionAST::atomic(Pattern p) {
  ConditionAST ast;
  ast.kind = Kind::Atomic;
  ast.pattern = std::move(p);
  return ast;
}

ConditionAST ConditionAST::conj(Pattern glue,
                                std::vector<std::pair<std::string, ConditionAST>> children) {
  ConditionAST ast;
  ast.kind = Kind::And;
  ast.glue = std::move(glue);
  ast.children = std::move(children);
  return ast;
}

ConditionAST ConditionAST::disj(std::vector<ConditionAST> alts, std::string supertype) {
  ConditionAST ast;
  ast.kind = Kind::Or;
  ast.alts = std::move(alts);
  ast.common_supertype = std::move(supertype);
  return ast;
}

ConditionAST ConditionAST::neg(ConditionAST child) {
  ConditionAST ast;
  ast.kind = Kind::Not;
  ast.inner.push_back(std::move(child));
  return ast;
}

namespace {

struct Lowering {
  const TypeGraph& types;
  NetworkDef def;

  void add_pattern(const Pattern& p) {
    for (const auto& existing : def.patterns) {
      if (existing.name != p.name) continue;
      if (existing == p) return;
      throw ValidationError("two distinct patterns named " + p.name + " during lowering");
    }
    def.patterns.push_back(p);
  }

  std::string add_module(const Pattern& p) {
    add_pattern(p);
    for (const auto& m : def.modules)
      if (m.name == p.name) return m.name;
    ModuleDef md;
    md.name = p.name;
    md.pattern = p.name;
    for (const auto& v : p.input_bound_vars()) {
      const PatternNode* pn = p.find_node(v);
      md.inputs.push_back(ModuleDef::InputDef{v, pn->required_type, v});
    }
    def.modules.push_back(std::move(md));
    return p.name;
  }

  bool pattern_has_negation(const Pattern& p) const {
    for (const auto& n : p.nodes)
      if (n.negated) return true;
    for (const auto& e : p.edges)
      if (e.negated) return true;
    return false;
  }

  /// The inlined form of a negated atomic is a simple NAC iff every inner
  /// var that is not identified with a glue var sits directly next to an
  /// attached (hence positive) var.
  bool inline_is_simple(const Pattern& glue, const std::string& placeholder,
                        const Pattern& inner,
                        std::map<std::string, std::string>* attachment) const {
    if (pattern_has_negation(inner)) return false;
    for (const auto& e : glue.edges) {
      if (e.source_var != placeholder && e.target_var != placeholder) continue;
      if (e.source_var != placeholder)
        throw ValidationError("negated placeholder " + placeholder +
                              " must own its attachment edges");
      // The edge type names a role of the child's marking.
      const RoleSpec* role = nullptr;
      for (const auto& r : inner.marking.role_edges)
        if (r.edge_type == e.edge_type) role = &r;
      if (!role)
        throw ValidationError("edge " + e.edge_type + " on negated placeholder " + placeholder +
                              " is not a role of the negated condition");
      attachment->emplace(role->var, e.target_var);
    }
    for (const auto& v : inner.positive_vars()) {
      if (attachment->count(v)) continue;
      bool adjacent = false;
      for (const auto& e : inner.edges) {
        if (e.source_var == v && attachment->count(e.target_var)) adjacent = true;
        if (e.target_var == v && attachment->count(e.source_var)) adjacent = true;
      }
      if (!adjacent) return false;
    }
    return true;
  }

  void embed_inline(Pattern* glue, const std::string& placeholder, const Pattern& inner,
                    const std::map<std::string, std::string>& attachment) {
    glue->nodes.erase(std::remove_if(glue->nodes.begin(), glue->nodes.end(),
                                     [&](const PatternNode& n) { return n.var == placeholder; }),
                      glue->nodes.end());
    glue->edges.erase(std::remove_if(glue->edges.begin(), glue->edges.end(),
                                     [&](const PatternEdge& e) {
                                       return e.source_var == placeholder ||
                                              e.target_var == placeholder;
                                     }),
                      glue->edges.end());
    auto mapped = [&](const std::string& v) {
      auto it = attachment.find(v);
      return it != attachment.end() ? it->second : placeholder + "_" + v;
    };
    for (const auto& n : inner.nodes) {
      if (attachment.count(n.var)) continue;
      PatternNode copy = n;
      copy.var = mapped(n.var);
      copy.negated = true;
      copy.binding = Binding::Free;
      glue->nodes.push_back(std::move(copy));
    }
    for (const auto& e : inner.edges) {
      PatternEdge copy = e;
      copy.source_var = mapped(e.source_var);
      copy.target_var = mapped(e.target_var);
      copy.negated = true;
      glue->edges.push_back(std::move(copy));
    }
  }

  std::pair<std::vector<std::string>, std::string> lower(const ConditionAST& ast) {
    switch (ast.kind) {
      case ConditionAST::Kind::Atomic: {
        ast.pattern.validate(types);
        for (const auto& n : ast.pattern.nodes)
          if (!n.negated && types.node_layer(n.required_type) != NodeLayer::Base)
            throw ValidationError("atomic condition " + ast.pattern.name +
                                  " must only receive nodes of base graphs (var " + n.var + ")");
        return {{add_module(ast.pattern)}, ast.pattern.marking.marker_type};
      }
      case ConditionAST::Kind::Or: {
        if (ast.alts.empty()) throw ValidationError("empty disjunction");
        if (!types.has_node_type(ast.common_supertype) ||
            types.node_layer(ast.common_supertype) != NodeLayer::View)
          throw ValidationError("disjunction needs a declared common view supertype; '" +
                                ast.common_supertype + "' is not one");
        std::vector<std::string> producers;
        for (const auto& alt : ast.alts) {
          auto [mods, type] = lower(alt);
          if (!types.conforms(type, ast.common_supertype))
            throw ValidationError("disjunction child type " + type + " does not conform to " +
                                  ast.common_supertype);
          producers.insert(producers.end(), mods.begin(), mods.end());
        }
        return {producers, ast.common_supertype};
      }
      case ConditionAST::Kind::And: {
        Pattern glue = ast.glue;
        for (const auto& [var, child] : ast.children) {
          const PatternNode* placeholder = glue.find_node(var);
          if (!placeholder)
            throw ValidationError("conjunction child bound to unknown glue var " + var);
          if (child.kind == ConditionAST::Kind::Not) {
            if (!placeholder->negated)
              throw ValidationError("negated condition bound to positive glue var " + var);
            const ConditionAST& sub = child.inner.front();
            if (sub.kind == ConditionAST::Kind::Atomic) {
              std::map<std::string, std::string> attachment;
              if (inline_is_simple(glue, var, sub.pattern, &attachment)) {
                embed_inline(&glue, var, sub.pattern, attachment);
                continue;  // simple NAC: no producer module
              }
            }
            // Complex NAC: positive matcher plus a negated marker node in
            // the consumer. The negative dependency wire is derived by
            // build_network.
            auto [mods, type] = lower(sub);
            if (!types.conforms(type, placeholder->required_type) &&
                !types.conforms(placeholder->required_type, type))
              throw ValidationError("negated placeholder " + var + " of type " +
                                    placeholder->required_type + " never matches markers of " +
                                    type);
          } else {
            if (placeholder->negated)
              throw ValidationError("positive condition bound to negated glue var " + var);
            if (placeholder->binding != Binding::InputBound)
              throw ValidationError("conjunct placeholder " + var + " must be input-bound");
            auto [mods, type] = lower(child);
            for (const auto& producer : mods) {
              const Pattern* produced = nullptr;
              for (const auto& m : def.modules)
                if (m.name == producer)
                  for (const auto& p : def.patterns)
                    if (p.name == m.pattern) produced = &p;
              if (!produced)
                throw ValidationError("lowering lost track of producer " + producer);
              if (!types.conforms(produced->marking.marker_type, placeholder->required_type))
                throw ValidationError("producer " + producer + " markers do not conform to glue var " +
                                      var);
              def.wires.push_back(WireDef{producer, glue.name, var});
            }
          }
        }
        glue.validate(types);
        std::string consumer = add_module(glue);
        return {{consumer}, glue.marking.marker_type};
      }
      case ConditionAST::Kind::Not:
        throw ValidationError(
            "negation is only valid attached to a conjunction's context (Fig. 4d/4e shapes)");
    }
    throw ValidationError("unreachable");
  }
};

}  // namespace

LoweredNetwork lower_condition(const ConditionAST& ast, const TypeGraph& types) {
  Lowering lowering{types};
  auto [modules, type] = lowering.lower(ast);
  LoweredNetwork out;
  out.def = std::move(lowering.def);
  out.output_modules = std::move(modules);
  out.output_type = std::move(type);
  return out;
}

}  // namespace gatorview
