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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace gatorview {

/// Engine-assigned, monotonically increasing identifiers. Opaque to callers;
/// stable across snapshot round-trips and change-log replay.
using NodeId = std::uint64_t;
using EdgeId = std::uint64_t;

enum class NodeLayer { Base, View };

/// Base edges live between base nodes; view-role edges and scopes are owned
/// by view nodes and mark the nodes of a graph pattern match.
enum class EdgeLayer { Base, ViewRole, Scope };

enum class AttrKind { String, Integer, Boolean };

using AttrValue = std::variant<std::string, std::int64_t, bool>;

AttrKind kind_of(const AttrValue& value);
std::string attr_to_string(const AttrValue& value);
std::string to_string(NodeLayer layer);
std::string to_string(EdgeLayer layer);
std::string to_string(AttrKind kind);

/// Base class for all engine errors. Subclasses map onto distinct CLI exit
/// codes (see tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files (JSON syntax, missing fields, bad enum values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Semantic violations: unknown types, endpoint mismatches, invalid
/// patterns/networks, contract violations of the operations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The maintenance loop or a recursion cycle exceeded its iteration budget.
class LoopLimitError : public Error {
 public:
  using Error::Error;
};

/// Benchmark cells disagreed on top-level markers.
class MarkerMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace gatorview
