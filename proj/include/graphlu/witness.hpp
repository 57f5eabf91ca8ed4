// Copyright 2026 The graphlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "graphlu/graph.hpp"
#include "graphlu/multiset.hpp"

namespace graphlu {

struct LcOp {
  Vertex v;
  friend bool operator==(const LcOp&, const LcOp&) = default;
};
struct PivotOp {
  Vertex u;
  Vertex v;
  friend bool operator==(const PivotOp&, const PivotOp&) = default;
};
struct RlcOp {
  VertexMultiset s;
  friend bool operator==(const RlcOp&, const RlcOp&) = default;
};
using LocalOp = std::variant<LcOp, PivotOp, RlcOp>;

// Operations taking `source` to `target`; both are stored as graph6 digests.
struct Witness {
  std::string source;
  std::string target;
  std::vector<LocalOp> ops;
};

// Applies one op with full validation (pivot adjacency, r-incidence).
void apply_op_in_place(Graph& g, const LocalOp& op);
Graph apply_ops(const Graph& g, const std::vector<LocalOp>& ops);

// Pivots rewritten as three local complementations.
std::vector<LocalOp> expand_pivots(const std::vector<LocalOp>& ops);
std::size_t count_rlc(const std::vector<LocalOp>& ops);

std::string op_to_string(const LocalOp& op);

nlohmann::json op_to_json(const LocalOp& op);
LocalOp op_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace graphlu
