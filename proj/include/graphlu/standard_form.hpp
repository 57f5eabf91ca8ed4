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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "graphlu/graph.hpp"
#include "graphlu/local_sets.hpp"
#include "graphlu/witness.hpp"

namespace graphlu {

struct StandardFormOptions {
  LocalSetCaps caps;
  // Add minimal local sets inside large Z populations, then restart.
  bool reduce_z_population = false;
  // Check every transition against the type-update tables.
  bool check_type_tables = false;
};

struct StandardFormStep {
  int step;   // 2..6
  int graph;  // 0 or 1
  LocalOp op;
  // 2|Y1| + |X1| + 2|Y2| + |X2| before and after the operation.
  std::size_t measure_before;
  std::size_t measure;
};

struct StandardFormResult {
  Graph g1, g2;
  MlsCover cover;
  std::vector<VertexType> types1, types2;
  Witness w1, w2;  // input -> standardized graph
  std::vector<StandardFormStep> trace;
  // Sets added at step 7, in order.
  std::vector<VertexSet> step7_choices;
  // Sets added by the Z-population pass.
  std::vector<VertexSet> z_pass_choices;
};

struct NotEquivalent {
  std::string stage;
  std::string reason;
};

using StandardFormOutcome = std::variant<StandardFormResult, NotEquivalent>;

StandardFormOutcome standardize_pair(const Graph& g1, const Graph& g2, const StandardFormOptions& options = {});

// Same types in both graphs and equal neighbourhoods at X vertices.
bool check_same_types_and_x_neighbourhoods(const StandardFormResult& result);

// No Y vertices; X neighbours are Z and larger; closed X neighbourhoods are in
// the cover.
bool is_standard_form(const Graph& g, const MlsCover& cover, const std::vector<VertexType>& types);

// 2|Y| + |X| for one graph.
std::size_t type_measure(const std::vector<VertexType>& types);

}  // namespace graphlu
