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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphlu/graph.hpp"

namespace graphlu {

struct LocalSetCaps {
  // Largest generator size tried when building a cover.
  std::size_t max_generator_size = 6;
  // Largest kernel dimension enumerated element by element.
  std::size_t max_kernel_dim = 16;
};

// A minimal local set with its generators in the graph it was built for.
// The dimension is the dimension of the generator kernel, so there are
// 2^dimension - 1 generators.
struct LocalSetRecord {
  VertexSet set;
  std::vector<VertexSet> generators;
  int dimension = 0;
};

struct MlsCover {
  std::vector<LocalSetRecord> sets;
  VertexSet covered() const;
  bool contains(const VertexSet& l) const;
};

enum class VertexType { X, Y, Z, Bottom };
char type_char(VertexType t);  // 'X', 'Y', 'Z', '_'

// Basis of {D ⊆ L : Odd(D) ⊆ L}. Every local set inside L is D ∪ Odd(D) for
// a nonzero element.
std::vector<VertexSet> local_set_kernel(const Graph& g, const VertexSet& l);

// All D with D ∪ Odd(D) = L.
std::vector<VertexSet> generators_of(const Graph& g, const VertexSet& l,
                                     const LocalSetCaps& caps = {});
bool is_local_set(const Graph& g, const VertexSet& l);
// Kernel dimension when L is a minimal local set, otherwise nothing.
std::optional<int> mls_dimension(const Graph& g, const VertexSet& l);
bool is_minimal_local_set(const Graph& g, const VertexSet& l);
bool mls_dimension_equal(const Graph& g1, const Graph& g2, const VertexSet& l);

// Throws ValidationError when L is not a minimal local set of g.
LocalSetRecord make_record(const Graph& g, const VertexSet& l, const LocalSetCaps& caps = {});

// Minimal local sets contained in L, sorted by lex_less.
std::vector<VertexSet> minimal_local_sets_within(const Graph& g, const VertexSet& l,
                                                 const LocalSetCaps& caps = {});

// Deterministic cover: for the lowest uncovered vertex, the lex-least minimal
// local set containing it among those reached from generators of the
// smallest size that reaches one.
MlsCover mls_cover(const Graph& g, const LocalSetCaps& caps = {});

// Types with respect to the cover, generators recomputed in g.
std::vector<VertexType> vertex_types(const Graph& g, const MlsCover& cover);
// Every set of the cover is a minimal local set of g, and the union is V.
bool is_cover_of(const Graph& g, const MlsCover& cover);

nlohmann::json cover_to_json(const MlsCover& cover);
std::string types_to_string(const std::vector<VertexType>& types);

}  // namespace graphlu
