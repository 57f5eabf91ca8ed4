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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graphlu/f2.hpp"
#include "graphlu/graph.hpp"
#include "graphlu/multiset.hpp"

namespace graphlu {

// Instances are built over k outside vertices 0..k-1. A word is a k-bit mask
// naming the neighbourhood of one S vertex; bit i is outside vertex i.
inline constexpr unsigned kMaxGkK = 6;

// Words of weight >= 4 in increasing numeric order. Bit i of an instance
// index selects the i-th of them.
std::vector<std::uint32_t> gk_high_words(unsigned k);
// Unordered pairs of outside vertices, lexicographic; the coordinates of the
// action vectors.
std::vector<Edge> gk_pairs(unsigned k);
std::string gk_word_string(std::uint32_t word, unsigned k);

struct GkInstance {
  unsigned k = 0;
  std::vector<std::uint32_t> chosen_high;
  std::vector<std::uint32_t> s_words;  // increasing
  // Outside vertices first, then one vertex per word of s_words.
  Graph graph;
  VertexSet s;
  std::vector<BitVec> actions;  // LC action of each S vertex, over gk_pairs
  BitVec x;                     // action of the 2-local complementation over S
};

GkInstance complete_from_high(unsigned k, const std::vector<std::uint32_t>& chosen_high);
GkInstance gk_instance(unsigned k, std::uint64_t index);

// 2^(C(k,4) + ... + C(k,k)). Throws ResourceError when it does not fit.
std::uint64_t count_gk(unsigned k);

bool implementable_by_lc(const GkInstance& inst);
std::size_t action_rank(const GkInstance& inst);

enum class GkClass { Identity = 0, LcImplementable = 1, Counterexample = 2 };
std::string to_string(GkClass c);
GkClass classify(const GkInstance& inst);

// Bit-parallel classification of one index, used by the scan.
struct GkFastResult {
  std::size_t support;
  GkClass cls;
};
class GkFastClassifier {
 public:
  explicit GkFastClassifier(unsigned k);
  GkFastResult operator()(std::uint64_t index) const;

 private:
  unsigned k_;
  std::vector<std::uint32_t> high_;
  std::vector<std::uint32_t> triples_, doubles_;
  std::array<std::uint32_t, 64> pair_mask_{};
  std::array<std::uint32_t, 64> triple_mask_{};
};

// Number of instances per |S|, by a Gray-code walk over the index space that
// tracks parities incrementally.
std::vector<std::uint64_t> gk_support_histogram(unsigned k);

struct GkCounterexample {
  std::uint64_t index = 0;
  std::string graph6;
  std::size_t support = 0;
  std::size_t order = 0;
  std::vector<std::string> words;
  std::string x;
  std::size_t span_rank = 0;
};

struct GkScanOptions {
  unsigned k = 5;
  std::optional<std::size_t> max_support;
  unsigned jobs = 1;
  std::string checkpoint;  // empty: no checkpointing
  std::uint64_t chunk = std::uint64_t{1} << 15;
  std::size_t max_dump = 32;
  // Stop after this many indices (for tests of the resume path).
  std::optional<std::uint64_t> stop_after;
};

struct GkReport {
  unsigned k = 0;
  std::optional<std::size_t> max_support;
  std::uint64_t total_indices = 0;
  std::uint64_t next_index = 0;  // == total_indices when complete
  std::uint64_t visited = 0;     // instances passing the support filter
  std::array<std::uint64_t, 3> counts{};  // by GkClass
  // support -> counts by class
  std::map<std::size_t, std::array<std::uint64_t, 3>> by_support;
  std::vector<GkCounterexample> counterexamples;  // first max_dump, by index
  double seconds = 0;
  bool resumed = false;

  bool complete() const { return next_index == total_indices; }
};

GkReport scan_gk(const GkScanOptions& options);
nlohmann::json report_to_json(const GkReport& r);
GkReport report_from_json(const nlohmann::json& j);
GkCounterexample make_counterexample(const GkInstance& inst, std::uint64_t index);
// Base-case certificate: every visited instance is the identity.
nlohmann::json gk_certificate(const GkReport& r);

// Toggle vector of ⋆²S lies in the span of the single-vertex LC actions over
// supp(S), evaluated directly on g.
bool rlc_implementable_by_lc(const Graph& g, const VertexMultiset& s);

// Reduction of a 2-incident independent multiset to a set S' on g with the
// edges outside S' removed: keep the odd part, drop S-vertices of degree at
// most one, cancel twins in pairs. Vertex ids are unchanged.
std::pair<Graph, VertexSet> lift_reduce(const Graph& g, const VertexMultiset& s);

}  // namespace graphlu
