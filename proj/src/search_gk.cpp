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

#include "graphlu/search_gk.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "graphlu/errors.hpp"
#include "graphlu/graph6.hpp"

namespace graphlu {

namespace {

void check_k(unsigned k) {
  if (k < 1) throw ValidationError("k must be at least 1");
  if (k > kMaxGkK) {
    throw ResourceError("k=" + std::to_string(k) + " is out of reach: the class has 2^" +
                        std::to_string((1u << k) - 1 - k - k * (k - 1) / 2 - k * (k - 1) * (k - 2) / 6) +
                        " members");
  }
}

std::vector<std::uint32_t> words_of_weight(unsigned k, int weight) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < (1u << k); ++w) {
    if (std::popcount(w) == weight) out.push_back(w);
  }
  return out;
}

std::size_t pair_slot(unsigned k, unsigned i, unsigned j) {
  // Row-major over i < j.
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

// Adds a mask to 2-bit per-coordinate counters.
inline void add_mod4(std::uint32_t& lo, std::uint32_t& hi, std::uint32_t m) {
  hi ^= lo & m;
  lo ^= m;
}

bool in_xor_span(const std::vector<std::uint32_t>& vectors, std::uint32_t x) {
  std::array<std::uint32_t, 32> basis{};
  for (std::uint32_t v : vectors) {
    while (v) {
      const int top = 31 - std::countl_zero(v);
      if (!basis[top]) {
        basis[top] = v;
        break;
      }
      v ^= basis[top];
    }
  }
  while (x) {
    const int top = 31 - std::countl_zero(x);
    if (!basis[top]) return false;
    x ^= basis[top];
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> gk_high_words(unsigned k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < (1u << k); ++w) {
    if (std::popcount(w) >= 4) out.push_back(w);
  }
  return out;
}

std::vector<Edge> gk_pairs(unsigned k) {
  std::vector<Edge> out;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::string gk_word_string(std::uint32_t word, unsigned k) {
  std::string s(k, '0');
  for (unsigned i = 0; i < k; ++i) {
    if ((word >> i) & 1u) s[i] = '1';
  }
  return s;
}

GkInstance complete_from_high(unsigned k, const std::vector<std::uint32_t>& chosen_high) {
  check_k(k);
  std::vector<std::uint32_t> words;
  for (std::uint32_t w : chosen_high) {
    if (w >= (1u << k) || std::popcount(w) < 4) {
      throw ValidationError("chosen word " + gk_word_string(w, k) + " does not have weight >= 4");
    }
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
    throw ValidationError("chosen words repeat");
  }
  auto superset_count = [&](std::uint32_t t) {
    return std::count_if(words.begin(), words.end(), [&](std::uint32_t w) { return (w & t) == t; });
  };
  for (int weight : {3, 2}) {
    std::vector<std::uint32_t> added;
    for (std::uint32_t t : words_of_weight(k, weight)) {
      if (superset_count(t) % 2 == 1) added.push_back(t);
    }
    words.insert(words.end(), added.begin(), added.end());
  }
  std::sort(words.begin(), words.end());

  GkInstance inst;
  inst.k = k;
  inst.chosen_high = chosen_high;
  std::sort(inst.chosen_high.begin(), inst.chosen_high.end());
  inst.s_words = words;
  const std::size_t n = k + words.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Vertex sv = static_cast<Vertex>(k + i);
    inst.s.insert(sv);
    for (Vertex b = 0; b < k; ++b) {
      if ((words[i] >> b) & 1u) edges.emplace_back(b, sv);
    }
  }
  inst.graph = Graph::from_edges(n, edges);

  const std::vector<Edge> pairs = gk_pairs(k);
  for (std::uint32_t w : words) {
    BitVec a(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (((w >> pairs[p].first) & 1u) && ((w >> pairs[p].second) & 1u)) a.set(p);
    }
    inst.actions.push_back(std::move(a));
  }
  const VertexMultiset sm = VertexMultiset::from_set(inst.s, 2);
  if (!is_r_incident(inst.graph, sm)) throw InternalError("completed G_k instance is not 2-incident");
  inst.x = BitVec(pairs.size());
  for (auto [u, v] : rlc_toggles(inst.graph, sm)) {
    if (u >= k || v >= k) throw InternalError("2-local complementation toggled an edge at S");
    inst.x.set(pair_slot(k, u, v));
  }
  return inst;
}

GkInstance gk_instance(unsigned k, std::uint64_t index) {
  check_k(k);
  const std::vector<std::uint32_t> high = gk_high_words(k);
  if (high.size() < 64 && index >> high.size()) throw ValidationError("instance index out of range");
  std::vector<std::uint32_t> chosen;
  for (std::size_t i = 0; i < high.size(); ++i) {
    if ((index >> i) & 1u) chosen.push_back(high[i]);
  }
  return complete_from_high(k, chosen);
}

std::uint64_t count_gk(unsigned k) {
  if (k < 1) throw ValidationError("k must be at least 1");
  std::uint64_t exponent = 0;
  std::uint64_t binom = 1;  // C(k, j)
  for (unsigned j = 1; j <= k; ++j) {
    binom = binom * (k - j + 1) / j;
    if (j >= 4) exponent += binom;
  }
  if (exponent >= 64) throw ResourceError("|G_k| = 2^" + std::to_string(exponent) + " does not fit in 64 bits");
  return std::uint64_t{1} << exponent;
}

std::size_t action_rank(const GkInstance& inst) { return f2_rank(inst.actions); }

bool implementable_by_lc(const GkInstance& inst) {
  if (inst.x.is_zero()) return true;
  F2Echelon e(inst.x.size());
  for (const BitVec& a : inst.actions) e.insert(a);
  return e.in_span(inst.x);
}

std::string to_string(GkClass c) {
  switch (c) {
    case GkClass::Identity:
      return "identity";
    case GkClass::LcImplementable:
      return "lc_implementable";
    case GkClass::Counterexample:
      return "counterexample";
  }
  return "?";
}

GkClass classify(const GkInstance& inst) {
  if (inst.x.is_zero()) return GkClass::Identity;
  return implementable_by_lc(inst) ? GkClass::LcImplementable : GkClass::Counterexample;
}

GkFastClassifier::GkFastClassifier(unsigned k) : k_(k) {
  check_k(k);
  high_ = gk_high_words(k);
  triples_ = words_of_weight(k, 3);
  doubles_ = words_of_weight(k, 2);
  for (std::uint32_t w = 0; w < (1u << k); ++w) {
    for (Vertex i = 0; i < k; ++i) {
      for (Vertex j = i + 1; j < k; ++j) {
        if (((w >> i) & 1u) && ((w >> j) & 1u)) pair_mask_[w] |= 1u << pair_slot(k, i, j);
      }
    }
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      if ((w & triples_[t]) == triples_[t]) triple_mask_[w] |= 1u << t;
    }
  }
}

GkFastResult GkFastClassifier::operator()(std::uint64_t index) const {
  std::uint32_t lo = 0, hi = 0, tri = 0;
  std::vector<std::uint32_t> actions;
  actions.reserve(64);
  for (std::uint64_t bits = index; bits; bits &= bits - 1) {
    const std::uint32_t w = high_[static_cast<std::size_t>(std::countr_zero(bits))];
    add_mod4(lo, hi, pair_mask_[w]);
    tri ^= triple_mask_[w];
    actions.push_back(pair_mask_[w]);
  }
  for (std::uint32_t bits = tri; bits; bits &= bits - 1) {
    const std::uint32_t t = triples_[static_cast<std::size_t>(std::countr_zero(bits))];
    add_mod4(lo, hi, pair_mask_[t]);
    actions.push_back(pair_mask_[t]);
  }
  // Weight-2 words complete the odd pair counts; each adds one.
  for (std::uint32_t bits = lo; bits; bits &= bits - 1) actions.push_back(bits & (~bits + 1));
  hi ^= lo;
  GkFastResult out{actions.size(), GkClass::Identity};
  if (hi != 0) {
    // Weight-2 completions are unit vectors, so only the other coordinates
    // of x need to be matched by the rest of the span.
    out.cls = in_xor_span(actions, hi) ? GkClass::LcImplementable : GkClass::Counterexample;
  }
  return out;
}

std::vector<std::uint64_t> gk_support_histogram(unsigned k) {
  check_k(k);
  const std::vector<std::uint32_t> high = gk_high_words(k);
  const std::vector<std::uint32_t> triples = words_of_weight(k, 3);
  auto pairs_in = [&](std::uint32_t w) {
    std::uint32_t m = 0;
    for (Vertex i = 0; i < k; ++i) {
      for (Vertex j = i + 1; j < k; ++j) {
        if (((w >> i) & 1u) && ((w >> j) & 1u)) m |= 1u << pair_slot(k, i, j);
      }
    }
    return m;
  };
  std::vector<std::uint32_t> dt(high.size()), dp(high.size());
  for (std::size_t i = 0; i < high.size(); ++i) {
    dp[i] = pairs_in(high[i]);
    for (std::size_t t = 0; t < triples.size(); ++t) {
      if ((high[i] & triples[t]) == triples[t]) {
        dt[i] |= 1u << t;
        dp[i] ^= pairs_in(triples[t]);
      }
    }
  }
  std::vector<std::uint64_t> hist(high.size() + triples.size() + k * (k - 1) / 2 + 1, 0);
  std::uint64_t g = 0;
  std::uint32_t t = 0, p = 0;
  const std::uint64_t total = std::uint64_t{1} << high.size();
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(i));
      g ^= std::uint64_t{1} << b;
      t ^= dt[b];
      p ^= dp[b];
    }
    ++hist[static_cast<std::size_t>(std::popcount(g) + std::popcount(t) + std::popcount(p))];
  }
  return hist;
}

GkCounterexample make_counterexample(const GkInstance& inst, std::uint64_t index) {
  GkCounterexample c;
  c.index = index;
  c.graph6 = to_graph6(inst.graph);
  c.support = inst.s_words.size();
  c.order = inst.graph.order();
  for (std::uint32_t w : inst.s_words) c.words.push_back(gk_word_string(w, inst.k));
  c.x = inst.x.to_string();
  c.span_rank = action_rank(inst);
  return c;
}

nlohmann::json report_to_json(const GkReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["max_support"] = r.max_support ? nlohmann::json(*r.max_support) : nlohmann::json(nullptr);
  j["total_indices"] = r.total_indices;
  j["next_index"] = r.next_index;
  j["complete"] = r.complete();
  j["visited"] = r.visited;
  j["counts"] = {{"identity", r.counts[0]}, {"lc_implementable", r.counts[1]}, {"counterexample", r.counts[2]}};
  nlohmann::json by = nlohmann::json::object();
  for (const auto& [s, c] : r.by_support) by[std::to_string(s)] = {c[0], c[1], c[2]};
  j["by_support"] = by;
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& c : r.counterexamples) {
    ce.push_back({{"index", c.index},
                  {"graph6", c.graph6},
                  {"support", c.support},
                  {"order", c.order},
                  {"words", c.words},
                  {"x", c.x},
                  {"span_rank", c.span_rank}});
  }
  j["counterexamples"] = ce;
  j["runtime_seconds"] = r.seconds;
  j["resumed"] = r.resumed;
  return j;
}

GkReport report_from_json(const nlohmann::json& j) {
  try {
    GkReport r;
    r.k = j.at("k").get<unsigned>();
    if (!j.at("max_support").is_null()) r.max_support = j.at("max_support").get<std::size_t>();
    r.total_indices = j.at("total_indices").get<std::uint64_t>();
    r.next_index = j.at("next_index").get<std::uint64_t>();
    r.visited = j.at("visited").get<std::uint64_t>();
    const auto& counts = j.at("counts");
    r.counts = {counts.at("identity").get<std::uint64_t>(), counts.at("lc_implementable").get<std::uint64_t>(),
                counts.at("counterexample").get<std::uint64_t>()};
    for (const auto& [key, v] : j.at("by_support").items()) {
      r.by_support[std::stoul(key)] = {v.at(0).get<std::uint64_t>(), v.at(1).get<std::uint64_t>(),
                                       v.at(2).get<std::uint64_t>()};
    }
    for (const auto& c : j.at("counterexamples")) {
      GkCounterexample x;
      x.index = c.at("index").get<std::uint64_t>();
      x.graph6 = c.at("graph6").get<std::string>();
      x.support = c.at("support").get<std::size_t>();
      x.order = c.at("order").get<std::size_t>();
      x.words = c.at("words").get<std::vector<std::string>>();
      x.x = c.at("x").get<std::string>();
      x.span_rank = c.at("span_rank").get<std::size_t>();
      r.counterexamples.push_back(std::move(x));
    }
    r.seconds = j.value("runtime_seconds", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed search report: ") + e.what());
  }
}

namespace {

struct ChunkResult {
  std::uint64_t visited = 0;
  std::array<std::uint64_t, 3> counts{};
  std::map<std::size_t, std::array<std::uint64_t, 3>> by_support;
  std::vector<std::uint64_t> counterexamples;
};

void write_checkpoint(const std::string& path, const GkReport& r) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceError("cannot write checkpoint " + tmp);
    out << report_to_json(r).dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

GkReport scan_gk(const GkScanOptions& options) {
  check_k(options.k);
  if (options.jobs < 1) throw ValidationError("jobs must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  GkReport report;
  report.k = options.k;
  report.max_support = options.max_support;
  report.total_indices = count_gk(options.k);

  if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
    std::ifstream in(options.checkpoint);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("unreadable checkpoint " + options.checkpoint + ": " + e.what());
    }
    GkReport saved = report_from_json(j);
    if (saved.k != report.k || saved.max_support != report.max_support) {
      throw ValidationError("checkpoint " + options.checkpoint + " was written for different parameters");
    }
    report = std::move(saved);
    report.resumed = true;
  }
  const double prior_seconds = report.seconds;

  const GkFastClassifier classify_fast(options.k);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk);
  std::uint64_t end = report.total_indices;
  if (options.stop_after) end = std::min(end, report.next_index + *options.stop_after);

  while (report.next_index < end) {
    const std::uint64_t round_begin = report.next_index;
    const std::uint64_t round_end = std::min(end, round_begin + chunk * options.jobs);
    const std::size_t n_chunks = static_cast<std::size_t>((round_end - round_begin + chunk - 1) / chunk);
    std::vector<ChunkResult> results(n_chunks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t c = next++; c < n_chunks; c = next++) {
        ChunkResult& res = results[c];
        const std::uint64_t lo = round_begin + c * chunk;
        const std::uint64_t hi = std::min(round_end, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const GkFastResult f = classify_fast(i);
          if (options.max_support && f.support > *options.max_support) continue;
          ++res.visited;
          ++res.counts[static_cast<std::size_t>(f.cls)];
          ++res.by_support[f.support][static_cast<std::size_t>(f.cls)];
          if (f.cls == GkClass::Counterexample && res.counterexamples.size() < options.max_dump) {
            res.counterexamples.push_back(i);
          }
        }
      }
    };
    std::vector<std::thread> threads;
    const unsigned n_threads = std::min<unsigned>(options.jobs, static_cast<unsigned>(n_chunks));
    for (unsigned t = 1; t < n_threads; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    for (const ChunkResult& res : results) {
      report.visited += res.visited;
      for (std::size_t c = 0; c < 3; ++c) report.counts[c] += res.counts[c];
      for (const auto& [s, c] : res.by_support) {
        for (std::size_t i = 0; i < 3; ++i) report.by_support[s][i] += c[i];
      }
      for (std::uint64_t idx : res.counterexamples) {
        if (report.counterexamples.size() >= options.max_dump) break;
        const GkInstance inst = gk_instance(options.k, idx);
        if (classify(inst) != GkClass::Counterexample) {
          throw InternalError("fast and direct classification disagree at index " + std::to_string(idx));
        }
        report.counterexamples.push_back(make_counterexample(inst, idx));
      }
    }
    report.next_index = round_end;
    report.seconds = prior_seconds +
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!options.checkpoint.empty()) write_checkpoint(options.checkpoint, report);
  }
  report.seconds = prior_seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json gk_certificate(const GkReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["max_support"] = r.max_support ? nlohmann::json(*r.max_support) : nlohmann::json(nullptr);
  j["complete"] = r.complete();
  j["instances"] = r.visited;
  j["identity"] = r.counts[0];
  j["all_identity"] = r.complete() && r.counts[0] == r.visited;
  return j;
}

bool rlc_implementable_by_lc(const Graph& g, const VertexMultiset& s) {
  if (s.level() != 2) throw ValidationError("expected a level-2 multiset");
  if (!is_independent(g, s) || !is_r_incident(g, s)) {
    throw ValidationError("multiset is not a 2-incident independent multiset");
  }
  const std::size_t n = g.order();
  auto slot = [n](Vertex u, Vertex v) { return static_cast<std::size_t>(u) * n + v; };
  BitVec x(n * n);
  for (auto [u, v] : rlc_toggles(g, s)) x.set(slot(u, v));
  if (x.is_zero()) return true;
  F2Echelon e(n * n);
  s.support().for_each([&](Vertex w) {
    BitVec a(n * n);
    const std::vector<Vertex> nb = g.neighbors(w).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) a.set(slot(nb[i], nb[j]));
    }
    e.insert(a);
  });
  return e.in_span(x);
}

std::pair<Graph, VertexSet> lift_reduce(const Graph& g, const VertexMultiset& s) {
  if (s.level() != 2) throw ValidationError("expected a level-2 multiset");
  if (!is_independent(g, s) || !is_r_incident(g, s)) {
    throw ValidationError("multiset is not a 2-incident independent multiset");
  }
  // The even part acts as a 1-local complementation over a set, which is a
  // product of local complementations on the support.
  VertexSet kept = decompose_2lc(g, s).s2;
  for (Vertex v : kept.to_vector()) {
    if (g.degree(v) <= 1) kept.erase(v);
  }
  // Twins u, v contribute ⋆²{u,u} = ⋆u.
  std::vector<Vertex> members = kept.to_vector();
  VertexSet cancelled;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (cancelled.contains(members[i])) continue;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (cancelled.contains(members[j])) continue;
      if (g.neighbors(members[i]) == g.neighbors(members[j])) {
        cancelled.insert(members[i]);
        cancelled.insert(members[j]);
        break;
      }
    }
  }
  kept = kept - cancelled;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (kept.contains(u) || kept.contains(v)) edges.emplace_back(u, v);
  }
  return {Graph::from_edges(g.order(), edges), kept};
}

}  // namespace graphlu
