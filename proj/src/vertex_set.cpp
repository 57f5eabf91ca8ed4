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

#include "graphlu/vertex_set.hpp"

#include "graphlu/errors.hpp"

namespace graphlu {

namespace {
void check_vertex(Vertex v) {
  if (v >= kMaxVertices) {
    throw ResourceError("vertex id " + std::to_string(v) + " exceeds the width limit of " +
                        std::to_string(kMaxVertices));
  }
}
}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) {
    check_vertex(v);
    insert(v);
  }
}

VertexSet::VertexSet(const std::vector<Vertex>& members) {
  for (Vertex v : members) {
    check_vertex(v);
    insert(v);
  }
}

VertexSet VertexSet::range(std::size_t n) {
  if (n > kMaxVertices) {
    throw ResourceError("vertex count " + std::to_string(n) + " exceeds the width limit of " +
                        std::to_string(kMaxVertices));
  }
  VertexSet s;
  for (std::size_t i = 0; i < n / 64; ++i) s.words_[i] = ~std::uint64_t{0};
  if (n % 64) s.words_[n / 64] = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) out += ",";
    first_member = false;
    out += std::to_string(v);
  });
  return out + "}";
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  VertexSet diff = a ^ b;
  auto x = diff.first();
  if (!x) return false;
  // x is the first position where the sorted lists differ. The list holding
  // x is smaller unless the other list has already ended.
  VertexSet above = VertexSet::range(kMaxVertices) - VertexSet::range(*x + 1);
  if (a.contains(*x)) return b.intersects(above);
  return !a.intersects(above);
}

}  // namespace graphlu
