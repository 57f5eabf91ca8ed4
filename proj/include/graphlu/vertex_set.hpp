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
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace graphlu {

using Vertex = std::uint32_t;

// Graphs and vertex sets are fixed-width. Larger inputs raise ResourceError.
inline constexpr std::size_t kMaxVertices = 512;

class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(const std::vector<Vertex>& members);

  // {0, ..., n-1}.
  static VertexSet range(std::size_t n);

  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void flip(Vertex v) { words_[v >> 6] ^= std::uint64_t{1} << (v & 63); }
  void set(Vertex v, bool value) {
    if (value) {
      insert(v);
    } else {
      erase(v);
    }
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  std::optional<Vertex> first() const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    }
    return std::nullopt;
  }
  // Largest member, if any.
  std::optional<Vertex> last() const {
    for (std::size_t i = kWords; i-- > 0;) {
      if (words_[i]) return static_cast<Vertex>(i * 64 + 63 - std::countl_zero(words_[i]));
    }
    return std::nullopt;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }
  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < kWords; ++i) {
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return total;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;
  // "{0,3,5}".
  std::string to_string() const;

  const std::array<std::uint64_t, kWords>& words() const { return words_; }
  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

// Lexicographic order of the sorted member lists; a proper prefix is smaller.
bool lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace graphlu
