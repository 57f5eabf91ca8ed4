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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphlu {

// Dynamically sized F2 vector, 64 coordinates per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    words_[i >> 6] = value ? (words_[i >> 6] | bit) : (words_[i >> 6] & ~bit);
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  bool is_zero() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  std::size_t popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  // Inner product over F2.
  bool dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
  }
  // Lowest set index at or after `from`.
  std::optional<std::size_t> next_set(std::size_t from) const;

  // Extends or truncates to n coordinates.
  void resize(std::size_t n);
  std::string to_string() const;  // "0110..."
  std::size_t hash() const;

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

struct MatF2 {
  std::size_t cols = 0;
  std::vector<BitVec> rows;

  MatF2() = default;
  MatF2(std::size_t r, std::size_t c) : cols(c), rows(r, BitVec(c)) {}
  std::size_t row_count() const { return rows.size(); }
  BitVec multiply(const BitVec& x) const;
};

// Incremental row echelon form. Each stored row has a distinct lowest set
// coordinate and no set bit at an earlier pivot of another stored row.
class F2Echelon {
 public:
  explicit F2Echelon(std::size_t cols);

  // Reduces v in place against the stored rows; returns true when v ends at 0.
  bool reduce(BitVec& v) const;
  // Adds v if it is independent of the stored rows; returns whether it was added.
  bool insert(BitVec v);
  bool in_span(BitVec v) const { return reduce(v); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Reduced row echelon form: rows sorted by pivot, pivot columns cleared.
  std::vector<BitVec> reduced_rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;
  std::vector<int> pivot_row_;  // per column, index into rows_ or -1
};

struct AffineSolution {
  std::optional<BitVec> particular;  // empty when inconsistent
  std::vector<BitVec> kernel;
  std::size_t rank = 0;
};

// All x with A x = b.
AffineSolution f2_solve_affine(const MatF2& a, const BitVec& b);
// Linearly independent subset of `vectors` spanning the same space, in input
// order.
std::vector<BitVec> f2_basis_from_generators(const std::vector<BitVec>& vectors);
// Indices of that subset.
std::vector<std::size_t> f2_basis_indices(const std::vector<BitVec>& vectors);
std::size_t f2_rank(const std::vector<BitVec>& vectors);

}  // namespace graphlu
