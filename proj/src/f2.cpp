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

#include "graphlu/f2.hpp"

#include <algorithm>

#include "graphlu/errors.hpp"

namespace graphlu {

std::optional<std::size_t> BitVec::next_set(std::size_t from) const {
  if (from >= n_) return std::nullopt;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    if (++w >= words_.size()) return std::nullopt;
    word = words_[w];
  }
}

void BitVec::resize(std::size_t n) {
  words_.resize((n + 63) / 64, 0);
  n_ = n;
  if (n % 64) words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
}

std::string BitVec::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

std::size_t BitVec::hash() const {
  std::uint64_t h = n_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

BitVec MatF2::multiply(const BitVec& x) const {
  if (x.size() != cols) throw ValidationError("MatF2::multiply: dimension mismatch");
  BitVec out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out.set(i, rows[i].dot(x));
  return out;
}

F2Echelon::F2Echelon(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

bool F2Echelon::reduce(BitVec& v) const {
  if (v.size() != cols_) throw ValidationError("F2Echelon: dimension mismatch");
  auto c = v.next_set(0);
  while (c) {
    const int r = pivot_row_[*c];
    if (r >= 0) v ^= rows_[static_cast<std::size_t>(r)];
    c = v.next_set(*c + 1);
  }
  return v.is_zero();
}

bool F2Echelon::insert(BitVec v) {
  if (reduce(v)) return false;
  const std::size_t lead = *v.next_set(0);
  pivot_row_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> F2Echelon::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_row_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<BitVec> F2Echelon::reduced_rows() const {
  std::vector<std::size_t> piv = pivots();
  std::vector<BitVec> out;
  out.reserve(piv.size());
  for (std::size_t c : piv) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  // Rows only carry bits at or after their own pivot, so clearing from the
  // last pivot backwards never reintroduces a cleared bit.
  for (std::size_t i = piv.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      if (out[j].get(piv[i])) out[j] ^= out[i];
    }
  }
  return out;
}

AffineSolution f2_solve_affine(const MatF2& a, const BitVec& b) {
  if (b.size() != a.rows.size()) throw ValidationError("f2_solve_affine: rhs length mismatch");
  const std::size_t n = a.cols;
  F2Echelon ech(n + 1);
  AffineSolution out;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].size() != n) throw ValidationError("f2_solve_affine: row length mismatch");
    BitVec row = a.rows[i];
    row.resize(n + 1);
    row.set(n, b.get(i));
    ech.insert(std::move(row));
  }
  std::vector<std::size_t> piv = ech.pivots();
  std::vector<BitVec> rref = ech.reduced_rows();
  out.rank = piv.size();
  // A pivot in the rhs column means a row reduced to 0 = 1.
  if (!piv.empty() && piv.back() == n) return out;
  BitVec x(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    is_pivot[piv[i]] = true;
    x.set(piv[i], rref[i].get(n));
  }
  out.particular = x;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec k(n);
    k.set(f);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (rref[i].get(f)) k.set(piv[i]);
    }
    out.kernel.push_back(std::move(k));
  }
  return out;
}

std::vector<std::size_t> f2_basis_indices(const std::vector<BitVec>& vectors) {
  std::vector<std::size_t> out;
  if (vectors.empty()) return out;
  F2Echelon ech(vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (ech.insert(vectors[i])) out.push_back(i);
  }
  return out;
}

std::vector<BitVec> f2_basis_from_generators(const std::vector<BitVec>& vectors) {
  std::vector<BitVec> out;
  for (std::size_t i : f2_basis_indices(vectors)) out.push_back(vectors[i]);
  return out;
}

std::size_t f2_rank(const std::vector<BitVec>& vectors) { return f2_basis_indices(vectors).size(); }

}  // namespace graphlu
