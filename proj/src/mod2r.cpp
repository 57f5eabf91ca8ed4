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

#include "graphlu/mod2r.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "graphlu/errors.hpp"

namespace graphlu {

MatMod2r::MatMod2r(std::size_t rows, std::size_t cols, unsigned level)
    : rows_(rows), cols_(cols), level_(level), data_(rows * cols, 0) {
  if (level < 1 || level > 30) throw ValidationError("MatMod2r: level must lie in [1, 30]");
}

void MatMod2r::append_row(const ModVec& row) {
  if (row.size() != cols_) throw ValidationError("MatMod2r::append_row: width mismatch");
  for (auto v : row) data_.push_back(static_cast<std::uint32_t>(v & mask()));
  ++rows_;
}

ModVec MatMod2r::multiply(const ModVec& x) const {
  if (x.size() != cols_) throw ValidationError("MatMod2r::multiply: width mismatch");
  ModVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t{at(i, j)} * x[j];
    out[i] = static_cast<std::uint32_t>(acc & mask());
  }
  return out;
}

unsigned valuation2(std::uint64_t x) { return static_cast<unsigned>(std::countr_zero(x)); }

std::uint64_t inverse_odd(std::uint64_t x, unsigned level) {
  // Newton iteration doubles the number of correct low bits each step.
  std::uint64_t inv = x;
  for (int i = 0; i < 6; ++i) inv *= 2 - x * inv;
  return inv & ((std::uint64_t{1} << level) - 1);
}

std::vector<ModVec> howell_kernel(const MatMod2r& a) {
  const std::size_t cols = a.cols();
  const unsigned r = a.level();
  const std::uint64_t mask = a.mask();

  // Distinct nonzero rows; duplicates add no constraint.
  std::set<ModVec> unique;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ModVec row(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = a.at(i, j);
      nonzero |= row[j] != 0;
    }
    if (nonzero) unique.insert(std::move(row));
  }
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& row : unique) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size();

  // q tracks the column operations: the kernel of A is q times the kernel of
  // the diagonal form.
  std::vector<std::vector<std::uint64_t>> q(cols, std::vector<std::uint64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) q[j][j] = 1;

  std::vector<unsigned> diag_val;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot of minimal valuation in the trailing block.
    std::size_t pi = rows, pj = cols;
    unsigned best = r;
    for (std::size_t i = t; i < rows && best > 0; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        const unsigned v = valuation2(m[i][j]);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    if (pj != t) {
      for (auto& row : m) std::swap(row[t], row[pj]);
      for (auto& row : q) std::swap(row[t], row[pj]);
    }
    const std::uint64_t unit_inv = inverse_odd(m[t][t] >> best, r);
    for (auto& x : m[t]) x = (x * unit_inv) & mask;
    // m[t][t] == 2^best now, and every entry of the block is divisible by it.
    for (std::size_t i = t + 1; i < rows; ++i) {
      const std::uint64_t f = m[i][t] >> best;
      if (!f) continue;
      for (std::size_t j = t; j < cols; ++j) m[i][j] = (m[i][j] - f * m[t][j]) & mask;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const std::uint64_t f = m[t][j] >> best;
      if (!f) continue;
      for (std::size_t i = t; i < rows; ++i) m[i][j] = (m[i][j] - f * m[i][t]) & mask;
      for (std::size_t i = 0; i < cols; ++i) q[i][j] = (q[i][j] - f * q[i][t]) & mask;
    }
    diag_val.push_back(best);
  }

  std::vector<ModVec> gens;
  for (std::size_t j = 0; j < cols; ++j) {
    std::uint64_t scale = 1;
    if (j < diag_val.size()) scale = std::uint64_t{1} << (r - diag_val[j]);
    if ((scale & mask) == 0) continue;
    ModVec g(cols);
    for (std::size_t i = 0; i < cols; ++i) g[i] = static_cast<std::uint32_t>((q[i][j] * scale) & mask);
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace graphlu
