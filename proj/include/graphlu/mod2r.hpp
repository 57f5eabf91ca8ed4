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
#include <cstdint>
#include <vector>

namespace graphlu {

using ModVec = std::vector<std::uint32_t>;

// Dense matrix over Z/2^r with entries kept reduced.
class MatMod2r {
 public:
  MatMod2r(std::size_t rows, std::size_t cols, unsigned level);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned level() const { return level_; }
  std::uint64_t mask() const { return (std::uint64_t{1} << level_) - 1; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t value) {
    data_[i * cols_ + j] = static_cast<std::uint32_t>(value & mask());
  }
  void append_row(const ModVec& row);

  ModVec multiply(const ModVec& x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  unsigned level_;
  std::vector<std::uint32_t> data_;
};

// 2-adic valuation of a nonzero value.
unsigned valuation2(std::uint64_t x);
// Inverse of an odd value mod 2^level.
std::uint64_t inverse_odd(std::uint64_t x, unsigned level);

// Generators of {x : A x = 0} over Z/2^r, at most cols of them. Every
// solution is a Z/2^r combination of the output.
std::vector<ModVec> howell_kernel(const MatMod2r& a);

}  // namespace graphlu
