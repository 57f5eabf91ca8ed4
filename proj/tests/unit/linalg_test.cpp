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

#include <doctest.h>

#include <random>
#include <set>

#include "graphlu/f2.hpp"
#include "graphlu/mod2r.hpp"

using namespace graphlu;

namespace {

BitVec random_vec(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  BitVec v(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i) v.set(i, coin(rng));
  return v;
}

// All Z/2^r combinations of the generators, by closure.
std::set<ModVec> module_span(const std::vector<ModVec>& gens, std::size_t cols, unsigned r) {
  const std::uint32_t mask = (1u << r) - 1;
  std::set<ModVec> span{ModVec(cols, 0)};
  for (const ModVec& g : gens) {
    std::set<ModVec> next;
    for (const ModVec& v : span) {
      ModVec w = v;
      for (std::uint32_t c = 0; c <= mask; ++c) {
        next.insert(w);
        for (std::size_t j = 0; j < cols; ++j) w[j] = (w[j] + g[j]) & mask;
      }
    }
    span = std::move(next);
  }
  return span;
}

}  // namespace

TEST_CASE("affine F2 solving") {
  MatF2 id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.rows[i].set(i);
  BitVec b(4);
  b.set(2);
  auto sol = f2_solve_affine(id, b);
  REQUIRE(sol.particular);
  CHECK(*sol.particular == b);
  CHECK(sol.kernel.empty());

  MatF2 zero(2, 5);
  auto z = f2_solve_affine(zero, BitVec(2));
  CHECK(z.kernel.size() == 5);
  BitVec one(2);
  one.set(0);
  CHECK_FALSE(f2_solve_affine(zero, one).particular);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    MatF2 a(0, 30);
    for (int i = 0; i < 20; ++i) a.rows.push_back(random_vec(rng, 30, 0.3));
    const BitVec x0 = random_vec(rng, 30);
    const BitVec rhs = a.multiply(x0);
    auto s = f2_solve_affine(a, rhs);
    REQUIRE(s.particular);
    CHECK(a.multiply(*s.particular) == rhs);
    CHECK(s.kernel.size() == 30 - f2_rank(a.rows));
    for (const BitVec& k : s.kernel) CHECK(a.multiply(k).is_zero());
    CHECK(f2_rank(s.kernel) == s.kernel.size());
  }
}

TEST_CASE("F2 basis extraction") {
  CHECK(f2_basis_from_generators({}).empty());
  std::mt19937_64 rng(32);
  const BitVec v = random_vec(rng, 10);
  CHECK(f2_basis_from_generators({v, v, v}).size() == 1);
  for (int t = 0; t < 50; ++t) {
    std::vector<BitVec> gens;
    for (int i = 0; i < 12; ++i) gens.push_back(random_vec(rng, 8, 0.3));
    const auto basis = f2_basis_from_generators(gens);
    CHECK(f2_rank(basis) == basis.size());
    F2Echelon e(8);
    for (const auto& b : basis) e.insert(b);
    for (const auto& g : gens) CHECK(e.in_span(g));
    const auto idx = f2_basis_indices(gens);
    CHECK(idx.size() == basis.size());
  }
}

TEST_CASE("Howell kernel small cases") {
  MatMod2r two(1, 1, 2);
  two.set(0, 0, 2);
  const auto k = howell_kernel(two);
  CHECK(module_span(k, 1, 2) == std::set<ModVec>{{0}, {2}});

  MatMod2r id(3, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(module_span(howell_kernel(id), 3, 3).size() == 1);

  MatMod2r empty(0, 2, 2);
  CHECK(module_span(howell_kernel(empty), 2, 2).size() == 16);
}

TEST_CASE("Howell kernel matches exhaustive enumeration") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const unsigned r = 1 + static_cast<unsigned>(rng() % 3);
    const std::size_t cols = 1 + rng() % (r == 3 ? 5 : 8);
    const std::size_t rows = 1 + rng() % 10;
    MatMod2r a(rows, cols, r);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        // Bias toward even entries so kernels are nontrivial.
        const std::uint64_t x = rng() % (1u << r);
        a.set(i, j, (rng() % 2) ? (x << 1) : x);
      }
    }
    const auto gens = howell_kernel(a);
    CHECK(gens.size() <= cols);
    for (const ModVec& g : gens) {
      for (std::uint32_t v : a.multiply(g)) CHECK(v == 0);
    }
    std::set<ModVec> brute;
    const std::uint64_t total = std::uint64_t{1} << (r * cols);
    for (std::uint64_t code = 0; code < total; ++code) {
      ModVec x(cols);
      for (std::size_t j = 0; j < cols; ++j) x[j] = static_cast<std::uint32_t>((code >> (r * j)) & ((1u << r) - 1));
      bool zero = true;
      for (std::uint32_t v : a.multiply(x)) zero = zero && v == 0;
      if (zero) brute.insert(x);
    }
    CHECK(module_span(gens, cols, r) == brute);
  }
}

TEST_CASE("odd inverses and valuations") {
  for (std::uint64_t x = 1; x < 200; x += 2) CHECK(((x * inverse_odd(x, 10)) & 1023) == 1);
  CHECK(valuation2(12) == 2);
  CHECK(valuation2(1) == 0);
}
