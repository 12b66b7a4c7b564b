// Copyright 2026 The grassembed Authors
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

#include <algorithm>
#include <iterator>

#include "grassembed/catalog.hpp"
#include "grassembed/grassmann.hpp"
#include "grassembed/oracles.hpp"

using namespace grassembed;

namespace {

std::vector<Subspace> all_subspaces(const Field& f, std::size_t n) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto& s : Grassmannian(f, n, k).enumerate()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("rref examples") {
  const Field f = Field::of_order(2);
  const Matrix id = Matrix::identity(f, 4);
  const auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 4);
  CHECK(rref(Matrix(f, 3, 4)).rank == 0);
  const Matrix m = Matrix::from_rows(f, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
  CHECK(rank(m) == 2);
  CHECK(rref(m).pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("packed GF(2) elimination matches the generic path") {
  catalog::Rng rng(7);
  const Field f = Field::of_order(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 40;
    const std::size_t cols = 1 + rng() % 150;
    const Matrix m = catalog::random_matrix(rng, f, rows, cols);
    const auto a = rref(m);
    const auto b = rref_generic(m);
    CHECK(a.reduced == b.reduced);
    CHECK(a.rank == b.rank);
    CHECK(a.pivots == b.pivots);
  }
}

TEST_CASE("rref is canonical: different bases, same subspace") {
  catalog::Rng rng(11);
  for (auto q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 50; ++trial) {
      const Subspace x = catalog::random_subspace(rng, f, 5, 1 + rng() % 4);
      const Matrix change = catalog::random_invertible(rng, f, x.dim());
      CHECK(Subspace::span(multiply(change, x.basis())) == x);
    }
  }
}

TEST_CASE("inverse, null space, solve_left") {
  catalog::Rng rng(3);
  for (auto q : {2u, 3u, 9u}) {
    const Field f = Field::of_order(q);
    const Matrix u = catalog::random_invertible(rng, f, 4);
    const auto inv = inverse(u);
    REQUIRE(inv);
    CHECK(multiply(u, *inv) == Matrix::identity(f, 4));
    const Matrix m = catalog::random_matrix(rng, f, 3, 6);
    const Matrix ns = null_space(m);
    CHECK(ns.rows() + rank(m) == 6);
    CHECK(is_zero(multiply(m, ns.transpose()).data()));
    const Vec c{1, 2 % q, 0};
    const Vec w = vec_times(c, m);
    const auto sol = solve_left(m, w);
    REQUIRE(sol);
    CHECK(vec_times(*sol, m) == w);
  }
  const Field f = Field::of_order(2);
  CHECK_FALSE(inverse(Matrix::from_rows(f, 2, {{1, 1}, {1, 1}})));
  CHECK_FALSE(solve_left(Matrix::from_rows(f, 2, {{1, 0}}), Vec{0, 1}));
}

TEST_CASE("intersection and sum examples") {
  const Field f = Field::of_order(2);
  const Subspace x = Subspace::coordinate(f, 4, {0, 1});
  const Subspace y = Subspace::coordinate(f, 4, {2, 3});
  CHECK(intersection(x, x) == x);
  CHECK(intersection(x, y).dim() == 0);
  CHECK(sum(x, Subspace(f, 4)) == x);
  CHECK(sum(Subspace::coordinate(f, 4, {0}), Subspace::coordinate(f, 4, {1})) == x);
  CHECK_THROWS_AS(intersection(x, Subspace::coordinate(f, 3, {0})), Error);
}

TEST_CASE("dimension formula, exhaustive at q = 2, n <= 4") {
  const Field f = Field::of_order(2);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = all_subspaces(f, n);
    for (const auto& x : all) {
      for (const auto& y : all) {
        const Subspace i = intersection(x, y);
        const Subspace s = sum(x, y);
        CHECK(x.dim() + y.dim() == s.dim() + i.dim());
        CHECK(dim_sum(x, y) == s.dim());
        CHECK(dim_intersection(x, y) == i.dim());
        // membership-level oracle
        const auto mx = oracle::members(x);
        const auto my = oracle::members(y);
        std::vector<std::uint32_t> common;
        std::set_intersection(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(common));
        CHECK(common == oracle::members(i));
      }
    }
  }
}

TEST_CASE("intersection dimension against a kernel oracle over GF(3)") {
  catalog::Rng rng(5);
  const Field f = Field::of_order(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace x = catalog::random_subspace(rng, f, 5, rng() % 6);
    const Subspace y = catalog::random_subspace(rng, f, 5, rng() % 6);
    // (a, b) with a X = b Y: kernel of the stacked system [X; -Y]
    Matrix stacked(f, 0, 5);
    for (std::size_t r = 0; r < x.dim(); ++r) stacked.append_row(x.basis().row(r));
    for (std::size_t r = 0; r < y.dim(); ++r) stacked.append_row(vec_scale(f, f.neg(1), y.basis().row(r)));
    const std::size_t kernel = stacked.rows() - rank(stacked);
    CHECK(intersection(x, y).dim() == kernel);
  }
}

TEST_CASE("annihilator: involution, inclusion reversing, exhaustive at q = 2, n <= 4") {
  const Field f = Field::of_order(2);
  CHECK(annihilator(Subspace::whole(f, 4)).dim() == 0);
  CHECK(annihilator(Subspace::coordinate(f, 4, {0})) == Subspace::coordinate(f, 4, {1, 2, 3}));
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = all_subspaces(f, n);
    for (const auto& x : all) {
      CHECK(annihilator(x).dim() == n - x.dim());
      CHECK(annihilator(annihilator(x)) == x);
      for (const auto& y : all) CHECK(x.contains(y) == annihilator(y).contains(annihilator(x)));
    }
  }
}

TEST_CASE("quotient invariants") {
  catalog::Rng rng(9);
  for (auto q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    const Quotient trivial(Subspace(f, 3));
    CHECK(trivial.dim() == 3);
    CHECK(trivial.project(Vec{1, 0, 1 % q}) == Vec{1, 0, 1 % q});
    CHECK(Quotient(Subspace::coordinate(f, 3, {0})).dim() == 2);
    for (int trial = 0; trial < 40; ++trial) {
      const Subspace s = catalog::random_subspace(rng, f, 5, rng() % 5);
      const Quotient quotient(s);
      CHECK(quotient.dim() == 5 - s.dim());
      const Matrix comp = quotient.complement_basis();
      Matrix all = s.basis();
      for (std::size_t r = 0; r < comp.rows(); ++r) all.append_row(comp.row(r));
      CHECK(rank(all) == 5);
      const Vec y = catalog::random_matrix(rng, f, 1, quotient.dim()).row_vec(0);
      CHECK(quotient.project(quotient.lift(y)) == y);
      const Vec a = catalog::random_matrix(rng, f, 1, 5).row_vec(0);
      const Vec b = catalog::random_matrix(rng, f, 1, 5).row_vec(0);
      const Elem c = catalog::random_element(rng, f);
      CHECK(quotient.project(vec_add(f, a, b)) == vec_add(f, quotient.project(a), quotient.project(b)));
      CHECK(quotient.project(vec_scale(f, c, a)) == vec_scale(f, c, quotient.project(a)));
      CHECK(is_zero(quotient.project(a)) == s.contains(a));
      const Subspace w = catalog::random_subspace(rng, f, quotient.dim(), rng() % (quotient.dim() + 1));
      const Subspace lifted = quotient.lift(w);
      CHECK(lifted.contains(s));
      CHECK(lifted.dim() == w.dim() + s.dim());
      CHECK(quotient.project(lifted) == w);
    }
  }
}

TEST_CASE("image under a matrix") {
  const Field f = Field::of_order(2);
  const Matrix swap = Matrix::from_rows(f, 2, {{0, 1}, {1, 0}});
  CHECK(image(Subspace::coordinate(f, 2, {0}), swap) == Subspace::coordinate(f, 2, {1}));
}
