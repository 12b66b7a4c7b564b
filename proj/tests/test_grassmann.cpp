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
#include <map>
#include <set>

#include "grassembed/catalog.hpp"
#include "grassembed/embeddings.hpp"
#include "grassembed/io.hpp"
#include "grassembed/oracles.hpp"

using namespace grassembed;

namespace {

const Field gf2 = Field::of_order(2);

Subspace span2(std::vector<Vec> rows) { return Subspace::span(gf2, rows.front().size(), rows); }

}  // namespace

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 4, 2) == 1);
  CHECK(gaussian_binomial(4, 5, 2) == 0);
  CHECK(gaussian_binomial(5, 1, 3) == 121);
  CHECK(gaussian_binomial(6, 3, 2) == 1395);
  CHECK_THROWS_AS(gaussian_binomial(60, 30, 4), Error);
}

TEST_CASE("counts against the closure oracle, q in {2,3}, n <= 5") {
  for (std::uint64_t q : {2, 3}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        const auto brute = oracle::subspaces_by_closure(f, n, k);
        const Grassmannian g(f, n, k);
        CHECK(brute.size() == gaussian_binomial(n, k, q));
        CHECK(g.size() == brute.size());
        std::set<std::vector<std::uint32_t>> from_index;
        for (const auto& x : g.enumerate()) from_index.insert(oracle::members(x));
        CHECK(from_index == std::set<std::vector<std::uint32_t>>(brute.begin(), brute.end()));
      }
    }
  }
}

TEST_CASE("canonical order") {
  const auto pts = Grassmannian(gf2, 2, 1).enumerate();
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Subspace::coordinate(gf2, 2, {1}));
  const Grassmannian g(gf2, 4, 2);
  CHECK(g.at(0) == Subspace::coordinate(gf2, 4, {2, 3}));
  CHECK(g.at(g.size() - 1) == span2({{1, 0, 1, 1}, {0, 1, 1, 1}}));
  const auto all = g.enumerate();
  CHECK(std::set<Subspace>(all.begin(), all.end()).size() == 35);
  // frozen: span{e1,e2} and span{e1,e3}
  CHECK(g.index_of(Subspace::coordinate(gf2, 4, {0, 1})) == 19);
  CHECK(g.index_of(Subspace::coordinate(gf2, 4, {0, 2})) == 11);
}

TEST_CASE("ranking and unranking are inverse") {
  for (auto [q, n, k] : {std::tuple<std::uint64_t, std::size_t, std::size_t>{2, 6, 3}, {3, 5, 2}, {4, 4, 2}, {5, 3, 1}}) {
    const Grassmannian g(Field::of_order(q), n, k);
    for (std::uint64_t i = 0; i < g.size(); ++i) CHECK(g.index_of(g.at(i)) == i);
  }
  // a Grassmannian far too large to enumerate is still indexable
  const Grassmannian big(Field::of_order(7), 6, 3);
  catalog::Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t i = rng() % big.size();
    CHECK(big.index_of(big.at(i)) == i);
  }
  CHECK_THROWS_AS(big.enumerate(), BudgetError);
  CHECK_THROWS_AS(Grassmannian(gf2, 4, 2).at(35), Error);
  CHECK_THROWS_AS(Grassmannian(gf2, 4, 2).index_of(Subspace::coordinate(gf2, 4, {0})), Error);
}

TEST_CASE("adjacency and distance examples") {
  const Subspace e12 = Subspace::coordinate(gf2, 4, {0, 1});
  const Subspace e13 = Subspace::coordinate(gf2, 4, {0, 2});
  const Subspace e34 = Subspace::coordinate(gf2, 4, {2, 3});
  CHECK_FALSE(adjacent(e12, e12));
  CHECK(adjacent(e12, e13));
  CHECK_FALSE(adjacent(e12, e34));
  CHECK(distance(e12, e12) == 0);
  CHECK(distance(e12, e34) == 2);
  CHECK_THROWS_AS(distance(e12, Subspace::coordinate(gf2, 4, {0})), Error);
}

TEST_CASE("distance formula agrees with BFS") {
  for (auto [q, n, k] : {std::tuple<std::uint64_t, std::size_t, std::size_t>{2, 4, 2}, {2, 5, 2}, {3, 4, 2}, {2, 6, 3}}) {
    const GrassmannGraph g(Field::of_order(q), n, k);
    const auto formula = distance_matrix(g);
    CHECK(formula == oracle::bfs_distances(g.adjacency_lists()));
    CHECK(formula == distance_matrix_serial(g));
    CHECK(*std::max_element(formula.begin(), formula.end()) == std::min(k, n - k));
    CHECK(g.diameter() == std::min(k, n - k));
  }
}

TEST_CASE("graph invariants at (2,4,2)") {
  const GrassmannGraph g(gf2, 4, 2);
  CHECK(g.size() == 35);
  CHECK(g.edge_count() == 315);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.neighbors(i).size() == 18);
    CHECK_FALSE(g.adjacent(i, i));
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(g.adjacent(i, j) == g.adjacent(j, i));
  }
}

TEST_CASE("lines, stars and tops") {
  const Subspace s = Subspace::coordinate(gf2, 4, {0});
  const Subspace u = Subspace::coordinate(gf2, 4, {0, 1, 2});
  const auto l = line(s, u);
  const std::set<Subspace> got(l.begin(), l.end());
  const std::set<Subspace> expected = {span2({{1, 0, 0, 0}, {0, 1, 0, 0}}), span2({{1, 0, 0, 0}, {0, 0, 1, 0}}),
                                       span2({{1, 0, 0, 0}, {0, 1, 1, 0}})};
  CHECK(got == expected);
  for (const auto& a : l) {
    for (const auto& b : l) CHECK((a == b) != adjacent(a, b));
  }
  CHECK_THROWS_AS(line(Subspace::coordinate(gf2, 4, {3}), u), Error);
  CHECK(star(s).size() == 7);
  CHECK(top(u).size() == 7);
  CHECK(star_size(4, 2, 2) == 7);
  CHECK(top_size(2, 2) == 7);
  CHECK(star(Subspace::coordinate(Field::of_order(3), 5, {0, 1})).size() == star_size(5, 3, 3));
  CHECK_THROWS_AS(top(Subspace(gf2, 4)), Error);

  // star and top meet in a line when the centres are incident, else in at most one vertex
  const auto points = Grassmannian(gf2, 4, 1).enumerate();
  const auto solids = Grassmannian(gf2, 4, 3).enumerate();
  for (const auto& p : points) {
    for (const auto& w : solids) {
      const auto st = star(p);
      const auto tp = top(w);
      std::size_t common = 0;
      for (const auto& x : st) common += std::count(tp.begin(), tp.end(), x);
      if (w.contains(p)) {
        CHECK(common == 3);
      } else {
        CHECK(common <= 1);
      }
    }
  }
}

TEST_CASE("maximal cliques containing an edge") {
  const Subspace x = Subspace::coordinate(gf2, 4, {0, 1});
  const Subspace y = Subspace::coordinate(gf2, 4, {0, 2});
  const auto [st, tp] = maximal_cliques_containing(x, y);
  CHECK(st.kind == CliqueKind::Star);
  CHECK(st.center == Subspace::coordinate(gf2, 4, {0}));
  CHECK(tp.kind == CliqueKind::Top);
  CHECK(tp.center == Subspace::coordinate(gf2, 4, {0, 1, 2}));
  CHECK_THROWS_AS(maximal_cliques_containing(x, Subspace::coordinate(gf2, 4, {2, 3})), Error);
}

TEST_CASE("maximal cliques at (2,4,2): stars and tops, one of each per edge") {
  const GrassmannGraph g(gf2, 4, 2);
  const auto cliques = oracle::maximal_cliques(g.adjacency_lists());
  CHECK(cliques.size() == 30);
  std::map<std::pair<std::size_t, std::size_t>, int> edge_cover;
  for (const auto& c : cliques) {
    CHECK(c.size() == 7);
    std::vector<Subspace> members;
    for (auto i : c) members.push_back(g.vertex(i));
    Subspace meet = members.front();
    Subspace join = members.front();
    for (const auto& m : members) {
      meet = intersection(meet, m);
      join = sum(join, m);
    }
    const bool is_star = meet.dim() == 1;
    const bool is_top = join.dim() == 3;
    CHECK(is_star != is_top);
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) edge_cover[{c[a], c[b]}] += is_star ? 1 : 100;
    }
  }
  CHECK(edge_cover.size() == 315);
  for (const auto& [edge, cover] : edge_cover) CHECK(cover == 101);

  // distinct maximal cliques meet in nothing, a vertex, or a line (star with top only)
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(), cliques[b].end(),
                            std::back_inserter(common));
      CHECK((common.size() <= 1 || common.size() == 3));
      if (common.size() == 3) {
        const auto is_star = [&](const std::vector<std::size_t>& c) {
          Subspace meet = g.vertex(c[0]);
          for (auto i : c) meet = intersection(meet, g.vertex(i));
          return meet.dim() == 1;
        };
        const bool a_star = is_star(cliques[a]);
        const bool b_star = is_star(cliques[b]);
        CHECK(a_star != b_star);
      }
    }
  }
}

TEST_CASE("dual isomorphism") {
  const GrassmannMap d = dual_isomorphism(gf2, 4, 2);
  CHECK(d.table.size() == 35);
  CHECK(std::set<std::uint64_t>(d.table.begin(), d.table.end()).size() == 35);
  for (std::size_t i = 0; i < 35; ++i) CHECK(d.table[d.table[i]] == i);
  const auto all = d.domain.enumerate();
  for (std::size_t i = 0; i < 35; ++i) {
    for (std::size_t j = 0; j < 35; ++j) CHECK(distance(all[i], all[j]) == distance(d.image(i), d.image(j)));
  }
  const GrassmannMap d3 = dual_isomorphism(Field::of_order(3), 5, 2);
  CHECK(d3.codomain.grade() == 3);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group_order(GrassmannGraph(gf2, 2, 1)) == 6);
  CHECK(automorphism_group_order(GrassmannGraph(gf2, 4, 2)) == 40320);
  CHECK(automorphism_group_order(GrassmannGraph(gf2, 4, 2)) == 2 * oracle::gl_order(2, 4));
  // Gamma_1(F_2^3) is complete on 7 vertices
  CHECK(automorphism_group_order(GrassmannGraph(gf2, 3, 1)) == 5040);
  // 5-cycle
  CHECK(automorphism_group_order({{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}}) == 10);
  // Petersen graph
  const std::vector<std::vector<std::size_t>> petersen = {{1, 4, 5}, {0, 2, 6}, {1, 3, 7}, {2, 4, 8}, {0, 3, 9},
                                                          {0, 7, 8}, {1, 8, 9}, {2, 5, 9}, {3, 5, 6}, {4, 6, 7}};
  CHECK(automorphism_group_order(petersen) == 120);
  // no duality when n != 2k
  CHECK(automorphism_group_order(GrassmannGraph(gf2, 5, 2)) == oracle::gl_order(2, 5));
  CHECK_THROWS_AS(automorphism_group_order(GrassmannGraph(gf2, 6, 2)), BudgetError);
}

TEST_CASE("GL(4,2) acts faithfully on Gamma_2(F_2^4)") {
  const Grassmannian g(gf2, 4, 2);
  const auto vertices = g.enumerate();
  const GrassmannGraph graph(gf2, 4, 2);
  std::set<std::vector<std::uint64_t>> perms;
  const auto group = oracle::enumerate_gl(gf2, 4);
  REQUIRE(group.size() == 20160);
  for (const auto& u : group) {
    std::vector<std::uint64_t> perm;
    for (const auto& x : vertices) perm.push_back(g.index_of(image(x, u)));
    perms.insert(perm);
  }
  CHECK(perms.size() == 20160);
  // each permutation is a graph automorphism: check a sample
  int checked = 0;
  for (const auto& perm : perms) {
    if (++checked > 50) break;
    for (std::size_t i = 0; i < 35; ++i) {
      for (std::size_t j = 0; j < 35; ++j) CHECK(graph.adjacent(i, j) == graph.adjacent(perm[i], perm[j]));
    }
  }
}

TEST_CASE("graph export and re-import") {
  const GrassmannGraph small(gf2, 2, 1);
  const EdgeList e = read_edge_list(export_graph(small, GraphFormat::EdgeList));
  CHECK(e.edges.size() == 3);
  const GrassmannGraph g(gf2, 4, 2);
  const std::string text = export_graph(g, GraphFormat::EdgeList);
  CHECK(text == export_graph(g, GraphFormat::EdgeList));
  const EdgeList back = read_edge_list(text);
  CHECK(back.vertices == 35);
  CHECK(back.edges.size() == 315);
  std::vector<std::vector<std::size_t>> adj(back.vertices);
  for (auto [i, j] : back.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  CHECK(adj == g.adjacency_lists());
  const std::string dot = export_graph(g, GraphFormat::Dot);
  CHECK(dot.rfind("graph grassmann {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 315);
  CHECK_THROWS_AS(parse_graph_format("graphml"), Error);
}
