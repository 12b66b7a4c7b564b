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

#include <numeric>
#include <set>

#include "grassembed/catalog.hpp"
#include "grassembed/embeddings.hpp"

using namespace grassembed;

namespace {

const Field gf2 = Field::of_order(2);

GrassmannMap identity_map(const Field& f, std::size_t n, std::size_t k) {
  const Grassmannian g(f, n, k);
  std::vector<std::uint64_t> table(g.size());
  std::iota(table.begin(), table.end(), 0);
  return {g, g, std::move(table)};
}

}  // namespace

TEST_CASE("verify: identity, dual, constant, transposition") {
  const GrassmannMap id = identity_map(gf2, 4, 2);
  const auto r = verify(id);
  CHECK(r.injective);
  CHECK(r.adjacency_forward);
  CHECK(r.adjacency_backward);
  CHECK(r.isometric);
  CHECK(r.type == EmbeddingType::A);
  CHECK(r.witnesses.empty());

  CHECK(verify(dual_isomorphism(gf2, 4, 2)).type == EmbeddingType::B);
  CHECK(std::string(to_string(EmbeddingType::B)) == "B");

  GrassmannMap constant = id;
  std::fill(constant.table.begin(), constant.table.end(), 0);
  const auto rc = verify(constant);
  CHECK_FALSE(rc.injective);
  CHECK_FALSE(rc.isometric);
  CHECK(rc.type == EmbeddingType::NotAnEmbedding);
  CHECK(rc.witnesses.size() == VerificationReport::kMaxWitnesses);

  // swapping two non-adjacent vertices breaks adjacency
  const GrassmannGraph graph(gf2, 4, 2);
  std::size_t far = 1;
  while (graph.adjacent(0, far)) ++far;
  GrassmannMap swapped = id;
  std::swap(swapped.table[0], swapped.table[far]);
  const auto rs = verify(swapped);
  CHECK(rs.injective);
  CHECK_FALSE(rs.adjacency_forward);
  CHECK_FALSE(rs.isometric);
  REQUIRE_FALSE(rs.witnesses.empty());
  for (auto [i, j] : rs.witnesses) CHECK(i < j);

  GrassmannMap bad = id;
  bad.table[3] = 99;
  CHECK_THROWS_AS(verify(bad), Error);
}

TEST_CASE("verify agrees with its serial twin") {
  catalog::Rng rng(31);
  auto cases = catalog::type_a_instances(rng, 2);
  for (auto& inst : catalog::type_b_instances(rng, 2)) cases.push_back(inst);
  for (const auto& inst : cases) {
    GrassmannMap perturbed = inst.map;
    std::swap(perturbed.table[1], perturbed.table[20]);
    for (const GrassmannMap* m : {&inst.map, static_cast<const GrassmannMap*>(&perturbed)}) {
      const auto a = verify(*m);
      const auto b = verify_serial(*m);
      CHECK(a.injective == b.injective);
      CHECK(a.adjacency_forward == b.adjacency_forward);
      CHECK(a.adjacency_backward == b.adjacency_backward);
      CHECK(a.type == b.type);
      CHECK(a.witnesses == b.witnesses);
    }
  }
}

TEST_CASE("constructions report their type and decompose back") {
  catalog::Rng rng(37);
  auto cases = catalog::type_a_instances(rng, 3);
  for (auto& inst : catalog::type_b_instances(rng, 3)) cases.push_back(inst);
  for (auto& inst : catalog::balanced_instances(rng, 1)) cases.push_back(inst);
  for (const auto& inst : cases) {
    CAPTURE(inst.name);
    const auto r = verify(inst.map);
    CHECK(r.isometric);
    CHECK(r.type == inst.type);
    const Decomposition d = decompose(inst.map);
    CHECK(d.type == inst.type);
    CHECK(reconstruct(d) == inst.map);
    if (inst.subspace) CHECK(d.subspace == *inst.subspace);
    if (inst.type == EmbeddingType::A) CHECK(d.subspace.dim() == inst.map.codomain.grade() - d.grade);
    if (inst.type == EmbeddingType::B) CHECK(d.subspace.dim() == inst.map.codomain.grade() + d.grade);
  }
}

TEST_CASE("type A with a trivial subspace is the induced map") {
  catalog::Rng rng(41);
  const Field gf4 = Field::of_order(4);
  const SemilinearMap l = catalog::random_m_embedding(rng, gf2, gf4, 4, 4, 4);
  const GrassmannMap f = construct_type_A(Subspace(gf4, 4), l, 2);
  CHECK(f == induced_map(l, 2));
  const SemilinearMap weak = catalog::strictness_witness();
  CHECK_THROWS_AS(construct_type_A(Subspace(weak.target_field(), 2), weak, 1), NotAnEmbeddingError);
}

TEST_CASE("decomposing the dual isomorphism") {
  const Decomposition d = decompose(dual_isomorphism(gf2, 4, 2));
  CHECK(d.type == EmbeddingType::B);
  CHECK(d.subspace.dim() == 4);
  CHECK(is_injective(d.inner_map));
  CHECK(reconstruct(d) == dual_isomorphism(gf2, 4, 2));
}

TEST_CASE("decompose rejects non-embeddings") {
  GrassmannMap id = identity_map(gf2, 4, 2);
  std::swap(id.table[0], id.table[34]);
  CHECK_THROWS_AS(decompose(id), Error);
}

TEST_CASE("decompose with a dualised domain when k > n-k") {
  catalog::Rng rng(43);
  const auto inst = catalog::type_a_instances(rng, 1).front();
  // Gamma_2(F^4) has k = n-k; go through (2,5,2) for a strict case
  const SemilinearMap l = catalog::random_m_embedding(rng, gf2, gf2, 5, 6, 4);
  const GrassmannMap f = dualize_domain(construct_type_A(Subspace(gf2, 6), l, 2));
  CHECK(f.domain.grade() == 3);
  CHECK(verify(f).isometric);
  CHECK_THROWS_AS(decompose(f), Error);
  const Decomposition d = decompose(f, {.dualize_domain = true});
  CHECK(d.domain_dualized);
  CHECK(d.grade == 2);
  CHECK(reconstruct(d) == f);
  CHECK(decompose(inst.map, {.full_validation = true}).type == EmbeddingType::A);
}

TEST_CASE("descend") {
  const GrassmannMap id = identity_map(gf2, 4, 2);
  CHECK(descend(id, 1) == identity_map(gf2, 4, 1));
  CHECK(descend(id, 0) == id);

  catalog::Rng rng(47);
  const auto inst = catalog::type_a_instances(rng, 1).front();
  const GrassmannMap f1 = descend(inst.map, 1, true);
  CHECK(f1 == construct_type_A(*inst.subspace, *inst.inner, 1));
  for (std::uint64_t x = 0; x < inst.map.domain.size(); ++x) {
    const Subspace big = inst.map.image(x);
    for (const auto& p : subspaces_of(inst.map.domain.at(x), 1)) {
      CHECK(big.contains(f1.image(f1.domain.index_of(p))));
    }
  }
}

TEST_CASE("duality transforms") {
  catalog::Rng rng(53);
  const auto inst = catalog::type_a_instances(rng, 1).front();
  const GrassmannMap fc = dualize_codomain(inst.map);
  CHECK(verify(fc).type == EmbeddingType::B);
  CHECK(dualize_codomain(fc) == inst.map);
  const GrassmannMap fd = dualize_domain(inst.map);
  CHECK(verify(fd).type == EmbeddingType::B);
  CHECK(dualize_domain(fd) == inst.map);
  CHECK(verify(dualize_domain(fc)).type == EmbeddingType::A);
}

TEST_CASE("contragredient") {
  const Field gf3 = Field::of_order(3);
  CHECK(contragredient(Matrix::identity(gf3, 3)) == Matrix::identity(gf3, 3));
  const Matrix u = Matrix::from_rows(gf3, 2, {{1, 1}, {0, 1}});
  CHECK(contragredient(u) == Matrix::from_rows(gf3, 2, {{1, 0}, {2, 1}}));
  CHECK_THROWS_AS(contragredient(Matrix::from_rows(gf3, 2, {{1, 1}, {1, 1}})), Error);
  catalog::Rng rng(59);
  for (int t = 0; t < 20; ++t) {
    const Matrix g = catalog::random_invertible(rng, gf3, 4);
    CHECK(contragredient(contragredient(g)) == g);
    const Subspace s = catalog::random_subspace(rng, gf3, 4, 1 + t % 3);
    CHECK(annihilator(image(s, g)) == image(annihilator(s), contragredient(g)));
  }
}

TEST_CASE("feasibility") {
  auto r = feasibility(2, 4, 2, 2, 5, 2);
  CHECK(r.isometric_possible);
  CHECK(r.type_a_rigid_condition);
  CHECK(r.type_b_rigid_condition);
  CHECK(r.field_hom_exists);
  r = feasibility(2, 5, 2, 32, 4, 2);
  CHECK(r.isometric_possible);
  CHECK_FALSE(r.type_a_rigid_condition);
  CHECK_FALSE(r.type_b_rigid_condition);
  CHECK(r.field_hom_exists);
  CHECK_FALSE(feasibility(2, 4, 2, 3, 5, 2).field_hom_exists);
  CHECK_FALSE(feasibility(4, 4, 2, 8, 5, 2).field_hom_exists);
  CHECK(feasibility(4, 4, 2, 16, 5, 2).field_hom_exists);
  CHECK_FALSE(feasibility(2, 6, 3, 2, 5, 2).isometric_possible);
  CHECK_THROWS_AS(feasibility(2, 4, 1, 2, 5, 2), Error);
  CHECK_THROWS_AS(feasibility(6, 4, 2, 2, 5, 2), Error);
}

TEST_CASE("maximal cliques map into unique maximal cliques") {
  catalog::Rng rng(61);
  const auto inst = catalog::type_a_instances(rng, 1).front();
  const Grassmannian& dom = inst.map.domain;
  std::vector<CliqueDescriptor> cliques;
  for (const auto& p : Grassmannian(gf2, 4, 1).enumerate()) cliques.push_back({CliqueKind::Star, p});
  for (const auto& w : Grassmannian(gf2, 4, 3).enumerate()) cliques.push_back({CliqueKind::Top, w});
  for (const auto& c : cliques) {
    std::vector<Subspace> images;
    for (const auto& x : c.members()) images.push_back(inst.map.image(dom.index_of(x)));
    const auto [st, tp] = maximal_cliques_containing(images[0], images[1]);
    int holding = 0;
    for (const auto& candidate : {st, tp}) {
      bool all = true;
      for (const auto& y : images) {
        const auto m = candidate.members();
        all = all && std::find(m.begin(), m.end(), y) != m.end();
      }
      holding += all;
    }
    CHECK(holding == 1);
  }
}

TEST_CASE("rigidity of constructed embeddings with n = 2k") {
  catalog::Rng rng(67);
  auto cases = catalog::type_a_instances(rng, 1);
  for (auto& inst : catalog::type_b_instances(rng, 1)) cases.push_back(inst);
  for (auto& inst : catalog::balanced_instances(rng, 1)) cases.push_back(inst);
  for (const auto& inst : cases) {
    CAPTURE(inst.name);
    const RigidityReport r = check_l_rigidity(inst.map);
    CHECK(r.rigid);
    CHECK(r.failures.empty());
    CHECK(r.checked_generators.size() == gl_generators(gf2, 4).size());
    REQUIRE(r.extensions.size() == r.checked_generators.size());
    for (std::size_t i = 0; i < r.extensions.size(); ++i) {
      REQUIRE(r.extensions[i].has_value());
      CHECK(extends(inst.map, r.checked_generators[i], *r.extensions[i]));
    }
    // extensions compose
    const Matrix& u1 = r.checked_generators[0];
    const Matrix& u2 = r.checked_generators.back();
    CHECK(extends(inst.map, multiply(u1, u2), multiply(*r.extensions[0], *r.extensions.back())));
    CHECK(find_extension(inst.map, multiply(u1, u2)).has_value());
  }
}

TEST_CASE("extends rejects a wrong partner") {
  const GrassmannMap id = identity_map(gf2, 4, 2);
  const auto gens = gl_generators(gf2, 4);
  CHECK(extends(id, gens[0], gens[0]));
  CHECK_FALSE(extends(id, gens[0], gens[1]));
}

TEST_CASE("a non-rigid isometric embedding: GF(2)^5 -> GF(32)^4 at k = 2") {
  catalog::Rng rng(71);
  const Field gf32 = Field::of_order(32);
  const SemilinearMap l = catalog::random_m_embedding(rng, gf2, gf32, 5, 4, 4);
  const GrassmannMap f = induced_map(l, 2);
  CHECK(verify(f).isometric);
  CHECK(verify(f).type == EmbeddingType::A);
  const auto r = feasibility(2, 5, 2, 32, 4, 2);
  CHECK_FALSE(r.type_a_rigid_condition);
  const RigidityReport rep = check_l_rigidity(f);
  CHECK_FALSE(rep.rigid);
  CHECK_FALSE(rep.failures.empty());
  for (auto i : rep.failures) CHECK_FALSE(rep.extensions[i].has_value());
}

TEST_CASE("rigidity budget") {
  catalog::Rng rng(73);
  const auto inst = catalog::type_a_instances(rng, 1).front();
  CHECK_THROWS_AS(check_l_rigidity(inst.map, 0), BudgetError);
}
