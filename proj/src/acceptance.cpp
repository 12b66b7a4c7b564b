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

#include "grassembed/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "grassembed/catalog.hpp"
#include "grassembed/oracles.hpp"

namespace grassembed::acceptance {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Counts checks and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }

  Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << checks_ << " checks, " << failures_ << " failures";
    if (failures_ > 0) out << " (first: " << first_failure_ << ")";
    return {failures_ == 0, out.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_failure_;
};

std::string params(std::uint64_t q, std::size_t n, std::size_t k) {
  return "(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}

Outcome distance_vs_bfs(std::uint64_t) {
  Tally t;
  std::uint64_t pairs = 0;
  for (auto [q, n, k] : {std::tuple<std::uint64_t, std::size_t, std::size_t>{2, 4, 2}, {2, 5, 2}, {3, 4, 2}}) {
    const GrassmannGraph g(Field::of_order(q), n, k);
    const auto formula = distance_matrix(g);
    const auto bfs = oracle::bfs_distances(g.adjacency_lists());
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i < formula.size(); ++i) mismatches += formula[i] != bfs[i];
    pairs += formula.size();
    t.check(mismatches == 0, std::to_string(mismatches) + " mismatched pairs at " + params(q, n, k));
  }
  return t.outcome(std::to_string(pairs) + " ordered pairs over 3 graphs");
}

Outcome counts(std::uint64_t) {
  Tally t;
  for (std::uint64_t q : {2, 3}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        const std::uint64_t brute = oracle::subspaces_by_closure(f, n, k).size();
        const std::uint64_t formula = gaussian_binomial(n, k, q);
        const Grassmannian g(f, n, k);
        t.check(brute == formula && g.size() == formula && g.enumerate().size() == formula,
                "count mismatch at " + params(q, n, k));
      }
    }
  }
  const GrassmannGraph g(Field::of_order(2), 4, 2);
  std::uint64_t bfs_diameter = 0;
  for (auto d : oracle::bfs_distances(g.adjacency_lists())) bfs_diameter = std::max<std::uint64_t>(bfs_diameter, d);
  const Subspace line_centre = Subspace::coordinate(g.space().field(), 4, {0});
  const Subspace solid_centre = Subspace::coordinate(g.space().field(), 4, {0, 1, 2});
  t.check(g.size() == 35, "Gamma_2(F_2^4) vertex count");
  t.check(g.edge_count() == 315, "Gamma_2(F_2^4) edge count");
  t.check(g.diameter() == 2 && bfs_diameter == 2, "Gamma_2(F_2^4) diameter");
  t.check(star_size(4, 2, 2) == 7 && star(line_centre).size() == 7, "star size");
  t.check(top_size(2, 2) == 7 && top(solid_centre).size() == 7, "top size");
  return t.outcome("q in {2,3}, n <= 5; Gamma_2(F_2^4): 35 vertices, 315 edges, diameter 2, cliques of 7");
}

Outcome clique_dichotomy(std::uint64_t) {
  Tally t;
  const GrassmannGraph g(Field::of_order(2), 4, 2);
  const auto found = oracle::maximal_cliques(g.adjacency_lists());
  std::set<std::vector<std::size_t>> expected;
  std::size_t stars = 0;
  std::size_t tops = 0;
  auto add = [&](const std::vector<Subspace>& members) {
    std::vector<std::size_t> ids;
    for (const auto& m : members) ids.push_back(g.index_of(m));
    std::sort(ids.begin(), ids.end());
    expected.insert(ids);
  };
  for (const auto& c : Grassmannian(g.space().field(), 4, 1).enumerate()) {
    add(star(c));
    ++stars;
  }
  for (const auto& c : Grassmannian(g.space().field(), 4, 3).enumerate()) {
    add(top(c));
    ++tops;
  }
  const std::set<std::vector<std::size_t>> found_set(found.begin(), found.end());
  t.check(stars == 15 && tops == 15 && expected.size() == 30, "15 stars and 15 tops expected");
  t.check(found.size() == 30 && found_set == expected, "maximal cliques differ from stars and tops");
  return t.outcome(std::to_string(found.size()) + " maximal cliques found");
}

Outcome chow(std::uint64_t) {
  Tally t;
  const GrassmannGraph g(Field::of_order(2), 4, 2);
  const std::uint64_t order = automorphism_group_order(g);
  t.check(order == 2 * oracle::gl_order(2, 4), "automorphism group order " + std::to_string(order));
  t.check(order == 40320, "expected 40320");
  return t.outcome("|Aut| = " + std::to_string(order) + " = 2 * " + std::to_string(oracle::gl_order(2, 4)));
}

Outcome induced_isometry(std::uint64_t seed) {
  Tally t;
  catalog::Rng rng(seed);
  const auto cat = catalog::induced_catalog(rng);
  std::size_t subfield = 0;
  for (const auto& inst : cat) {
    if (!inst.l.sigma().is_surjective()) ++subfield;
    const auto report = verify(induced_map(inst.l, inst.k));
    t.check(report.isometric && report.injective && report.adjacency_forward && report.adjacency_backward,
            inst.name + " not isometric");
  }
  t.check(cat.size() >= 20, "catalog smaller than 20");
  return t.outcome(std::to_string(cat.size()) + " embeddings, " + std::to_string(subfield) + " subfield-semilinear");
}

Outcome roundtrip(std::uint64_t seed) {
  Tally t;
  catalog::Rng rng(seed);
  auto instances = catalog::type_a_instances(rng, 20);
  auto b = catalog::type_b_instances(rng, 20);
  instances.insert(instances.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  for (const auto& inst : instances) {
    try {
      const Decomposition d = decompose(inst.map);
      t.check(d.type == inst.type, inst.name + ": type");
      t.check(d.subspace == *inst.subspace, inst.name + ": subspace");
      t.check(equal_up_to_scalar(d.inner_map, *inst.inner), inst.name + ": inner map");
      t.check(reconstruct(d) == inst.map, inst.name + ": reconstruction");
    } catch (const Error& e) {
      t.check(false, inst.name + ": " + e.what());
    }
  }
  return t.outcome(std::to_string(instances.size()) + " instances at (2,4,2) -> (2,6,3)");
}

Outcome point_dichotomy(std::uint64_t) {
  Tally t;
  const auto points = Grassmannian(Field::of_order(2), 3, 1).enumerate();
  std::size_t sets = 0;
  std::size_t inducible = 0;
  for (std::uint32_t mask = 1; mask < (1u << points.size()); ++mask) {
    if (std::popcount(mask) > 4) continue;
    std::vector<Subspace> set;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (mask & (1u << i)) set.push_back(points[i]);
    }
    ++sets;
    const bool lhs = permutations_inducible(set);
    inducible += lhs;
    t.check(lhs == (is_independent(set) || is_simplex(set)), "point set mask " + std::to_string(mask));
  }
  return t.outcome(std::to_string(sets) + " point sets in PG(2,2), " + std::to_string(inducible) + " inducible");
}

Outcome extension_equivalence(std::uint64_t seed) {
  Tally t;
  catalog::Rng rng(seed);
  const auto cat = catalog::injective_catalog(rng, 100);
  std::size_t embeddings = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const bool via_extension = is_semilinear_embedding_via_extension(cat[i]);
    const bool direct = is_m_embedding(cat[i], cat[i].source_dim());
    embeddings += direct;
    t.check(via_extension == direct, "catalog map #" + std::to_string(i));
  }
  return t.outcome(std::to_string(cat.size()) + " injective maps, " + std::to_string(embeddings) + " embeddings");
}

Outcome strictness(std::uint64_t) {
  Tally t;
  const SemilinearMap l = catalog::strictness_witness();
  const Field gf4 = l.target_field();
  const Vec image = l.apply(Vec{1, 0, 1});
  t.check(image == Vec{gf4.add(1, 2), 2}, "e1 + e3 should map to (1 + w, w)");
  t.check(is_injective(l) && oracle::injective_by_exhaustion(l), "injective");
  t.check(is_m_embedding(l, 2) && oracle::m_embedding_by_subsets(l, 2), "2-embedding");
  t.check(!is_m_embedding(l, 3) && !oracle::m_embedding_by_subsets(l, 3), "not a 3-embedding");
  return t.outcome("GF(2)^3 -> GF(4)^2, rows (1,0),(0,1),(w,w)");
}

std::vector<catalog::Instance> rigidity_catalog(catalog::Rng& rng) {
  auto out = catalog::type_a_instances(rng, 8);
  auto b = catalog::type_b_instances(rng, 8);
  auto bal = catalog::balanced_instances(rng, 2);
  for (auto* src : {&b, &bal}) out.insert(out.end(), std::make_move_iterator(src->begin()), std::make_move_iterator(src->end()));
  out.push_back({"dual isomorphism (2,4,2)", dual_isomorphism(Field::of_order(2), 4, 2), EmbeddingType::B, {}, {}});
  const Field gf2 = Field::of_order(2);
  const Field gf4 = Field::of_order(4);
  SemilinearMap sub = catalog::random_m_embedding(rng, gf2, gf4, 4, 4, 4);
  out.push_back({"GF(2)^4 -> GF(4)^4 induced", induced_map(sub, 2), EmbeddingType::A, {}, sub});
  SemilinearMap frob = catalog::random_m_embedding(rng, gf4, gf4, 4, 5, 4);
  out.push_back({"GF(4)^4 -> GF(4)^5 induced", induced_map(frob, 2), EmbeddingType::A, {}, frob});
  return out;
}

Outcome rigidity(std::uint64_t seed) {
  Tally t;
  catalog::Rng rng(seed);
  const auto cat = rigidity_catalog(rng);
  std::size_t generators = 0;
  for (const auto& inst : cat) {
    try {
      const auto report = check_l_rigidity(inst.map);
      generators += report.checked_generators.size();
      t.check(report.rigid, inst.name + ": " + std::to_string(report.failures.size()) + " generators without extension");
    } catch (const Error& e) {
      t.check(false, inst.name + ": " + e.what());
    }
  }
  return t.outcome(std::to_string(cat.size()) + " embeddings with n = 2k, " + std::to_string(generators) +
                   " generator checks");
}

Outcome duality(std::uint64_t seed) {
  Tally t;
  catalog::Rng rng(seed);
  auto maps = rigidity_catalog(rng);
  for (auto& inst : catalog::induced_catalog(rng)) {
    maps.push_back({inst.name, induced_map(inst.l, inst.k), EmbeddingType::A, {}, inst.l});
  }
  for (const auto& inst : maps) {
    const auto before = verify(inst.map);
    const auto after = verify(dualize_codomain(inst.map));
    const EmbeddingType flipped = before.type == EmbeddingType::A ? EmbeddingType::B : EmbeddingType::A;
    t.check(before.isometric && after.isometric, inst.name + ": isometry");
    t.check(before.type == inst.type && after.type == flipped, inst.name + ": type flip");
  }
  const Field f = Field::of_order(2);
  std::vector<Subspace> all;
  for (std::size_t k = 0; k <= 4; ++k) {
    for (auto& s : Grassmannian(f, 4, k).enumerate()) all.push_back(std::move(s));
  }
  t.check(all.size() == 67, "F_2^4 should have 67 subspaces");
  for (int i = 0; i < 50; ++i) {
    const Matrix u = catalog::random_invertible(rng, f, 4);
    const Matrix uc = contragredient(u);
    for (const auto& s : all) {
      t.check(image(annihilator(s), uc) == annihilator(image(s, u)), "contragredient equivariance");
    }
  }
  return t.outcome(std::to_string(maps.size()) + " embeddings dualised; 50 automorphisms on 67 subspaces");
}

struct Entry {
  Criterion criterion;
  std::function<Outcome(std::uint64_t)> fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{1, "distance formula agrees with BFS", 10}, distance_vs_bfs},
      {{2, "vertex, edge and clique counts", 1}, counts},
      {{3, "maximal cliques are stars and tops", 5}, clique_dichotomy},
      {{4, "automorphism group of Gamma_2(F_2^4)", 60}, chow},
      {{5, "induced maps of (2k)-embeddings are isometric", 60}, induced_isometry},
      {{6, "construct / decompose roundtrip", 120}, roundtrip},
      {{7, "inducible permutations: independent or simplex", 60}, point_dichotomy},
      {{8, "extension criterion agrees with n-embedding test", 120}, extension_equivalence},
      {{9, "2-embedding that is not a 3-embedding", 1}, strictness},
      {{10, "l-rigidity of full-embedding and n = 2k constructions", 300}, rigidity},
      {{11, "duality flips type, contragredient equivariance", 30}, duality},
  };
  return table;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = [] {
    std::vector<Criterion> out;
    for (const auto& e : entries()) out.push_back(e.criterion);
    return out;
  }();
  return list;
}

Result run(int id, std::uint64_t seed) {
  for (const auto& e : entries()) {
    if (e.criterion.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = e.fn(seed);
    } catch (const std::exception& ex) {
      outcome = {false, std::string("exception: ") + ex.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < e.criterion.limit_seconds;
    if (!in_time) outcome.detail += "; over the time limit";
    return {id, e.criterion.name, outcome.passed && in_time, seconds, e.criterion.limit_seconds, outcome.detail};
  }
  throw Error("unknown acceptance criterion " + std::to_string(id));
}

std::vector<Result> run_all(std::uint64_t seed) {
  std::vector<Result> out;
  for (const auto& c : criteria()) out.push_back(run(c.id, seed));
  return out;
}

std::string format(const Result& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + timing +
         "): " + r.detail;
}

}  // namespace grassembed::acceptance
