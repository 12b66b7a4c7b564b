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

#include "grassembed/catalog.hpp"

namespace grassembed::catalog {

Elem random_element(Rng& rng, const Field& f) { return static_cast<Elem>(rng() % f.order()); }

Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(rng, f);
  }
  return m;
}

Matrix random_invertible(Rng& rng, const Field& f, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, f, n, n);
    if (rank(m) == n) return m;
  }
}

Subspace random_subspace(Rng& rng, const Field& f, std::size_t n, std::size_t k) {
  const Grassmannian g(f, n, k);
  return g.at(rng() % g.size());
}

SemilinearMap random_semilinear(Rng& rng, const Field& source, const Field& target, std::size_t n, std::size_t n2) {
  const auto homs = hom_enumerate(source, target);
  if (homs.empty()) throw Error("no field homomorphism " + source.header() + " -> " + target.header());
  return SemilinearMap(homs[rng() % homs.size()], random_matrix(rng, target, n, n2));
}

SemilinearMap random_m_embedding(Rng& rng, const Field& source, const Field& target, std::size_t n, std::size_t n2,
                                 std::size_t m, std::size_t attempts) {
  for (std::size_t i = 0; i < attempts; ++i) {
    SemilinearMap l = random_semilinear(rng, source, target, n, n2);
    if (is_m_embedding(l, m)) return l;
  }
  throw Error("no " + std::to_string(m) + "-embedding found in " + std::to_string(attempts) + " draws");
}

SemilinearMap strictness_witness() {
  const Field gf2 = Field::of_order(2);
  const Field gf4 = Field::of_order(4);
  const Elem w = 2;  // the class of x
  return SemilinearMap(hom_enumerate(gf2, gf4).front(), Matrix::from_rows(gf4, 2, {{1, 0}, {0, 1}, {w, w}}));
}

std::vector<Instance> type_a_instances(Rng& rng, std::size_t count) {
  const Field f = Field::of_order(2);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    Subspace s = random_subspace(rng, f, 6, 1);
    SemilinearMap l = random_m_embedding(rng, f, f, 4, 5, 4);
    GrassmannMap map = construct_type_A(s, l, 2);
    out.push_back({"type-A #" + std::to_string(i), std::move(map), EmbeddingType::A, std::move(s), std::move(l)});
  }
  return out;
}

std::vector<Instance> type_b_instances(Rng& rng, std::size_t count) {
  const Field f = Field::of_order(2);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    Subspace u = random_subspace(rng, f, 6, 5);
    SemilinearMap v = random_m_embedding(rng, f, f, 4, 5, 4);
    GrassmannMap map = construct_type_B(u, v, 2);
    out.push_back({"type-B #" + std::to_string(i), std::move(map), EmbeddingType::B, std::move(u), std::move(v)});
  }
  return out;
}

std::vector<Instance> balanced_instances(Rng& rng, std::size_t count_per_flavor) {
  const Field f = Field::of_order(2);
  std::vector<Instance> out;
  for (auto flavor : {BalancedFlavor::Quotient, BalancedFlavor::DualQuotient}) {
    for (std::size_t i = 0; i < count_per_flavor; ++i) {
      const Subspace u = random_subspace(rng, f, 6, 5);
      // S: a random point of U
      const Vec coords = [&] {
        while (true) {
          Vec c = random_matrix(rng, f, 1, 5).row_vec(0);
          if (!is_zero(c)) return c;
        }
      }();
      const Subspace s = Subspace::span(f, 6, {u.from_coordinates(coords)});
      SemilinearMap w = random_m_embedding(rng, f, f, 4, 4, 4);
      GrassmannMap map = construct_balanced(s, u, w, flavor);
      const bool quotient = flavor == BalancedFlavor::Quotient;
      out.push_back({std::string(quotient ? "balanced-quotient #" : "balanced-dual #") + std::to_string(i),
                     std::move(map), quotient ? EmbeddingType::A : EmbeddingType::B, std::nullopt, std::move(w)});
    }
  }
  return out;
}

std::vector<InducedInstance> induced_catalog(Rng& rng) {
  const Field gf2 = Field::of_order(2);
  const Field gf3 = Field::of_order(3);
  const Field gf4 = Field::of_order(4);
  const Field gf9 = Field::of_order(9);
  const Field gf32 = Field::of_order(32);
  std::vector<InducedInstance> out;
  auto add = [&](const std::string& name, const Field& a, const Field& b, std::size_t n, std::size_t n2,
                 std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back({name + " #" + std::to_string(i), random_m_embedding(rng, a, b, n, n2, 4), 2});
    }
  };
  add("GF(2)^4 -> GF(2)^5", gf2, gf2, 4, 5, 6);
  add("GF(2)^4 -> GF(2)^4", gf2, gf2, 4, 4, 2);
  add("GF(2)^4 -> GF(4)^4", gf2, gf4, 4, 4, 6);
  // a 4-embedding of F_2^5 into F_{2^r}^4 needs r >= 5
  add("GF(2)^5 -> GF(32)^4", gf2, gf32, 5, 4, 2);
  add("GF(4)^4 -> GF(4)^5", gf4, gf4, 4, 5, 2);
  add("GF(3)^4 -> GF(9)^4", gf3, gf9, 4, 4, 2);
  return out;
}

std::vector<SemilinearMap> injective_catalog(Rng& rng, std::size_t count) {
  const Field gf2 = Field::of_order(2);
  const Field gf4 = Field::of_order(4);
  struct Shape {
    Field source;
    Field target;
    std::size_t n;
    std::size_t n2;
  };
  const std::vector<Shape> shapes = {
      {gf2, gf2, 2, 2}, {gf2, gf2, 3, 3}, {gf2, gf2, 3, 4}, {gf2, gf4, 2, 1}, {gf2, gf4, 2, 2},
      {gf2, gf4, 3, 2}, {gf2, gf4, 3, 3}, {gf4, gf4, 2, 2}, {gf4, gf4, 2, 3}, {gf4, gf4, 3, 3},
  };
  std::vector<SemilinearMap> out;
  std::size_t shape = 0;
  while (out.size() < count) {
    const Shape& s = shapes[shape++ % shapes.size()];
    while (true) {
      SemilinearMap l = random_semilinear(rng, s.source, s.target, s.n, s.n2);
      if (is_injective(l)) {
        out.push_back(std::move(l));
        break;
      }
    }
  }
  return out;
}

}  // namespace grassembed::catalog
