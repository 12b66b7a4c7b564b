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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grassembed/embeddings.hpp"

// Seeded random instances used by the tests, the acceptance suite and the
// CLI. Draws use the raw output of std::mt19937_64 reduced modulo the
// range, so catalogs are identical on every platform for a given seed.

namespace grassembed::catalog {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20260118;

Elem random_element(Rng& rng, const Field& f);
Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, const Field& f, std::size_t n);
// Uniform over G_k(F^n).
Subspace random_subspace(Rng& rng, const Field& f, std::size_t n, std::size_t k);
SemilinearMap random_semilinear(Rng& rng, const Field& source, const Field& target, std::size_t n, std::size_t n2);
// Rejection sampling; Error after `attempts` draws.
SemilinearMap random_m_embedding(Rng& rng, const Field& source, const Field& target, std::size_t n, std::size_t n2,
                                 std::size_t m, std::size_t attempts = 4096);

// GF(2)^3 -> GF(4)^2 with rows (1,0), (0,1), (w,w): injective, a
// 2-embedding and not a 3-embedding.
SemilinearMap strictness_witness();

struct Instance {
  std::string name;
  GrassmannMap map;
  // Type the construction must report.
  EmbeddingType type = EmbeddingType::A;
  // Data the map was built from, when it came from a constructor.
  std::optional<Subspace> subspace;
  std::optional<SemilinearMap> inner;
};

// Random (S, l) with l: F_2^4 -> F_2^6/S, giving (2,4,2) -> (2,6,3).
std::vector<Instance> type_a_instances(Rng& rng, std::size_t count);
// Random (U, v) with dim U = 5 in F_2^6, giving (2,4,2) -> (2,6,3).
std::vector<Instance> type_b_instances(Rng& rng, std::size_t count);
// Both flavours of the n = 2k construction at (2,4,2) -> (2,6,3).
std::vector<Instance> balanced_instances(Rng& rng, std::size_t count_per_flavor);

struct InducedInstance {
  std::string name;
  SemilinearMap l;
  std::size_t k = 2;
};

// At least 20 (2k)-embeddings at k = 2: linear maps over GF(2), subfield
// maps GF(2) -> GF(4), GF(2) -> GF(32) and GF(3) -> GF(9), and
// Frobenius-twisted maps over GF(4).
std::vector<InducedInstance> induced_catalog(Rng& rng);

// Injective semilinear maps with n <= 3 over GF(2) and GF(4) sources and
// GF(2) / GF(4) targets, mixing embeddings and non-embeddings.
std::vector<SemilinearMap> injective_catalog(Rng& rng, std::size_t count);

}  // namespace grassembed::catalog
