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
#include <utility>
#include <vector>

#include "grassembed/linalg.hpp"

// Grassmannians G_k(F_q^n), the Grassmann graph on them, and the
// incidence structures (lines, stars, tops) of the Grassmann space.

namespace grassembed {

// Number of k-dimensional subspaces of F_q^n (0 when k > n). Throws Error
// if the count does not fit in 64 bits.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

// The set G_k(F^n) with its canonical order: pivot sets in colexicographic
// order of the mirrored column indices {n-1-p} (so span{e_{n-k+1},...,e_n}
// comes first), then the free RREF entries, read row by row, as a base-q
// number. Indices are computed by ranking, never by lookup tables, so
// large Grassmannians can be indexed without being enumerated.
class Grassmannian {
 public:
  Grassmannian() = default;
  Grassmannian(Field field, std::size_t n, std::size_t k);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t grade() const { return k_; }
  std::uint64_t size() const { return size_; }

  // Throws Error when x has the wrong dimension or ambient space.
  std::uint64_t index_of(const Subspace& x) const;
  Subspace at(std::uint64_t index) const;
  // Every element in canonical order. Throws BudgetError past `limit`.
  std::vector<Subspace> enumerate(std::uint64_t limit = 1u << 22) const;

  friend bool operator==(const Grassmannian& a, const Grassmannian& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  struct PivotBlock {
    std::uint64_t mirrored_mask = 0;
    std::vector<std::size_t> pivots;
    std::size_t free_count = 0;
    std::uint64_t offset = 0;
  };

  Field field_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::uint64_t size_ = 0;
  std::vector<PivotBlock> blocks_;  // sorted by mirrored_mask
};

// Adjacency: same grade, intersection of codimension one.
bool adjacent(const Subspace& x, const Subspace& y);
// k - dim(X cap Y). Throws Error on grade or ambient mismatch.
unsigned distance(const Subspace& x, const Subspace& y);

// All d-subspaces of W, in the canonical order of G_d(F^{dim W}).
std::vector<Subspace> subspaces_of(const Subspace& w, std::size_t d);
// All d-subspaces containing S, in the canonical order of G_{d-dim S}(V/S).
std::vector<Subspace> subspaces_containing(const Subspace& s, std::size_t d);

// [S,U]_k with k = dim S + 1: the q+1 subspaces between S and U.
// Requires S inside U and dim U = dim S + 2.
std::vector<Subspace> line(const Subspace& s, const Subspace& u);
// [S>_k with k = dim S + 1.
std::vector<Subspace> star(const Subspace& s);
// <U]_k with k = dim U - 1.
std::vector<Subspace> top(const Subspace& u);

enum class CliqueKind { Star, Top };

struct CliqueDescriptor {
  CliqueKind kind = CliqueKind::Star;
  Subspace center;  // dim k-1 for a star, k+1 for a top

  std::vector<Subspace> members() const {
    return kind == CliqueKind::Star ? star(center) : top(center);
  }
  friend bool operator==(const CliqueDescriptor& a, const CliqueDescriptor& b) {
    return a.kind == b.kind && a.center == b.center;
  }
};

std::uint64_t star_size(std::size_t n, std::size_t k, std::uint64_t q);
std::uint64_t top_size(std::size_t k, std::uint64_t q);

// The star centred at X cap Y and the top centred at X + Y. Throws Error
// when X and Y are not adjacent.
std::pair<CliqueDescriptor, CliqueDescriptor> maximal_cliques_containing(const Subspace& x,
                                                                         const Subspace& y);

// A total map G_k(V) -> G_k'(V') as a table of canonical indices.
struct GrassmannMap {
  Grassmannian domain;
  Grassmannian codomain;
  std::vector<std::uint64_t> table;

  Subspace image(std::uint64_t i) const { return codomain.at(table[i]); }
  friend bool operator==(const GrassmannMap& a, const GrassmannMap& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.table == b.table;
  }
};

// X -> X^0, from G_k(F^n) to G_{n-k}(F^n) (the dual space under the
// dot-product pairing).
GrassmannMap dual_isomorphism(const Field& field, std::size_t n, std::size_t k);

// The Grassmann graph with its vertices materialised. Adjacency is a
// cached bitset up to kAdjacencyCacheLimit vertices and computed from the
// RREF bases beyond that.
class GrassmannGraph {
 public:
  static constexpr std::size_t kAdjacencyCacheLimit = 4096;

  GrassmannGraph(Field field, std::size_t n, std::size_t k);

  const Grassmannian& space() const { return space_; }
  std::size_t size() const { return vertices_.size(); }
  const Subspace& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Subspace>& vertices() const { return vertices_; }
  std::size_t index_of(const Subspace& x) const { return static_cast<std::size_t>(space_.index_of(x)); }

  bool adjacent(std::size_t i, std::size_t j) const;
  unsigned distance(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::vector<std::vector<std::size_t>> adjacency_lists() const;
  std::uint64_t edge_count() const;
  // min{k, n-k}
  unsigned diameter() const;

 private:
  Grassmannian space_;
  std::vector<Subspace> vertices_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;  // empty when not cached
};

// Row-major all-pairs distance matrix from the distance formula.
std::vector<unsigned> distance_matrix(const GrassmannGraph& g);
std::vector<unsigned> distance_matrix_serial(const GrassmannGraph& g);

// Order of the full combinatorial automorphism group, by individualisation
// and refinement. Throws BudgetError when the graph has more than
// `vertex_budget` vertices.
std::uint64_t automorphism_group_order(const GrassmannGraph& g, std::size_t vertex_budget = 200);
std::uint64_t automorphism_group_order(const std::vector<std::vector<std::size_t>>& adjacency,
                                       std::size_t vertex_budget = 200);

}  // namespace grassembed
