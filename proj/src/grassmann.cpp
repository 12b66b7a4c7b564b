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

#include "grassembed/grassmann.hpp"

#include <algorithm>
#include <bit>

#include "grassembed/error.hpp"

namespace grassembed {

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) return 0;
  if (q < 2) throw Error("gaussian_binomial needs q >= 2");
  auto qpow_minus_one = [&](unsigned m) -> unsigned __int128 {
    unsigned __int128 v = 1;
    for (unsigned i = 0; i < m; ++i) {
      v *= q;
      if (v > (static_cast<unsigned __int128>(1) << 100)) throw Error("gaussian binomial overflows 64 bits");
    }
    return v - 1;
  };
  // After step i the running value is [n choose i+1]_q, an integer.
  unsigned __int128 result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result = result * qpow_minus_one(n - i);
    result /= qpow_minus_one(i + 1);
    if (result > UINT64_MAX) throw Error("gaussian binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

// Grassmannian ------------------------------------------------------------

Grassmannian::Grassmannian(Field field, std::size_t n, std::size_t k)
    : field_(std::move(field)), n_(n), k_(k) {
  if (k > n) throw Error("grade exceeds ambient dimension");
  if (n > 62) throw Error("ambient dimension too large for canonical indexing");
  const std::uint64_t q = field_.order();

  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    PivotBlock b;
    b.pivots = subset;
    for (auto p : subset) b.mirrored_mask |= std::uint64_t{1} << (n - 1 - p);
    for (std::size_t r = 0; r < k; ++r) {
      // non-pivot columns right of this row's pivot
      b.free_count += (n - 1 - subset[r]) - (k - 1 - r);
    }
    blocks_.push_back(std::move(b));
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const PivotBlock& a, const PivotBlock& b) { return a.mirrored_mask < b.mirrored_mask; });

  unsigned __int128 offset = 0;
  for (auto& b : blocks_) {
    b.offset = static_cast<std::uint64_t>(offset);
    unsigned __int128 block = 1;
    for (std::size_t i = 0; i < b.free_count; ++i) {
      block *= q;
      if (block > UINT64_MAX) throw Error("Grassmannian too large to index");
    }
    offset += block;
    if (offset > UINT64_MAX) throw Error("Grassmannian too large to index");
  }
  size_ = static_cast<std::uint64_t>(offset);
}

std::uint64_t Grassmannian::index_of(const Subspace& x) const {
  if (x.ambient_dim() != n_ || x.dim() != k_ || x.field() != field_) {
    throw Error("subspace does not belong to this Grassmannian");
  }
  std::uint64_t mask = 0;
  for (auto p : x.pivots()) mask |= std::uint64_t{1} << (n_ - 1 - p);
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), mask,
                             [](const PivotBlock& b, std::uint64_t m) { return b.mirrored_mask < m; });
  const std::uint64_t q = field_.order();
  std::uint64_t value = 0;
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < k_; ++r) {
    next_pivot = r + 1;
    for (std::size_t j = it->pivots[r] + 1; j < n_; ++j) {
      if (next_pivot < k_ && it->pivots[next_pivot] == j) {
        ++next_pivot;
        continue;
      }
      value = value * q + x.basis()(r, j);
    }
  }
  return it->offset + value;
}

Subspace Grassmannian::at(std::uint64_t index) const {
  if (index >= size_) throw Error("Grassmannian index out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const PivotBlock& b) { return i < b.offset; });
  --it;
  std::uint64_t value = index - it->offset;
  const std::uint64_t q = field_.order();
  Matrix m(field_, k_, n_);
  // free entries, filled least significant first (last position first)
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < k_; ++r) {
    m(r, it->pivots[r]) = 1;
    std::size_t next_pivot = r + 1;
    for (std::size_t j = it->pivots[r] + 1; j < n_; ++j) {
      if (next_pivot < k_ && it->pivots[next_pivot] == j) {
        ++next_pivot;
        continue;
      }
      positions.emplace_back(r, j);
    }
  }
  for (std::size_t i = positions.size(); i-- > 0;) {
    m(positions[i].first, positions[i].second) = static_cast<Elem>(value % q);
    value /= q;
  }
  return Subspace::span(m);
}

std::vector<Subspace> Grassmannian::enumerate(std::uint64_t limit) const {
  if (size_ > limit) throw BudgetError("Grassmannian has " + std::to_string(size_) + " elements, over the limit");
  std::vector<Subspace> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

// Incidence -----------------------------------------------------------

namespace {
void check_same_grade(const Subspace& x, const Subspace& y) {
  if (x.dim() != y.dim()) throw Error("subspaces of different grade");
  if (x.ambient_dim() != y.ambient_dim() || x.field() != y.field()) {
    throw Error("subspaces live in different ambient spaces");
  }
}
}  // namespace

bool adjacent(const Subspace& x, const Subspace& y) {
  check_same_grade(x, y);
  return dim_sum(x, y) == x.dim() + 1;
}

unsigned distance(const Subspace& x, const Subspace& y) {
  check_same_grade(x, y);
  return static_cast<unsigned>(dim_sum(x, y) - x.dim());
}

std::vector<Subspace> subspaces_of(const Subspace& w, std::size_t d) {
  if (d > w.dim()) return {};
  const Grassmannian g(w.field(), w.dim(), d);
  std::vector<Subspace> out;
  out.reserve(g.size());
  for (std::uint64_t i = 0; i < g.size(); ++i) {
    out.push_back(Subspace::span(multiply(g.at(i).basis(), w.basis())));
  }
  return out;
}

std::vector<Subspace> subspaces_containing(const Subspace& s, std::size_t d) {
  if (d < s.dim() || d > s.ambient_dim()) return {};
  const Quotient quotient(s);
  const Grassmannian g(s.field(), quotient.dim(), d - s.dim());
  std::vector<Subspace> out;
  out.reserve(g.size());
  for (std::uint64_t i = 0; i < g.size(); ++i) out.push_back(quotient.lift(g.at(i)));
  return out;
}

std::vector<Subspace> line(const Subspace& s, const Subspace& u) {
  if (u.dim() != s.dim() + 2) throw Error("line needs dim U = dim S + 2");
  if (!u.contains(s)) throw Error("line needs S contained in U");
  const Quotient quotient(s);
  std::vector<Subspace> out;
  for (const auto& point : subspaces_of(quotient.project(u), 1)) out.push_back(quotient.lift(point));
  return out;
}

std::vector<Subspace> star(const Subspace& s) {
  if (s.dim() + 1 > s.ambient_dim()) throw Error("star centre has no room above it");
  return subspaces_containing(s, s.dim() + 1);
}

std::vector<Subspace> top(const Subspace& u) {
  if (u.dim() == 0) throw Error("top centre must be nonzero");
  return subspaces_of(u, u.dim() - 1);
}

std::uint64_t star_size(std::size_t n, std::size_t k, std::uint64_t q) {
  return gaussian_binomial(static_cast<unsigned>(n - k + 1), 1, q);
}

std::uint64_t top_size(std::size_t k, std::uint64_t q) { return gaussian_binomial(static_cast<unsigned>(k + 1), 1, q); }

std::pair<CliqueDescriptor, CliqueDescriptor> maximal_cliques_containing(const Subspace& x,
                                                                         const Subspace& y) {
  if (!adjacent(x, y)) throw Error("maximal_cliques_containing needs adjacent subspaces");
  return {CliqueDescriptor{CliqueKind::Star, intersection(x, y)}, CliqueDescriptor{CliqueKind::Top, sum(x, y)}};
}

GrassmannMap dual_isomorphism(const Field& field, std::size_t n, std::size_t k) {
  GrassmannMap f{Grassmannian(field, n, k), Grassmannian(field, n, n - k), {}};
  f.table.resize(f.domain.size());
  for (std::uint64_t i = 0; i < f.domain.size(); ++i) {
    f.table[i] = f.codomain.index_of(annihilator(f.domain.at(i)));
  }
  return f;
}

// GrassmannGraph --------------------------------------------------------

GrassmannGraph::GrassmannGraph(Field field, std::size_t n, std::size_t k)
    : space_(std::move(field), n, k), vertices_(space_.enumerate()) {
  const std::size_t count = vertices_.size();
  if (count > kAdjacencyCacheLimit) return;
  words_ = (count + 63) / 64;
  adjacency_.assign(count * words_, 0);
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t si = 0; si < total; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && grassembed::adjacent(vertices_[i], vertices_[j])) {
        adjacency_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
}

bool GrassmannGraph::adjacent(std::size_t i, std::size_t j) const {
  if (!adjacency_.empty()) return (adjacency_[i * words_ + j / 64] >> (j % 64)) & 1u;
  return i != j && grassembed::adjacent(vertices_[i], vertices_[j]);
}

unsigned GrassmannGraph::distance(std::size_t i, std::size_t j) const {
  return grassembed::distance(vertices_[i], vertices_[j]);
}

std::vector<std::size_t> GrassmannGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<std::size_t>> GrassmannGraph::adjacency_lists() const {
  std::vector<std::vector<std::size_t>> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = neighbors(i);
  return out;
}

std::uint64_t GrassmannGraph::edge_count() const {
  std::uint64_t twice = 0;
  if (!adjacency_.empty()) {
    for (auto w : adjacency_) twice += static_cast<std::uint64_t>(std::popcount(w));
  } else {
    for (std::size_t i = 0; i < size(); ++i) twice += neighbors(i).size();
  }
  return twice / 2;
}

unsigned GrassmannGraph::diameter() const {
  return static_cast<unsigned>(std::min(space_.grade(), space_.ambient_dim() - space_.grade()));
}

std::vector<unsigned> distance_matrix_serial(const GrassmannGraph& g) {
  const std::size_t n = g.size();
  std::vector<unsigned> d(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = g.distance(i, j);
    }
  }
  return d;
}

std::vector<unsigned> distance_matrix(const GrassmannGraph& g) {
  const std::size_t n = g.size();
  std::vector<unsigned> d(n * n, 0);
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t si = 0; si < total; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = g.distance(i, j);
    }
  }
  return d;
}

std::uint64_t automorphism_group_order(const GrassmannGraph& g, std::size_t vertex_budget) {
  if (g.size() > vertex_budget) {
    throw BudgetError("automorphism search refused: " + std::to_string(g.size()) + " vertices exceeds budget " +
                      std::to_string(vertex_budget));
  }
  return automorphism_group_order(g.adjacency_lists(), vertex_budget);
}

}  // namespace grassembed
