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

#include "grassembed/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace grassembed::oracle {

std::vector<unsigned> bfs_distances(const AdjacencyLists& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<unsigned> out(n * n, std::numeric_limits<unsigned>::max());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
    const auto s = static_cast<std::size_t>(si);
    unsigned* row = out.data() + s * n;
    std::deque<std::size_t> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto w : adjacency[v]) {
        if (row[w] == std::numeric_limits<unsigned>::max()) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

namespace {

using VertexSet = std::vector<std::size_t>;

class BronKerbosch {
 public:
  explicit BronKerbosch(const AdjacencyLists& adjacency) : adj_(adjacency.size()) {
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
      adj_[v] = adjacency[v];
      std::sort(adj_[v].begin(), adj_[v].end());
    }
  }

  std::vector<VertexSet> run() {
    VertexSet all(adj_.size());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    VertexSet r;
    expand(r, all, {});
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  VertexSet restrict_to(const VertexSet& s, std::size_t v) const {
    VertexSet out;
    std::set_intersection(s.begin(), s.end(), adj_[v].begin(), adj_[v].end(), std::back_inserter(out));
    return out;
  }

  void expand(VertexSet& r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      VertexSet clique = r;
      std::sort(clique.begin(), clique.end());
      out_.push_back(std::move(clique));
      return;
    }
    // pivot with the most neighbours in p
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const VertexSet* s : {&p, &x}) {
      for (auto u : *s) {
        const std::size_t c = restrict_to(p, u).size();
        if (c >= best) {
          best = c;
          pivot = u;
        }
      }
    }
    VertexSet candidates;
    std::set_difference(p.begin(), p.end(), adj_[pivot].begin(), adj_[pivot].end(), std::back_inserter(candidates));
    for (auto v : candidates) {
      r.push_back(v);
      expand(r, restrict_to(p, v), restrict_to(x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
  }

  AdjacencyLists adj_;
  std::vector<VertexSet> out_;
};

std::uint64_t power(std::uint64_t q, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= q;
  return v;
}

// Closure of a set of vector codes under addition and scaling.
std::vector<std::uint32_t> close(const Field& f, std::size_t n, std::vector<std::uint32_t> generators) {
  std::vector<bool> seen(power(f.order(), n), false);
  std::vector<std::uint32_t> span{0};
  seen[0] = true;
  for (auto g : generators) {
    if (seen[g]) continue;
    const Vec gv = decode(f, n, g);
    std::vector<std::uint32_t> next;
    for (auto s : span) {
      const Vec sv = decode(f, n, s);
      for (Elem a = 1; a < f.order(); ++a) {
        Vec t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = f.add(sv[i], f.mul(a, gv[i]));
        const auto c = encode(f, t);
        if (!seen[c]) {
          seen[c] = true;
          next.push_back(c);
        }
      }
    }
    span.insert(span.end(), next.begin(), next.end());
  }
  std::sort(span.begin(), span.end());
  return span;
}

bool independent_by_closure(const Field& f, std::size_t n, const std::vector<std::uint32_t>& vectors) {
  return close(f, n, vectors).size() == power(f.order(), vectors.size());
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const AdjacencyLists& adjacency) {
  return BronKerbosch(adjacency).run();
}

std::uint32_t encode(const Field& f, const Vec& v) {
  std::uint32_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * f.order() + v[i];
  return code;
}

Vec decode(const Field& f, std::size_t n, std::uint32_t code) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = code % f.order();
    code /= f.order();
  }
  return v;
}

std::vector<std::vector<std::uint32_t>> subspaces_by_closure(const Field& f, std::size_t n, std::size_t k) {
  const std::uint64_t total = power(f.order(), n);
  if (total > 4096) throw BudgetError("subspaces_by_closure is limited to 4096 vectors");
  std::set<std::vector<std::uint32_t>> level{{0}};
  for (std::size_t d = 0; d < k; ++d) {
    std::set<std::vector<std::uint32_t>> next;
    for (const auto& s : level) {
      std::vector<bool> covered(total, false);
      for (auto c : s) covered[c] = true;
      for (std::uint32_t v = 1; v < total; ++v) {
        if (covered[v]) continue;
        std::vector<std::uint32_t> gens(s.begin(), s.end());
        gens.push_back(v);
        auto t = close(f, n, std::move(gens));
        // every vector of t spans the same extension together with s
        for (auto c : t) covered[c] = true;
        next.insert(std::move(t));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<std::uint32_t> members(const Subspace& x) {
  std::vector<std::uint32_t> gens;
  for (std::size_t r = 0; r < x.dim(); ++r) gens.push_back(encode(x.field(), x.basis().row_vec(r)));
  return close(x.field(), x.ambient_dim(), gens);
}

bool injective_by_exhaustion(const SemilinearMap& l) {
  const std::uint64_t total = power(l.source_field().order(), l.source_dim());
  for (std::uint64_t c = 1; c < total; ++c) {
    if (is_zero(l.apply(decode(l.source_field(), l.source_dim(), static_cast<std::uint32_t>(c))))) return false;
  }
  return true;
}

bool m_embedding_by_subsets(const SemilinearMap& l, std::size_t m) {
  const Field& src = l.source_field();
  const Field& dst = l.target_field();
  const std::size_t n = l.source_dim();
  const auto total = static_cast<std::uint32_t>(power(src.order(), n));
  std::vector<std::uint32_t> images(total);
  for (std::uint32_t c = 0; c < total; ++c) images[c] = encode(dst, l.apply(decode(src, n, c)));
  std::uint64_t visited = 0;
  std::vector<std::uint32_t> subset;
  bool ok = true;
  auto recurse = [&](auto&& self, std::uint32_t start) -> void {
    if (!ok) return;
    if (subset.size() == m) {
      if (++visited > (1u << 16)) throw BudgetError("m_embedding_by_subsets is limited to 2^16 subsets");
      if (!independent_by_closure(src, n, subset)) return;
      std::vector<std::uint32_t> mapped;
      for (auto s : subset) mapped.push_back(images[s]);
      if (!independent_by_closure(dst, l.target_dim(), mapped)) ok = false;
      return;
    }
    for (std::uint32_t v = start; v < total; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 1);
  return ok;
}

std::vector<Matrix> enumerate_gl(const Field& f, std::size_t n) {
  const std::uint64_t total = power(f.order(), n * n);
  if (total > (1u << 20)) throw BudgetError("enumerate_gl is limited to 2^20 candidate matrices");
  std::vector<Matrix> out;
  for (std::uint64_t c = 0; c < total; ++c) {
    Matrix m(f, n, n);
    std::uint64_t rest = c;
    for (std::size_t i = 0; i < n * n; ++i) {
      m(i / n, i % n) = static_cast<Elem>(rest % f.order());
      rest /= f.order();
    }
    // invertible iff the rows span q^n vectors
    std::vector<std::uint32_t> rows;
    for (std::size_t r = 0; r < n; ++r) rows.push_back(encode(f, m.row_vec(r)));
    if (independent_by_closure(f, n, rows)) out.push_back(std::move(m));
  }
  return out;
}

std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
  std::uint64_t order = 1;
  const std::uint64_t qn = power(q, n);
  for (std::size_t i = 0; i < n; ++i) order *= qn - power(q, i);
  return order;
}

}  // namespace grassembed::oracle
