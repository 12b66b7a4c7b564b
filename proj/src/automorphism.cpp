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

// Automorphism group order by individualisation-refinement.
//
// Partitions are ordered lists of cells. Refinement splits each cell by
// the number of neighbours its vertices have in a splitter cell, in a
// fixed positional order, and records a trace of every split. The
// procedure depends only on cell positions, so it commutes with any
// automorphism; two individualised partitions with different traces
// cannot be related by one.
//
// The order is the product of orbit lengths along a base: at each level
// the orbit of the base point inside its cell is found by searching, for
// every candidate, for an automorphism fixing the earlier base points.

#include <cstdint>
#include <vector>

#include "grassembed/error.hpp"
#include "grassembed/grassmann.hpp"

namespace grassembed {

namespace {

using Cells = std::vector<std::vector<std::size_t>>;

class Refiner {
 public:
  explicit Refiner(const std::vector<std::vector<std::size_t>>& adjacency)
      : n_(adjacency.size()), adj_(n_ * n_, 0), lists_(adjacency) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (auto u : adjacency[v]) adj_[v * n_ + u] = 1;
    }
  }

  std::size_t size() const { return n_; }
  bool edge(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }

  // Refines in place; appends the split record to `trace`.
  void refine(Cells& cells, std::vector<std::size_t>& trace) const {
    std::vector<std::size_t> cell_of(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() < 2) continue;
          std::vector<std::pair<std::size_t, std::size_t>> keyed;  // (count, vertex)
          keyed.reserve(cells[c].size());
          for (auto v : cells[c]) {
            std::size_t count = 0;
            for (auto w : cells[s]) count += adj_[v * n_ + w];
            keyed.emplace_back(count, v);
          }
          bool uniform = true;
          for (const auto& kv : keyed) uniform = uniform && kv.first == keyed.front().first;
          if (uniform) continue;
          // stable in the incoming cell order
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          Cells pieces;
          std::size_t last = SIZE_MAX;
          for (const auto& [count, v] : keyed) {
            if (count != last) {
              pieces.emplace_back();
              trace.push_back(count);
              last = count;
            }
            pieces.back().push_back(v);
          }
          trace.push_back(s);
          trace.push_back(c);
          for (const auto& p : pieces) trace.push_back(p.size());
          cells[c] = std::move(pieces.front());
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c) + 1, std::make_move_iterator(pieces.begin() + 1),
                       std::make_move_iterator(pieces.end()));
          changed = true;
        }
      }
    }
  }

  bool is_automorphism(const std::vector<std::size_t>& perm) const {
    for (std::size_t v = 0; v < n_; ++v) {
      for (auto u : lists_[v]) {
        if (!edge(perm[v], perm[u])) return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  const std::vector<std::vector<std::size_t>>& lists_;
};

bool discrete(const Cells& cells) {
  for (const auto& c : cells) {
    if (c.size() > 1) return false;
  }
  return true;
}

std::size_t first_open_cell(const Cells& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1) return i;
  }
  return cells.size();
}

Cells individualize(const Cells& cells, std::size_t cell, std::size_t v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != cell) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<std::size_t> rest;
    for (auto w : cells[i]) {
      if (w != v) rest.push_back(w);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

bool same_shape(const Cells& a, const Cells& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
  }
  return true;
}

// Is there an automorphism carrying the ordered partition `left` onto
// `right` cell by cell? Both are refined and have matching traces.
bool extend(const Refiner& r, const Cells& left, const Cells& right) {
  if (discrete(left)) {
    std::vector<std::size_t> perm(r.size());
    for (std::size_t i = 0; i < left.size(); ++i) perm[left[i][0]] = right[i][0];
    return r.is_automorphism(perm);
  }
  const std::size_t t = first_open_cell(left);
  const std::size_t v = left[t][0];
  std::vector<std::size_t> left_trace;
  Cells l = individualize(left, t, v);
  r.refine(l, left_trace);
  for (auto w : right[t]) {
    std::vector<std::size_t> right_trace;
    Cells rc = individualize(right, t, w);
    r.refine(rc, right_trace);
    if (right_trace != left_trace || !same_shape(l, rc)) continue;
    if (extend(r, l, rc)) return true;
  }
  return false;
}

}  // namespace

std::uint64_t automorphism_group_order(const std::vector<std::vector<std::size_t>>& adjacency,
                                       std::size_t vertex_budget) {
  const std::size_t n = adjacency.size();
  if (n > vertex_budget) {
    throw BudgetError("automorphism search refused: " + std::to_string(n) + " vertices exceeds budget " +
                      std::to_string(vertex_budget));
  }
  if (n == 0) return 1;
  const Refiner refiner(adjacency);
  Cells base(1);
  for (std::size_t v = 0; v < n; ++v) base[0].push_back(v);
  std::vector<std::size_t> scratch;
  refiner.refine(base, scratch);

  std::uint64_t order = 1;
  while (!discrete(base)) {
    const std::size_t t = first_open_cell(base);
    const std::size_t b = base[t][0];
    std::vector<std::size_t> left_trace;
    Cells left = individualize(base, t, b);
    refiner.refine(left, left_trace);
    std::uint64_t orbit = 1;
    for (auto w : base[t]) {
      if (w == b) continue;
      std::vector<std::size_t> right_trace;
      Cells right = individualize(base, t, w);
      refiner.refine(right, right_trace);
      if (right_trace != left_trace || !same_shape(left, right)) continue;
      if (extend(refiner, left, right)) ++orbit;
    }
    if (__builtin_mul_overflow(order, orbit, &order)) throw Error("automorphism group order overflows 64 bits");
    base = std::move(left);
  }
  return order;
}

}  // namespace grassembed
