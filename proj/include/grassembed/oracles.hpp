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
#include <vector>

#include "grassembed/semilinear.hpp"

// Brute-force references that share no code path with the library's
// canonical forms: breadth-first search, Bron-Kerbosch, closure of vector
// sets under the field operations, and exhaustion over vectors and
// matrices.

namespace grassembed::oracle {

using AdjacencyLists = std::vector<std::vector<std::size_t>>;

// Row-major all-pairs BFS distances; unreachable pairs are UINT32_MAX.
std::vector<unsigned> bfs_distances(const AdjacencyLists& adjacency);

// Every maximal clique, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> maximal_cliques(const AdjacencyLists& adjacency);

// Vectors of F^n as integers: base-q digits, first coordinate least
// significant.
std::uint32_t encode(const Field& f, const Vec& v);
Vec decode(const Field& f, std::size_t n, std::uint32_t code);

// All k-subspaces of F^n, each as the sorted list of its member codes,
// found by closing sets of vectors under addition and scaling. Throws
// BudgetError when q^n exceeds 4096.
std::vector<std::vector<std::uint32_t>> subspaces_by_closure(const Field& f, std::size_t n, std::size_t k);
// Sorted member codes of a Subspace, by expanding all combinations.
std::vector<std::uint32_t> members(const Subspace& x);

// q^n - 1 nonzero vectors tested one by one.
bool injective_by_exhaustion(const SemilinearMap& l);
// Every linearly independent m-subset of vectors maps to an independent
// set, over all m-subsets of nonzero vectors. Independence is decided by
// counting the members of the span. Throws BudgetError past 2^16 subsets.
bool m_embedding_by_subsets(const SemilinearMap& l, std::size_t m);

// Every invertible n x n matrix, by exhaustion. Throws BudgetError beyond
// 2^20 candidate matrices.
std::vector<Matrix> enumerate_gl(const Field& f, std::size_t n);
// prod_{i<n} (q^n - q^i)
std::uint64_t gl_order(std::uint64_t q, std::size_t n);

}  // namespace grassembed::oracle
