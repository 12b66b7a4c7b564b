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
#include <span>
#include <vector>

#include "grassembed/error.hpp"
#include "grassembed/grassmann.hpp"

// Semilinear maps F^n -> F'^n' and what they induce on subspaces.
//
// A SemilinearMap carries a field homomorphism sigma: F -> F' and an
// n x n' matrix over F' whose rows are the images of the standard basis:
//   x = (a_1, ..., a_n)  ->  sum_i sigma(a_i) * row_i.

namespace grassembed {

class SemilinearMap {
 public:
  SemilinearMap(FieldHom sigma, Matrix matrix);
  // sigma = identity.
  static SemilinearMap linear(Matrix matrix);

  const FieldHom& sigma() const { return sigma_; }
  const Matrix& matrix() const { return matrix_; }
  const Field& source_field() const { return sigma_.source(); }
  const Field& target_field() const { return sigma_.target(); }
  std::size_t source_dim() const { return matrix_.rows(); }
  std::size_t target_dim() const { return matrix_.cols(); }

  Vec apply(std::span<const Elem> x) const;
  // <l(X)>, the F'-span of the image.
  Subspace image_span(const Subspace& x) const;

  friend bool operator==(const SemilinearMap& a, const SemilinearMap& b) {
    return a.sigma_ == b.sigma_ && a.matrix_ == b.matrix_;
  }

 private:
  FieldHom sigma_;
  Matrix matrix_;
};

// x -> l(x) * m for a matrix m over the target field.
SemilinearMap then_linear(const SemilinearMap& l, const Matrix& m);
// Same sigma and rows equal up to one common nonzero scalar.
bool equal_up_to_scalar(const SemilinearMap& a, const SemilinearMap& b);

// Kernel test through the target viewed as a vector space over the image
// subfield sigma(F): l is injective iff its rows stay independent after
// expanding each entry in a basis of F' over sigma(F).
bool is_injective(const SemilinearMap& l);

// Raised when a map fails an m-embedding requirement; carries an
// m-subspace whose image collapses.
class NotAnEmbeddingError : public Error {
 public:
  NotAnEmbeddingError(const std::string& what, Subspace witness) : Error(what), witness_(std::move(witness)) {}
  const Subspace& witness() const { return witness_; }

 private:
  Subspace witness_;
};

// Whether dim <l(X)> = m for every X in G_m(V). Since <l(X)> is spanned by
// the images of any basis of X, this is the independent-m-subset
// definition checked once per subspace. Throws Error unless 1 <= m <= n;
// m > n' yields false, as does a non-injective l.
bool is_m_embedding(const SemilinearMap& l, std::size_t m);
bool is_m_embedding_serial(const SemilinearMap& l, std::size_t m);
// Smallest canonical index of an m-subspace with a collapsing image.
std::optional<std::uint64_t> m_embedding_failure(const SemilinearMap& l, std::size_t m);
std::optional<std::uint64_t> m_embedding_failure_serial(const SemilinearMap& l, std::size_t m);

// X -> <l(X)>, G_p(V) -> G_p(V'). Throws NotAnEmbeddingError when l is
// not a p-embedding.
GrassmannMap induced_map(const SemilinearMap& l, std::size_t p);

// A map between projective point sets, G_1(F^n) -> G_1(F'^n'), as
// canonical indices.
struct PointMap {
  Grassmannian domain;
  Grassmannian codomain;
  std::vector<std::uint64_t> table;

  friend bool operator==(const PointMap& a, const PointMap& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.table == b.table;
  }
};

// <x> -> <l(x)>; l must be injective.
PointMap point_map(const SemilinearMap& l);

// A semilinear injection inducing g. The gauge is fixed by taking l(e_1)
// to be the normalised representative (leading entry 1) of g(<e_1>);
// sigma is read off the points <e_i + a e_j> of the first pair of basis
// points with independent images, and the remaining scalars solve the
// linear conditions imposed by every point of the domain.
//
// Throws Error when n < 3, when g does not send lines into lines (naming
// the line), or when no semilinear map induces g.
SemilinearMap ftpg_recover(const PointMap& g);

// Points are 1-dimensional subspaces of a common F^n.
bool is_independent(const std::vector<Subspace>& points);
// m+1 points, dependent, every m of them independent.
bool is_simplex(const std::vector<Subspace>& points);

// Whether every permutation of the points is induced by a semilinear
// automorphism of F^n. Throws Error on duplicate points and BudgetError
// beyond 6 points.
bool permutations_inducible(const std::vector<Subspace>& points);

// Some u' in GL(F'^n') with u' o l = l o u, where u is a linear
// automorphism of the source (x -> x * u). u' is pinned down on <im l> by
// l(e_b) -> l(u(e_b)) over a maximal independent subset of the basis
// images, is the identity on the standard complement, and the commutation
// is then checked on every vector of the source. nullopt when none exists.
// Throws BudgetError when the source has more than `vector_budget` vectors.
std::optional<Matrix> gl_extension_exists(const SemilinearMap& l, const Matrix& u,
                                          std::uint64_t vector_budget = 1u << 20);

// Elementary transvections e_i -> e_i + e_j (i != j, lexicographic) then
// diag(primitive, 1, ..., 1). Generates GL(n, F).
std::vector<Matrix> gl_generators(const Field& field, std::size_t n);

// gl_extension_exists on every generator. Extendable automorphisms form a
// subgroup, so this decides extendability of all of GL(V).
bool is_semilinear_embedding_via_extension(const SemilinearMap& l, std::uint64_t vector_budget = 1u << 20);

}  // namespace grassembed
