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
#include <utility>
#include <vector>

#include "grassembed/grassmann.hpp"
#include "grassembed/semilinear.hpp"

// Grassmann-graph embeddings held as vertex tables: verification,
// the type A / type B / balanced constructions, the descent to lower
// grades, decomposition back into a subspace and a semilinear map,
// duality transforms and the l-rigidity check.
//
// Coordinates used throughout:
//   V'/S   coordinates of Quotient(S) (entries at the non-pivot columns);
//   U*     F'^{dim U}, paired with U through the RREF basis of U;
//   U/S    Quotient of S written in the RREF coordinates of U.

namespace grassembed {

enum class EmbeddingType { A, B, NotAnEmbedding };

const char* to_string(EmbeddingType t);

struct VerificationReport {
  bool injective = false;
  // adjacent => images adjacent
  bool adjacency_forward = false;
  // images adjacent => adjacent
  bool adjacency_backward = false;
  bool isometric = false;
  EmbeddingType type = EmbeddingType::NotAnEmbedding;
  // Up to kMaxWitnesses violating domain pairs (i < j), sorted.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses;

  static constexpr std::size_t kMaxWitnesses = 16;
};

// All-pairs check of f. The type is decided by the images of every star
// and every top of the domain: A when stars land in stars and tops in
// tops, B when they swap, NotAnEmbedding otherwise or when injectivity or
// either adjacency direction fails. Throws Error when the table is not
// total or indexes out of range, and BudgetError past 2^16 vertices.
VerificationReport verify(const GrassmannMap& f);
VerificationReport verify_serial(const GrassmannMap& f);

// X -> S + <l(X)>, Gamma_k(V) -> Gamma_{k'}(V') with k' = dim S + k and
// l: V -> V'/S. Requires k <= min{k', n-k, n'-k'} and l a (2k)-embedding
// (NotAnEmbeddingError with a witness otherwise).
GrassmannMap construct_type_A(const Subspace& s, const SemilinearMap& l, std::size_t k);

// X -> the annihilator of <v(X)> inside U, with v: V -> U* and
// k' = dim U - k. Requires k <= n-k and v a (2k)-embedding.
GrassmannMap construct_type_B(const Subspace& u, const SemilinearMap& v, std::size_t k);

enum class BalancedFlavor { Quotient, DualQuotient };

// n = 2k, S inside U with dim U - dim S = 2k, w: V -> U/S (Quotient) or
// V -> (U/S)* (DualQuotient) a semilinear embedding. The image lies in
// [S,U]_{k'} with k' = dim S + k.
GrassmannMap construct_balanced(const Subspace& s, const Subspace& u, const SemilinearMap& w,
                                BalancedFlavor flavor);

// f_{i-1}(X) = intersection of f_i(Y) over the star [X>_i, iterated
// `steps` times. The intersection stops as soon as it reaches the
// expected dimension unless `full_validation` is set, in which case every
// star member is used and every step is verified isometric of type A.
// Throws NotAnEmbeddingError with the star centre when an intersection
// has the wrong dimension.
GrassmannMap descend(const GrassmannMap& f, std::size_t steps, bool full_validation = false);

struct DecomposeOptions {
  // Permit k > n-k by decomposing X -> f(X^0) on the dual domain.
  bool dualize_domain = false;
  bool full_validation = false;
};

struct Decomposition {
  EmbeddingType type;
  // Type A: S (dim k'-k) and l: V -> V'/S.
  // Type B: U (dim k'+k) and v: V -> U*.
  Subspace subspace;
  SemilinearMap inner_map;
  // n = 2k, type A: U = S + <im l> when it has dimension k'+k, making
  // the map an instance of the balanced construction.
  std::optional<Subspace> partner;
  // Grade of the domain of the decomposed map.
  std::size_t grade = 0;
  // The decomposition describes dualize_domain(f) rather than f.
  bool domain_dualized = false;
};

// Recovers the data of the matching constructor. The result is checked by
// rebuilding the table, so a returned Decomposition always reconstructs f
// exactly. Throws Error naming the failing stage when f is not an
// isometric embedding induced by a semilinear map.
Decomposition decompose(const GrassmannMap& f, const DecomposeOptions& options = {});
// construct_type_A or construct_type_B on the decomposition, undoing the
// domain dualisation when there was one: reconstruct(decompose(f)) == f.
GrassmannMap reconstruct(const Decomposition& d);

// X -> f(X)^0, Gamma_k(V) -> Gamma_{n'-k'}(V'*).
GrassmannMap dualize_codomain(const GrassmannMap& f);
// X -> f(X^0), Gamma_{n-k}(V*) -> Gamma_{k'}(V').
GrassmannMap dualize_domain(const GrassmannMap& f);

// (u^{-1})^T, so that contragredient(u) maps S^0 to (S u)^0. Throws Error
// on a singular input.
Matrix contragredient(const Matrix& u);

struct FeasibilityReport {
  // min{k, n-k} <= min{k', n'-k'}
  bool isometric_possible = false;
  // k <= k' and n-k <= n'-k'
  bool type_a_rigid_condition = false;
  // n <= k+k' <= n'
  bool type_b_rigid_condition = false;
  bool field_hom_exists = false;
};

// Throws Error on boundary grades (k not in 2..n-2, likewise k') and on
// orders that are not prime powers.
FeasibilityReport feasibility(std::uint64_t q, std::size_t n, std::size_t k, std::uint64_t q2, std::size_t n2,
                              std::size_t k2);

struct RigidityReport {
  bool rigid = false;
  std::vector<Matrix> checked_generators;
  // Indices into checked_generators with no extension.
  std::vector<std::size_t> failures;
  // Aligned with checked_generators: the extending u' when one exists.
  std::vector<std::optional<Matrix>> extensions;
};

// For every generator u of GL(V) from gl_generators, looks for u' in
// GL(V') with f(X u) = f(X) u' for all X. Type B maps and k > n-k are
// reduced to type A through the duality transforms. On the type A form
// (S, l) a valid u' fixes S and induces on V'/S a linear w with
// w(<l(x)>) = <l(x u)> for every point; w is solved for on <im l> as a
// linear system, and the solution space is searched for an invertible
// element (BudgetError when it has more than `budget` elements). A found
// u' is validated on every vertex.
RigidityReport check_l_rigidity(const GrassmannMap& f, std::uint64_t budget = 1u << 16);

// The extension search for one automorphism u of the source.
std::optional<Matrix> find_extension(const GrassmannMap& f, const Matrix& u, std::uint64_t budget = 1u << 16);

// f(X u) = f(X) u' for every vertex X.
bool extends(const GrassmannMap& f, const Matrix& u, const Matrix& u_prime);

}  // namespace grassembed
