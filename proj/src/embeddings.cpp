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

#include "grassembed/embeddings.hpp"

#include <algorithm>

namespace grassembed {

const char* to_string(EmbeddingType t) {
  switch (t) {
    case EmbeddingType::A:
      return "A";
    case EmbeddingType::B:
      return "B";
    case EmbeddingType::NotAnEmbedding:
      return "NotAnEmbedding";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kVerifyVertexLimit = 1u << 16;

void check_table(const GrassmannMap& f) {
  if (f.table.size() != f.domain.size()) throw Error("map table is not total on the domain");
  for (auto v : f.table) {
    if (v >= f.codomain.size()) throw Error("map image index " + std::to_string(v) + " out of range");
  }
}

std::vector<Subspace> images_of(const GrassmannMap& f) {
  std::vector<Subspace> out(f.table.size());
  const auto total = static_cast<std::int64_t>(f.table.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) out[static_cast<std::size_t>(i)] = f.image(static_cast<std::uint64_t>(i));
  return out;
}

struct CliqueImage {
  bool in_star = false;
  bool in_top = false;
};

CliqueImage classify_clique(const std::vector<Subspace>& members, const Grassmannian& domain,
                            const std::vector<Subspace>& images, std::size_t k2) {
  Subspace meet = images[domain.index_of(members.front())];
  Subspace join = meet;
  for (std::size_t i = 1; i < members.size(); ++i) {
    const Subspace& y = images[domain.index_of(members[i])];
    meet = intersection(meet, y);
    join = sum(join, y);
  }
  return {meet.dim() + 1 == k2, join.dim() == k2 + 1};
}

EmbeddingType classify(const GrassmannMap& f, const std::vector<Subspace>& images, bool parallel) {
  const std::size_t n = f.domain.ambient_dim();
  const std::size_t k = f.domain.grade();
  const std::size_t k2 = f.codomain.grade();
  if (k == 0 || k >= n) return EmbeddingType::NotAnEmbedding;
  const Field& field = f.domain.field();
  const Grassmannian star_centres(field, n, k - 1);
  const Grassmannian top_centres(field, n, k + 1);
  // stars then tops; flags: star->star, star->top, top->top, top->star
  const auto stars = static_cast<std::int64_t>(star_centres.size());
  const auto total = stars + static_cast<std::int64_t>(top_centres.size());
  bool a_ok = true;
  bool b_ok = true;
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : a_ok, b_ok) if (parallel)
  for (std::int64_t c = 0; c < total; ++c) {
    if (c < stars) {
      const auto members = star(star_centres.at(static_cast<std::uint64_t>(c)));
      const CliqueImage img = classify_clique(members, f.domain, images, k2);
      a_ok = a_ok && img.in_star;
      b_ok = b_ok && img.in_top;
    } else {
      const auto members = top(top_centres.at(static_cast<std::uint64_t>(c - stars)));
      const CliqueImage img = classify_clique(members, f.domain, images, k2);
      a_ok = a_ok && img.in_top;
      b_ok = b_ok && img.in_star;
    }
  }
  if (a_ok) return EmbeddingType::A;
  if (b_ok) return EmbeddingType::B;
  return EmbeddingType::NotAnEmbedding;
}

VerificationReport verify_impl(const GrassmannMap& f, bool parallel) {
  check_table(f);
  const std::uint64_t size = f.domain.size();
  if (size > kVerifyVertexLimit) {
    throw BudgetError("verify is limited to " + std::to_string(kVerifyVertexLimit) + " domain vertices");
  }
  const std::vector<Subspace> domain = f.domain.enumerate();
  const std::vector<Subspace> images = images_of(f);
  const auto total = static_cast<std::int64_t>(size);

  bool injective = true;
  bool forward = true;
  bool backward = true;
  bool isometric = true;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> row_witnesses(size);
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : injective, forward, backward, isometric) if (parallel)
  for (std::int64_t si = 0; si < total; ++si) {
    const auto i = static_cast<std::size_t>(si);
    auto& witnesses = row_witnesses[i];
    for (std::size_t j = i + 1; j < size; ++j) {
      const unsigned d = distance(domain[i], domain[j]);
      const bool same = f.table[i] == f.table[j];
      const unsigned d2 = same ? 0 : distance(images[i], images[j]);
      const bool bad_inj = same;
      const bool bad_fwd = d == 1 && d2 != 1;
      const bool bad_bwd = d2 == 1 && d != 1;
      const bool bad_iso = d != d2;
      injective = injective && !bad_inj;
      forward = forward && !bad_fwd;
      backward = backward && !bad_bwd;
      isometric = isometric && !bad_iso;
      if ((bad_inj || bad_fwd || bad_bwd || bad_iso) && witnesses.size() < VerificationReport::kMaxWitnesses) {
        witnesses.emplace_back(i, j);
      }
    }
  }

  VerificationReport report;
  report.injective = injective;
  report.adjacency_forward = forward;
  report.adjacency_backward = backward;
  report.isometric = isometric;
  for (const auto& row : row_witnesses) {
    for (const auto& w : row) {
      if (report.witnesses.size() == VerificationReport::kMaxWitnesses) break;
      report.witnesses.push_back(w);
    }
  }
  if (injective && forward && backward) report.type = classify(f, images, parallel);
  return report;
}

Subspace in_coordinates_of(const Subspace& u, const Subspace& x) {
  Matrix m(u.field(), 0, u.dim());
  for (std::size_t r = 0; r < x.dim(); ++r) m.append_row(u.coordinates(x.basis().row(r)));
  return Subspace::span(m);
}

void require_embedding(const SemilinearMap& l, std::size_t m, const char* what) {
  const Grassmannian g(l.source_field(), l.source_dim(), m);
  if (m > l.target_dim()) {
    throw Error(std::string(what) + ": target of dimension " + std::to_string(l.target_dim()) +
                " cannot hold a " + std::to_string(m) + "-embedding");
  }
  if (!is_injective(l)) throw NotAnEmbeddingError(std::string(what) + ": map is not injective", g.at(0));
  if (auto bad = m_embedding_failure(l, m)) {
    throw NotAnEmbeddingError(std::string(what) + ": map is not a " + std::to_string(m) + "-embedding",
                              g.at(*bad));
  }
}

template <typename Fn>
GrassmannMap tabulate(Grassmannian domain, Grassmannian codomain, Fn image) {
  GrassmannMap f{std::move(domain), std::move(codomain), {}};
  f.table.resize(f.domain.size());
  const auto total = static_cast<std::int64_t>(f.domain.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    f.table[idx] = f.codomain.index_of(image(f.domain.at(idx)));
  }
  return f;
}

}  // namespace

VerificationReport verify(const GrassmannMap& f) { return verify_impl(f, true); }
VerificationReport verify_serial(const GrassmannMap& f) { return verify_impl(f, false); }

// Constructions -----------------------------------------------------------

GrassmannMap construct_type_A(const Subspace& s, const SemilinearMap& l, std::size_t k) {
  const std::size_t n = l.source_dim();
  const std::size_t n2 = s.ambient_dim();
  const std::size_t k2 = s.dim() + k;
  if (l.target_field() != s.field()) throw Error("construct_type_A: l and S live over different fields");
  if (l.target_dim() != n2 - s.dim()) throw Error("construct_type_A: l must map into V'/S of dimension n' - dim S");
  if (k < 1 || 2 * k > n) throw Error("construct_type_A: needs 1 <= k <= n - k");
  if (k > n2 - k2) throw Error("construct_type_A: needs k <= n' - k'");
  require_embedding(l, 2 * k, "construct_type_A");
  const Quotient quotient(s);
  return tabulate(Grassmannian(l.source_field(), n, k), Grassmannian(s.field(), n2, k2),
                  [&](const Subspace& x) { return quotient.lift(l.image_span(x)); });
}

GrassmannMap construct_type_B(const Subspace& u, const SemilinearMap& v, std::size_t k) {
  const std::size_t n = v.source_dim();
  const std::size_t m = u.dim();
  if (v.target_field() != u.field()) throw Error("construct_type_B: v and U live over different fields");
  if (v.target_dim() != m) throw Error("construct_type_B: v must map into U* of dimension dim U");
  if (k < 1 || 2 * k > n) throw Error("construct_type_B: needs 1 <= k <= n - k");
  if (2 * k > m) throw Error("construct_type_B: needs k' = dim U - k >= k");
  require_embedding(v, 2 * k, "construct_type_B");
  return tabulate(Grassmannian(v.source_field(), n, k), Grassmannian(u.field(), u.ambient_dim(), m - k),
                  [&](const Subspace& x) { return image(annihilator(v.image_span(x)), u.basis()); });
}

GrassmannMap construct_balanced(const Subspace& s, const Subspace& u, const SemilinearMap& w,
                                BalancedFlavor flavor) {
  const std::size_t n = w.source_dim();
  if (n % 2 != 0 || n == 0) throw Error("construct_balanced: needs n = 2k");
  const std::size_t k = n / 2;
  if (s.field() != u.field() || s.ambient_dim() != u.ambient_dim()) {
    throw Error("construct_balanced: S and U are not in the same space");
  }
  if (!u.contains(s)) throw Error("construct_balanced: S is not contained in U");
  if (u.dim() - s.dim() != n) throw Error("construct_balanced: needs dim U - dim S = n");
  if (w.target_field() != u.field() || w.target_dim() != n) {
    throw Error("construct_balanced: w must map into a space of dimension dim U/S");
  }
  require_embedding(w, n, "construct_balanced");
  const Quotient quotient(in_coordinates_of(u, s));
  return tabulate(Grassmannian(w.source_field(), n, k), Grassmannian(u.field(), u.ambient_dim(), s.dim() + k),
                  [&](const Subspace& x) {
                    Subspace y = w.image_span(x);
                    if (flavor == BalancedFlavor::DualQuotient) y = annihilator(y);
                    return image(quotient.lift(y), u.basis());
                  });
}

// Descent and decomposition -----------------------------------------------

GrassmannMap descend(const GrassmannMap& f, std::size_t steps, bool full_validation) {
  check_table(f);
  const std::size_t k = f.domain.grade();
  if (steps >= k) throw Error("descend: steps must be below the grade");
  GrassmannMap current = f;
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t i = current.domain.grade();
    if (current.codomain.grade() == 0) throw Error("descend: codomain grade reached zero");
    const std::size_t target = current.codomain.grade() - 1;
    GrassmannMap next{Grassmannian(f.domain.field(), f.domain.ambient_dim(), i - 1),
                      Grassmannian(f.codomain.field(), f.codomain.ambient_dim(), target),
                      {}};
    next.table.resize(next.domain.size());
    for (std::uint64_t t = 0; t < next.domain.size(); ++t) {
      const Subspace x = next.domain.at(t);
      const auto members = star(x);
      Subspace meet = current.image(current.domain.index_of(members.front()));
      for (std::size_t m = 1; m < members.size(); ++m) {
        if (!full_validation && meet.dim() == target) break;
        meet = intersection(meet, current.image(current.domain.index_of(members[m])));
      }
      if (meet.dim() != target) {
        throw NotAnEmbeddingError("descend: the images of the star at grade " + std::to_string(i) + " meet in dimension " +
                                      std::to_string(meet.dim()) + ", expected " + std::to_string(target),
                                  x);
      }
      next.table[t] = next.codomain.index_of(meet);
    }
    if (full_validation && i - 1 >= 1) {
      const auto report = verify(next);
      if (!report.isometric || (i - 1 > 1 && report.type != EmbeddingType::A)) {
        throw Error("descend: the map at grade " + std::to_string(i - 1) + " is not an isometric type A embedding");
      }
    }
    current = std::move(next);
  }
  return current;
}

namespace {

struct TypeAData {
  Subspace s;
  SemilinearMap l;
};

TypeAData type_a_data(const GrassmannMap& f, bool full_validation) {
  const std::size_t k = f.domain.grade();
  const std::size_t k2 = f.codomain.grade();
  if (k2 < k) throw Error("decompose (descend stage): k' < k");
  const GrassmannMap f1 = k > 1 ? descend(f, k - 1, full_validation) : f;

  Subspace s = f1.image(0);
  for (std::uint64_t p = 1; p < f1.domain.size(); ++p) s = intersection(s, f1.image(p));
  if (s.dim() != k2 - k) {
    throw Error("decompose (S stage): the images of all points meet in dimension " + std::to_string(s.dim()) +
                ", expected " + std::to_string(k2 - k));
  }

  const Quotient quotient(s);
  PointMap points{f1.domain, Grassmannian(f.codomain.field(), quotient.dim(), 1), {}};
  points.table.resize(points.domain.size());
  for (std::uint64_t p = 0; p < points.domain.size(); ++p) {
    const Subspace projected = quotient.project(f1.image(p));
    if (projected.dim() != 1) throw Error("decompose (point stage): a point image does not cover S by one dimension");
    points.table[p] = points.codomain.index_of(projected);
  }
  try {
    return {s, ftpg_recover(points)};
  } catch (const BudgetError&) {
    throw;
  } catch (const Error& e) {
    throw Error(std::string("decompose (semilinear recovery stage): ") + e.what());
  }
}

void require_reconstruction(const GrassmannMap& rebuilt, const GrassmannMap& f) {
  if (rebuilt.table != f.table) throw Error("decompose (reconstruction stage): the recovered data does not rebuild f");
}

GrassmannMap rebuild(EmbeddingType type, const Subspace& subspace, const SemilinearMap& inner, std::size_t k) {
  try {
    return type == EmbeddingType::A ? construct_type_A(subspace, inner, k) : construct_type_B(subspace, inner, k);
  } catch (const NotAnEmbeddingError& e) {
    throw Error(std::string("decompose (reconstruction stage): ") + e.what());
  }
}

}  // namespace

Decomposition decompose(const GrassmannMap& f, const DecomposeOptions& options) {
  check_table(f);
  const std::size_t n = f.domain.ambient_dim();
  const std::size_t k = f.domain.grade();
  if (2 * k > n) {
    if (!options.dualize_domain) {
      throw Error("decompose: k > n - k; enable domain dualisation to decompose X -> f(X^0)");
    }
    Decomposition d = decompose(dualize_domain(f), {false, options.full_validation});
    d.domain_dualized = true;
    return d;
  }
  const VerificationReport report = verify(f);
  if (!report.isometric) throw Error("decompose: the map is not an isometric embedding");

  if (report.type == EmbeddingType::A) {
    TypeAData data = type_a_data(f, options.full_validation);
    require_reconstruction(rebuild(EmbeddingType::A, data.s, data.l, k), f);
    std::optional<Subspace> partner;
    if (n == 2 * k) {
      const Quotient quotient(data.s);
      Subspace u = quotient.lift(data.l.image_span(Subspace::whole(f.domain.field(), n)));
      if (u.dim() == f.codomain.grade() + k) partner = std::move(u);
    }
    return Decomposition{EmbeddingType::A, std::move(data.s), std::move(data.l), std::move(partner), k, false};
  }
  if (report.type == EmbeddingType::B) {
    TypeAData data = type_a_data(dualize_codomain(f), options.full_validation);
    Subspace u = annihilator(data.s);
    const Quotient quotient(data.s);
    // pairing of U (RREF basis) with V'/S' (quotient coordinates)
    Matrix pairing_t(u.field(), quotient.dim(), u.dim());
    for (std::size_t t = 0; t < quotient.dim(); ++t) {
      for (std::size_t j = 0; j < u.dim(); ++j) pairing_t(t, j) = u.basis()(j, quotient.complement_columns()[t]);
    }
    SemilinearMap v = then_linear(data.l, pairing_t);
    require_reconstruction(rebuild(EmbeddingType::B, u, v, k), f);
    return Decomposition{EmbeddingType::B, std::move(u), std::move(v), std::nullopt, k, false};
  }
  throw Error("decompose (classification stage): stars and tops are not mapped consistently");
}

GrassmannMap reconstruct(const Decomposition& d) {
  GrassmannMap f = rebuild(d.type, d.subspace, d.inner_map, d.grade);
  return d.domain_dualized ? dualize_domain(f) : f;
}

// Duality -------------------------------------------------------------------

GrassmannMap dualize_codomain(const GrassmannMap& f) {
  check_table(f);
  const Grassmannian& c = f.codomain;
  GrassmannMap g{f.domain, Grassmannian(c.field(), c.ambient_dim(), c.ambient_dim() - c.grade()), {}};
  g.table.resize(f.table.size());
  const auto total = static_cast<std::int64_t>(f.table.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    g.table[idx] = g.codomain.index_of(annihilator(f.image(idx)));
  }
  return g;
}

GrassmannMap dualize_domain(const GrassmannMap& f) {
  check_table(f);
  const Grassmannian& d = f.domain;
  GrassmannMap g{Grassmannian(d.field(), d.ambient_dim(), d.ambient_dim() - d.grade()), f.codomain, {}};
  g.table.resize(g.domain.size());
  const auto total = static_cast<std::int64_t>(g.domain.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    g.table[idx] = f.table[d.index_of(annihilator(g.domain.at(idx)))];
  }
  return g;
}

Matrix contragredient(const Matrix& u) {
  const auto inv = inverse(u);
  if (!inv) throw Error("contragredient: matrix is singular");
  return inv->transpose();
}

// Feasibility ---------------------------------------------------------------

FeasibilityReport feasibility(std::uint64_t q, std::size_t n, std::size_t k, std::uint64_t q2, std::size_t n2,
                              std::size_t k2) {
  auto check_grade = [](std::size_t n, std::size_t k, const char* which) {
    if (k < 2 || k + 2 > n) {
      throw Error(std::string("feasibility: ") + which + " grade must satisfy 1 < k < n - 1");
    }
  };
  check_grade(n, k, "domain");
  check_grade(n2, k2, "codomain");
  const Field f = Field::of_order(q);
  const Field f2 = Field::of_order(q2);
  FeasibilityReport r;
  r.isometric_possible = std::min(k, n - k) <= std::min(k2, n2 - k2);
  r.type_a_rigid_condition = k <= k2 && n - k <= n2 - k2;
  r.type_b_rigid_condition = n <= k + k2 && k + k2 <= n2;
  r.field_hom_exists = f.characteristic() == f2.characteristic() && f2.degree() % f.degree() == 0;
  return r;
}

}  // namespace grassembed
