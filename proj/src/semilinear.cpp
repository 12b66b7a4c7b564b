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

#include "grassembed/semilinear.hpp"

#include <algorithm>
#include <numeric>

namespace grassembed {

namespace {

// The vector of F^n whose coordinates are the base-q digits of `index`,
// first coordinate least significant.
Vec vector_at(std::uint64_t q, std::size_t n, std::uint64_t index) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return v;
}

std::uint64_t checked_power(std::uint64_t q, std::size_t n, std::uint64_t budget, const char* what) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / q) throw BudgetError(std::string(what) + " exceeds the budget of " + std::to_string(budget));
    total *= q;
  }
  return total;
}

// Coordinates of F' over the subfield sigma(F), pulled back to F.
struct SubfieldCoordinates {
  std::size_t degree = 1;
  std::vector<Vec> coords;  // indexed by element of F'

  explicit SubfieldCoordinates(const FieldHom& sigma) {
    const Field& big = sigma.target();
    const Field& small = sigma.source();
    std::vector<Elem> basis;
    std::vector<bool> in_span(big.order(), false);
    std::vector<Elem> span{0};
    in_span[0] = true;
    while (span.size() < big.order()) {
      Elem y = 0;
      while (in_span[y]) ++y;
      basis.push_back(y);
      std::vector<Elem> next;
      for (Elem s : span) {
        for (Elem a = 0; a < small.order(); ++a) {
          const Elem v = big.add(s, big.mul(sigma(a), y));
          if (!in_span[v]) {
            in_span[v] = true;
            next.push_back(v);
          }
        }
      }
      span.insert(span.end(), next.begin(), next.end());
    }
    degree = basis.size();
    coords.assign(big.order(), Vec(degree, 0));
    const std::uint64_t tuples = big.order();  // |F|^degree
    for (std::uint64_t t = 0; t < tuples; ++t) {
      const Vec a = vector_at(small.order(), degree, t);
      Elem y = 0;
      for (std::size_t i = 0; i < degree; ++i) y = big.add(y, big.mul(sigma(a[i]), basis[i]));
      coords[y] = a;
    }
  }
};

bool independent_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  return rank(Matrix::from_rows(f, cols, rows)) == rows.size();
}

}  // namespace

// SemilinearMap ---------------------------------------------------------

SemilinearMap::SemilinearMap(FieldHom sigma, Matrix matrix) : sigma_(std::move(sigma)), matrix_(std::move(matrix)) {
  if (matrix_.field() != sigma_.target()) throw Error("semilinear map matrix must be over the target field");
}

SemilinearMap SemilinearMap::linear(Matrix matrix) {
  FieldHom id = FieldHom::identity(matrix.field());
  return SemilinearMap(std::move(id), std::move(matrix));
}

Vec SemilinearMap::apply(std::span<const Elem> x) const {
  if (x.size() != source_dim()) throw Error("vector length does not match the source dimension");
  const Field& f = target_field();
  Vec out(target_dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Elem s = sigma_(x[i]);
    if (s == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(s, matrix_(i, j)));
  }
  return out;
}

Subspace SemilinearMap::image_span(const Subspace& x) const {
  if (x.ambient_dim() != source_dim() || x.field() != source_field()) {
    throw Error("subspace is not in the source of this map");
  }
  Matrix m(target_field(), 0, target_dim());
  for (std::size_t r = 0; r < x.dim(); ++r) m.append_row(apply(x.basis().row(r)));
  return Subspace::span(m);
}

SemilinearMap then_linear(const SemilinearMap& l, const Matrix& m) {
  return SemilinearMap(l.sigma(), multiply(l.matrix(), m));
}

bool equal_up_to_scalar(const SemilinearMap& a, const SemilinearMap& b) {
  if (!(a.sigma() == b.sigma())) return false;
  if (a.matrix().rows() != b.matrix().rows() || a.matrix().cols() != b.matrix().cols()) return false;
  const Field& f = a.target_field();
  const auto& da = a.matrix().data();
  const auto& db = b.matrix().data();
  std::optional<Elem> ratio;
  for (std::size_t i = 0; i < da.size(); ++i) {
    if ((da[i] == 0) != (db[i] == 0)) return false;
    if (da[i] == 0) continue;
    const Elem r = f.div(db[i], da[i]);
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

bool is_injective(const SemilinearMap& l) {
  if (l.source_dim() == 0) return true;
  if (l.sigma().is_surjective()) return rank(l.matrix()) == l.source_dim();
  const SubfieldCoordinates sub(l.sigma());
  Matrix expanded(l.source_field(), l.source_dim(), l.target_dim() * sub.degree);
  for (std::size_t i = 0; i < l.source_dim(); ++i) {
    for (std::size_t j = 0; j < l.target_dim(); ++j) {
      const Vec& c = sub.coords[l.matrix()(i, j)];
      for (std::size_t t = 0; t < sub.degree; ++t) expanded(i, j * sub.degree + t) = c[t];
    }
  }
  return rank(expanded) == l.source_dim();
}

// m-embeddings ------------------------------------------------------------

namespace {
void check_m(const SemilinearMap& l, std::size_t m) {
  if (m < 1 || m > l.source_dim()) {
    throw Error("m = " + std::to_string(m) + " is out of range for a source of dimension " +
                std::to_string(l.source_dim()));
  }
}
}  // namespace

std::optional<std::uint64_t> m_embedding_failure_serial(const SemilinearMap& l, std::size_t m) {
  check_m(l, m);
  const Grassmannian g(l.source_field(), l.source_dim(), m);
  for (std::uint64_t i = 0; i < g.size(); ++i) {
    if (l.image_span(g.at(i)).dim() != m) return i;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> m_embedding_failure(const SemilinearMap& l, std::size_t m) {
  check_m(l, m);
  const Grassmannian g(l.source_field(), l.source_dim(), m);
  const auto total = static_cast<std::int64_t>(g.size());
  std::int64_t first = total;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
  for (std::int64_t i = 0; i < total; ++i) {
    if (i >= first) continue;
    if (l.image_span(g.at(static_cast<std::uint64_t>(i))).dim() != m) first = std::min(first, i);
  }
  if (first == total) return std::nullopt;
  return static_cast<std::uint64_t>(first);
}

bool is_m_embedding(const SemilinearMap& l, std::size_t m) {
  check_m(l, m);
  if (m > l.target_dim() || !is_injective(l)) return false;
  return !m_embedding_failure(l, m).has_value();
}

bool is_m_embedding_serial(const SemilinearMap& l, std::size_t m) {
  check_m(l, m);
  if (m > l.target_dim() || !is_injective(l)) return false;
  return !m_embedding_failure_serial(l, m).has_value();
}

GrassmannMap induced_map(const SemilinearMap& l, std::size_t p) {
  check_m(l, p);
  const Grassmannian domain(l.source_field(), l.source_dim(), p);
  if (p > l.target_dim()) {
    throw NotAnEmbeddingError("target too small for a " + std::to_string(p) + "-embedding", domain.at(0));
  }
  if (!is_injective(l)) throw NotAnEmbeddingError("map is not injective", domain.at(0));
  if (auto bad = m_embedding_failure(l, p)) {
    throw NotAnEmbeddingError("map is not a " + std::to_string(p) + "-embedding", domain.at(*bad));
  }
  GrassmannMap f{domain, Grassmannian(l.target_field(), l.target_dim(), p), {}};
  f.table.resize(domain.size());
  const auto total = static_cast<std::int64_t>(domain.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    f.table[idx] = f.codomain.index_of(l.image_span(domain.at(idx)));
  }
  return f;
}

PointMap point_map(const SemilinearMap& l) {
  PointMap g{Grassmannian(l.source_field(), l.source_dim(), 1), Grassmannian(l.target_field(), l.target_dim(), 1), {}};
  g.table.resize(g.domain.size());
  for (std::uint64_t i = 0; i < g.domain.size(); ++i) {
    const Subspace image = l.image_span(g.domain.at(i));
    if (image.dim() != 1) throw Error("point_map needs an injective semilinear map");
    g.table[i] = g.codomain.index_of(image);
  }
  return g;
}

// Fundamental theorem, constructively -----------------------------------

namespace {

class FtpgSolver {
 public:
  explicit FtpgSolver(const PointMap& g)
      : g_(g), src_(g.domain.field()), dst_(g.codomain.field()), n_(g.domain.ambient_dim()), n2_(g.codomain.ambient_dim()) {}

  Vec image_rep(std::uint64_t point) const { return g_.codomain.at(g_.table[point]).basis().row_vec(0); }

  std::uint64_t index(const Vec& x) const { return g_.domain.index_of(Subspace::span(src_, n_, {x})); }

  Vec unit(std::size_t i) const {
    Vec e(n_, 0);
    e[i] = 1;
    return e;
  }

  void check_lines() const {
    const Grassmannian lines(src_, n_, 2);
    for (std::uint64_t li = 0; li < lines.size(); ++li) {
      Matrix images(dst_, 0, n2_);
      for (const auto& p : subspaces_of(lines.at(li), 1)) images.append_row(image_rep(index(p.basis().row_vec(0))));
      if (rank(images) > 2) {
        throw Error("point map does not send line " + std::to_string(li) + " of the domain into a line");
      }
    }
  }

  // sigma from the points <e_i + a e_j>, with y_i and y_j independent.
  FieldHom read_sigma(std::size_t i, std::size_t j, const std::vector<Vec>& y) const {
    const Matrix pair = Matrix::from_rows(dst_, n2_, {y[i], y[j]});
    auto coefficients = [&](Elem a) {
      Vec x = unit(i);
      x[j] = a;
      const auto c = solve_left(pair, image_rep(index(x)));
      if (!c || (*c)[0] == 0 || (*c)[1] == 0) {
        throw Error("no semilinear map induces this point map (points on the line through the images of e_" +
                    std::to_string(i + 1) + ", e_" + std::to_string(j + 1) + " are inconsistent)");
      }
      return *c;
    };
    const Vec c1 = coefficients(1);
    const Elem ratio = dst_.div(c1[1], c1[0]);
    std::vector<Elem> table(src_.order(), 0);
    for (Elem a = 1; a < src_.order(); ++a) {
      const Vec c = coefficients(a);
      table[a] = dst_.div(c[1], dst_.mul(c[0], ratio));
    }
    for (const auto& h : hom_enumerate(src_, dst_)) {
      if (h.table() == table) return h;
    }
    throw Error("no semilinear map induces this point map (the scalar action is not a field homomorphism)");
  }

  // The scalars c with l(e_i) = c_i y_i, c_1 = 1, for a fixed sigma.
  std::optional<SemilinearMap> solve(const FieldHom& sigma, const std::vector<Vec>& y) const {
    Matrix constraints(dst_, 0, n_);
    for (std::uint64_t p = 0; p < g_.domain.size(); ++p) {
      const Vec x = g_.domain.at(p).basis().row_vec(0);
      const Subspace ann = annihilator(Subspace::span(dst_, n2_, {image_rep(p)}));
      for (std::size_t r = 0; r < ann.dim(); ++r) {
        Vec row(n_);
        for (std::size_t i = 0; i < n_; ++i) row[i] = dst_.mul(sigma(x[i]), dot(dst_, ann.basis().row(r), y[i]));
        constraints.append_row(row);
      }
    }
    const Matrix kernel = null_space(constraints);
    if (kernel.rows() == 0) return std::nullopt;
    const std::uint64_t combos = checked_power(dst_.order(), kernel.rows(), 1u << 20, "scalar gauge search");
    for (std::uint64_t t = 1; t < combos; ++t) {
      const Vec c = vec_times(vector_at(dst_.order(), kernel.rows(), t), kernel);
      if (c[0] != 1 || std::any_of(c.begin(), c.end(), [](Elem v) { return v == 0; })) continue;
      Matrix m(dst_, 0, n2_);
      for (std::size_t i = 0; i < n_; ++i) m.append_row(vec_scale(dst_, c[i], y[i]));
      SemilinearMap l(sigma, std::move(m));
      if (induces(l)) return l;
    }
    return std::nullopt;
  }

  bool induces(const SemilinearMap& l) const {
    if (!is_injective(l)) return false;
    for (std::uint64_t p = 0; p < g_.domain.size(); ++p) {
      const Subspace image = l.image_span(g_.domain.at(p));
      if (image.dim() != 1 || g_.codomain.index_of(image) != g_.table[p]) return false;
    }
    return true;
  }

  SemilinearMap run() const {
    check_lines();
    std::vector<Vec> y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[i] = image_rep(index(unit(i)));

    std::vector<FieldHom> candidates;
    bool found_pair = false;
    for (std::size_t i = 0; i < n_ && !found_pair; ++i) {
      for (std::size_t j = i + 1; j < n_ && !found_pair; ++j) {
        if (independent_rows(dst_, n2_, {y[i], y[j]})) {
          candidates.push_back(read_sigma(i, j, y));
          found_pair = true;
        }
      }
    }
    // every basis point has the same image: no pair to read sigma from
    if (!found_pair) candidates = hom_enumerate(src_, dst_);
    for (const auto& sigma : candidates) {
      if (auto l = solve(sigma, y)) return *l;
    }
    throw Error("no semilinear map induces this point map");
  }

 private:
  const PointMap& g_;
  Field src_;
  Field dst_;
  std::size_t n_;
  std::size_t n2_;
};

}  // namespace

SemilinearMap ftpg_recover(const PointMap& g) {
  if (g.domain.grade() != 1 || g.codomain.grade() != 1) throw Error("ftpg_recover needs a map between point sets");
  if (g.domain.ambient_dim() < 3) {
    throw Error("ftpg_recover refuses domains of dimension < 3: a single line does not determine sigma");
  }
  if (g.table.size() != g.domain.size()) throw Error("point map table is not total");
  for (auto v : g.table) {
    if (v >= g.codomain.size()) throw Error("point map image index out of range");
  }
  return FtpgSolver(g).run();
}

// Point sets ------------------------------------------------------------

namespace {
Matrix representatives(const std::vector<Subspace>& points) {
  if (points.empty()) return {};
  Matrix m(points.front().field(), 0, points.front().ambient_dim());
  for (const auto& p : points) {
    if (p.dim() != 1) throw Error("projective points must be 1-dimensional subspaces");
    m.append_row(p.basis().row(0));
  }
  return m;
}

void check_distinct(const std::vector<Subspace>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw Error("point set contains a duplicate");
    }
  }
}
}  // namespace

bool is_independent(const std::vector<Subspace>& points) {
  if (points.empty()) return true;
  check_distinct(points);
  return rank(representatives(points)) == points.size();
}

bool is_simplex(const std::vector<Subspace>& points) {
  if (points.size() < 2 || is_independent(points)) return false;
  for (std::size_t skip = 0; skip < points.size(); ++skip) {
    std::vector<Subspace> rest;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != skip) rest.push_back(points[i]);
    }
    if (!is_independent(rest)) return false;
  }
  return true;
}

namespace {

// Is there a linear A with z_i A in <x_{perm(i)}> and A invertible?
bool linear_solution_exists(const Field& f, std::size_t n, const std::vector<Vec>& z, const std::vector<Vec>& x,
                            const std::vector<std::size_t>& perm) {
  const std::size_t m = z.size();
  std::vector<std::size_t> base;
  Matrix base_rows(f, 0, n);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix trial = base_rows;
    trial.append_row(z[i]);
    if (rank(trial) == trial.rows()) {
      base.push_back(i);
      base_rows = std::move(trial);
    }
  }
  std::vector<Vec> targets;
  for (auto b : base) targets.push_back(x[perm[b]]);
  if (!independent_rows(f, n, targets)) return false;

  // unknowns lambda_0..lambda_{m-1}; for each dependent j:
  //   lambda_j x_{perm j} - sum_b a_jb lambda_b x_{perm b} = 0
  Matrix constraints(f, 0, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (std::find(base.begin(), base.end(), j) != base.end()) continue;
    const Vec a = *solve_left(base_rows, z[j]);
    for (std::size_t coord = 0; coord < n; ++coord) {
      Vec row(m, 0);
      row[j] = x[perm[j]][coord];
      for (std::size_t t = 0; t < base.size(); ++t) {
        row[base[t]] = f.sub(row[base[t]], f.mul(a[t], x[perm[base[t]]][coord]));
      }
      constraints.append_row(row);
    }
  }
  if (constraints.rows() == 0) return true;
  const Matrix kernel = null_space(constraints);
  const std::uint64_t combos = checked_power(f.order(), kernel.rows(), 1u << 20, "permutation scalar search");
  for (std::uint64_t t = 1; t < combos; ++t) {
    const Vec lambda = vec_times(vector_at(f.order(), kernel.rows(), t), kernel);
    if (std::none_of(lambda.begin(), lambda.end(), [](Elem v) { return v == 0; })) return true;
  }
  return false;
}

}  // namespace

bool permutations_inducible(const std::vector<Subspace>& points) {
  if (points.size() > 6) throw BudgetError("permutations_inducible is limited to 6 points");
  if (points.size() < 2) return true;
  check_distinct(points);
  const Field& f = points.front().field();
  const std::size_t n = points.front().ambient_dim();
  const Matrix reps = representatives(points);
  std::vector<Vec> x;
  for (std::size_t i = 0; i < reps.rows(); ++i) x.push_back(reps.row_vec(i));
  const auto autos = automorphisms(f);

  std::vector<std::size_t> perm(points.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool induced = false;
    for (const auto& sigma : autos) {
      std::vector<Vec> z;
      for (const auto& v : x) {
        Vec t(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) t[i] = sigma(v[i]);
        z.push_back(std::move(t));
      }
      if (linear_solution_exists(f, n, z, x, perm)) {
        induced = true;
        break;
      }
    }
    if (!induced) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

// Extension of linear automorphisms through l ----------------------------

std::optional<Matrix> gl_extension_exists(const SemilinearMap& l, const Matrix& u, std::uint64_t vector_budget) {
  const std::size_t n = l.source_dim();
  const std::size_t n2 = l.target_dim();
  const Field& src = l.source_field();
  const Field& dst = l.target_field();
  if (u.rows() != n || u.cols() != n || u.field() != src) throw Error("u must be an n x n matrix over the source field");
  if (!inverse(u)) throw Error("u is not invertible");
  const std::uint64_t total = checked_power(src.order(), n, vector_budget, "source space");

  std::vector<Vec> base_images;
  std::vector<Vec> moved_images;
  for (std::size_t i = 0; i < n; ++i) {
    Vec y = l.matrix().row_vec(i);
    std::vector<Vec> trial = base_images;
    trial.push_back(y);
    if (independent_rows(dst, n2, trial)) {
      base_images = std::move(trial);
      moved_images.push_back(l.apply(u.row(i)));
    }
  }
  if (!independent_rows(dst, n2, moved_images)) return std::nullopt;

  const Quotient complement(Subspace::span(dst, n2, base_images));
  Matrix from = Matrix::from_rows(dst, n2, base_images);
  Matrix to = Matrix::from_rows(dst, n2, moved_images);
  const Matrix extra = complement.complement_basis();
  for (std::size_t r = 0; r < extra.rows(); ++r) {
    from.append_row(extra.row(r));
    to.append_row(extra.row(r));
  }
  const auto from_inv = inverse(from);
  const Matrix candidate = multiply(*from_inv, to);
  if (!inverse(candidate)) return std::nullopt;

  for (std::uint64_t t = 0; t < total; ++t) {
    const Vec x = vector_at(src.order(), n, t);
    if (vec_times(l.apply(x), candidate) != l.apply(vec_times(x, u))) return std::nullopt;
  }
  return candidate;
}

std::vector<Matrix> gl_generators(const Field& field, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix t = Matrix::identity(field, n);
      t(i, j) = 1;
      out.push_back(std::move(t));
    }
  }
  if (n > 0) {
    Matrix d = Matrix::identity(field, n);
    d(0, 0) = field.primitive();
    out.push_back(std::move(d));
  }
  return out;
}

bool is_semilinear_embedding_via_extension(const SemilinearMap& l, std::uint64_t vector_budget) {
  checked_power(l.source_field().order(), l.source_dim(), vector_budget, "source space");
  const auto gens = gl_generators(l.source_field(), l.source_dim());
  const auto total = static_cast<std::int64_t>(gens.size());
  bool all = true;
#pragma omp parallel for reduction(&& : all)
  for (std::int64_t i = 0; i < total; ++i) {
    all = all && gl_extension_exists(l, gens[static_cast<std::size_t>(i)], vector_budget).has_value();
  }
  return all;
}

}  // namespace grassembed
