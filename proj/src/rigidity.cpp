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

#include <algorithm>
#include <memory>

#include "grassembed/embeddings.hpp"

namespace grassembed {

namespace {

// f reduced to type A on a domain with k <= n - k, plus the way back.
class ExtensionSearch {
 public:
  ExtensionSearch(const GrassmannMap& f, std::uint64_t budget) : f_(f), budget_(budget) {
    GrassmannMap g = f;
    const std::size_t n = f.domain.ambient_dim();
    if (2 * f.domain.grade() > n) {
      g = dualize_domain(g);
      domain_dualized_ = true;
    }
    const VerificationReport report = verify(g);
    if (!report.isometric) throw Error("check_l_rigidity: the map is not an isometric embedding");
    if (report.type == EmbeddingType::B) {
      g = dualize_codomain(g);
      codomain_dualized_ = true;
    } else if (report.type != EmbeddingType::A) {
      throw Error("check_l_rigidity: the embedding type could not be determined");
    }
    Decomposition d = decompose(g);
    if (d.type != EmbeddingType::A) throw Error("check_l_rigidity: dualised map did not decompose as type A");
    s_ = d.subspace;
    l_ = std::make_unique<SemilinearMap>(d.inner_map);
    quotient_ = Quotient(s_);

    // W = <im l> with the basis l(e_b) over a greedy independent subset
    const Field& target = l_->target_field();
    z_ = Matrix(target, 0, quotient_.dim());
    for (std::size_t i = 0; i < l_->source_dim(); ++i) {
      Matrix trial = z_;
      trial.append_row(l_->matrix().row(i));
      if (rank(trial) == trial.rows()) z_ = std::move(trial);
    }
    points_ = Grassmannian(l_->source_field(), l_->source_dim(), 1).enumerate();
  }

  std::optional<Matrix> find(const Matrix& u) const {
    const Matrix u_eff = domain_dualized_ ? contragredient(u) : u;
    auto v = find_type_a(u_eff);
    if (!v) return std::nullopt;
    Matrix u_prime = codomain_dualized_ ? contragredient(*v) : *v;
    if (!extends(f_, u, u_prime)) return std::nullopt;
    return u_prime;
  }

 private:
  // w on W with w(l(x)) in <l(x u)> for every point x, as a d x d matrix in
  // the basis z_; then lifted to V'.
  std::optional<Matrix> find_type_a(const Matrix& u) const {
    const Field& target = l_->target_field();
    const std::size_t d = z_.rows();
    Matrix constraints(target, 0, d * d);
    for (const auto& p : points_) {
      const Vec x = p.basis().row_vec(0);
      const auto a = solve_left(z_, l_->apply(x));
      const auto b = solve_left(z_, l_->apply(vec_times(x, u)));
      if (!a || !b) throw Error("check_l_rigidity: image outside the span of the basis images");
      const Subspace ann = annihilator(Subspace::span(target, d, {*b}));
      for (std::size_t r = 0; r < ann.dim(); ++r) {
        Vec row(d * d, 0);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) row[i * d + j] = target.mul((*a)[i], ann.basis()(r, j));
        }
        constraints.append_row(row);
      }
    }
    const Matrix kernel = null_space(constraints);
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
      if (combos > budget_ / target.order()) {
        throw BudgetError("check_l_rigidity: solution space of dimension " + std::to_string(kernel.rows()) +
                          " exceeds the budget of " + std::to_string(budget_));
      }
      combos *= target.order();
    }
    for (std::uint64_t t = 1; t < combos; ++t) {
      Vec coeffs(kernel.rows());
      std::uint64_t rest = t;
      for (auto& c : coeffs) {
        c = static_cast<Elem>(rest % target.order());
        rest /= target.order();
      }
      const Vec flat = vec_times(coeffs, kernel);
      Matrix w(target, d, d);
      std::copy(flat.begin(), flat.end(), w.row(0).begin());
      if (!inverse(w)) continue;
      return lift(w);
    }
    return std::nullopt;
  }

  // u' fixing S, acting on V'/S as w on W and as the identity on the
  // standard complement of W.
  Matrix lift(const Matrix& w) const {
    const Field& target = l_->target_field();
    const std::size_t dq = quotient_.dim();
    Matrix from = z_;
    Matrix to = multiply(w, z_);
    const Matrix complement = Quotient(Subspace::span(z_)).complement_basis();
    for (std::size_t r = 0; r < complement.rows(); ++r) {
      from.append_row(complement.row(r));
      to.append_row(complement.row(r));
    }
    const Matrix on_quotient = multiply(*inverse(from), to);

    const std::size_t n2 = s_.ambient_dim();
    Matrix source(target, 0, n2);
    Matrix image_rows(target, 0, n2);
    for (std::size_t r = 0; r < s_.dim(); ++r) {
      source.append_row(s_.basis().row(r));
      image_rows.append_row(s_.basis().row(r));
    }
    for (std::size_t c = 0; c < dq; ++c) {
      Vec e(n2, 0);
      e[quotient_.complement_columns()[c]] = 1;
      source.append_row(e);
      image_rows.append_row(quotient_.lift(on_quotient.row(c)));
    }
    return multiply(*inverse(source), image_rows);
  }

  const GrassmannMap& f_;
  std::uint64_t budget_;
  bool domain_dualized_ = false;
  bool codomain_dualized_ = false;
  Subspace s_;
  std::unique_ptr<SemilinearMap> l_;
  Quotient quotient_;
  Matrix z_;
  std::vector<Subspace> points_;
};

}  // namespace

bool extends(const GrassmannMap& f, const Matrix& u, const Matrix& u_prime) {
  const auto total = static_cast<std::int64_t>(f.domain.size());
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
  for (std::int64_t i = 0; i < total; ++i) {
    if (!ok) continue;
    const auto idx = static_cast<std::uint64_t>(i);
    const Subspace moved = image(f.domain.at(idx), u);
    const Subspace expected = f.image(f.domain.index_of(moved));
    ok = ok && image(f.image(idx), u_prime) == expected;
  }
  return ok;
}

std::optional<Matrix> find_extension(const GrassmannMap& f, const Matrix& u, std::uint64_t budget) {
  return ExtensionSearch(f, budget).find(u);
}

RigidityReport check_l_rigidity(const GrassmannMap& f, std::uint64_t budget) {
  const ExtensionSearch search(f, budget);
  RigidityReport report;
  report.checked_generators = gl_generators(f.domain.field(), f.domain.ambient_dim());
  for (std::size_t i = 0; i < report.checked_generators.size(); ++i) {
    auto ext = search.find(report.checked_generators[i]);
    if (!ext) report.failures.push_back(i);
    report.extensions.push_back(std::move(ext));
  }
  report.rigid = report.failures.empty();
  return report;
}

}  // namespace grassembed
