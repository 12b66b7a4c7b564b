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

#include "grassembed/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "grassembed/error.hpp"

namespace grassembed {

// Matrix ----------------------------------------------------------------

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw Error("row length does not match matrix width");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
}

bool operator<(const Matrix& a, const Matrix& b) {
  return std::tie(a.rows_, a.cols_, a.data_) < std::tie(b.rows_, b.cols_, b.data_);
}

// Elimination -----------------------------------------------------------

namespace {

RrefResult rref_gf2(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c) & 1u) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }

  RrefResult out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows && !(bits[pivot * words + w] & mask)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(bits.begin() + pivot * words, bits.begin() + (pivot + 1) * words,
                       bits.begin() + rank * words);
    }
    const std::uint64_t* prow = bits.data() + rank * words;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint64_t* row = bits.data() + r * words;
      if (row[w] & mask) {
        for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
      }
    }
    out.pivots.push_back(c);
    ++rank;
  }

  out.rank = rank;
  out.reduced = Matrix(m.field(), rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out.reduced(r, c) = (bits[r * words + c / 64] >> (c % 64)) & 1u;
    }
  }
  return out;
}

}  // namespace

RrefResult rref_generic(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RrefResult out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(rank, k));
    }
    const Elem s = f.inv(a(rank, c));
    for (std::size_t k = c; k < cols; ++k) a(rank, k) = f.mul(a(rank, k), s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Elem factor = a(r, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) a(r, k) = f.sub(a(r, k), f.mul(factor, a(rank, k)));
    }
    out.pivots.push_back(c);
    ++rank;
  }
  out.rank = rank;
  out.reduced = Matrix(f, rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.reduced(r, c) = a(r, c);
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  if (m.field().order() == 2) return rref_gf2(m);
  return rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimensions do not match for product");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  }
  return inv;
}

Matrix null_space(const Matrix& m) {
  const Field& f = m.field();
  const RrefResult red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    Vec y(cols, 0);
    y[j] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) y[red.pivots[r]] = f.neg(red.reduced(r, j));
    basis.push_back(std::move(y));
  }
  return rref(Matrix::from_rows(f, cols, basis)).reduced;
}

std::optional<Vec> solve_left(const Matrix& a, std::span<const Elem> w) {
  if (w.size() != a.cols()) throw Error("right-hand side length does not match matrix width");
  // a^T c^T = w^T as an augmented system
  const std::size_t unknowns = a.rows();
  Matrix aug(a.field(), a.cols(), unknowns + 1);
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) aug(r, c) = a(c, r);
    aug(r, unknowns) = w[r];
  }
  const RrefResult red = rref(aug);
  Vec c(unknowns, 0);
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] == unknowns) return std::nullopt;
    c[red.pivots[r]] = red.reduced(r, unknowns);
  }
  return c;
}

Vec vec_times(std::span<const Elem> x, const Matrix& m) {
  if (x.size() != m.rows()) throw Error("vector length does not match matrix height");
  const Field& f = m.field();
  Vec out(m.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x[i], m(i, j)));
  }
  return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec normalize(const Field& f, std::span<const Elem> v) {
  for (Elem x : v) {
    if (x != 0) return vec_scale(f, f.inv(x), v);
  }
  return Vec(v.begin(), v.end());
}

// Subspace --------------------------------------------------------------

Subspace::Subspace(Field field, std::size_t n) : n_(n), basis_(std::move(field), 0, n) {}

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots, std::size_t n)
    : n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const Matrix& rows) {
  RrefResult red = rref(rows);
  return Subspace(std::move(red.reduced), std::move(red.pivots), rows.cols());
}

Subspace Subspace::span(const Field& field, std::size_t n, const std::vector<Vec>& rows) {
  return span(Matrix::from_rows(field, n, rows));
}

Subspace Subspace::whole(const Field& field, std::size_t n) { return span(Matrix::identity(field, n)); }

Subspace Subspace::coordinate(const Field& field, std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix m(field, 0, n);
  for (auto i : idx) {
    if (i >= n) throw Error("coordinate index out of range");
    Vec e(n, 0);
    e[i] = 1;
    m.append_row(e);
  }
  return span(m);
}

bool Subspace::contains(std::span<const Elem> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw Error("subspaces live in different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vec Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != n_) throw Error("vector length does not match ambient dimension");
  const Field& f = field();
  Vec out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Elem c = out[pivots_[r]];
    if (c == 0) continue;
    const auto row = basis_.row(r);
    for (std::size_t j = pivots_[r]; j < n_; ++j) out[j] = f.sub(out[j], f.mul(c, row[j]));
  }
  return out;
}

Vec Subspace::coordinates(std::span<const Elem> v) const {
  Vec c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vec Subspace::from_coordinates(std::span<const Elem> c) const {
  if (c.size() != dim()) throw Error("coordinate vector length does not match subspace dimension");
  return vec_times(c, basis_);
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.basis_ < b.basis_;
}

namespace {
void check_same_space(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != y.ambient_dim() || x.field() != y.field()) {
    throw Error("subspaces live in different ambient spaces");
  }
}
}  // namespace

std::size_t dim_sum(const Subspace& x, const Subspace& y) {
  check_same_space(x, y);
  if (x.field().order() == 2) {
    Matrix stacked = x.basis();
    for (std::size_t r = 0; r < y.dim(); ++r) stacked.append_row(y.basis().row(r));
    return rank(stacked);
  }
  Matrix residues(x.field(), 0, x.ambient_dim());
  for (std::size_t r = 0; r < y.dim(); ++r) residues.append_row(x.reduce(y.basis().row(r)));
  return x.dim() + rank(residues);
}

std::size_t dim_intersection(const Subspace& x, const Subspace& y) {
  return x.dim() + y.dim() - dim_sum(x, y);
}

Subspace sum(const Subspace& x, const Subspace& y) {
  check_same_space(x, y);
  Matrix stacked = x.basis();
  for (std::size_t r = 0; r < y.dim(); ++r) stacked.append_row(y.basis().row(r));
  return Subspace::span(stacked);
}

Subspace intersection(const Subspace& x, const Subspace& y) {
  check_same_space(x, y);
  return annihilator(sum(annihilator(x), annihilator(y)));
}

Subspace annihilator(const Subspace& x) {
  if (x.dim() == 0) return Subspace::whole(x.field(), x.ambient_dim());
  return Subspace::span(null_space(x.basis()));
}

Subspace image(const Subspace& x, const Matrix& m) {
  if (m.rows() != x.ambient_dim()) throw Error("map does not act on this subspace's ambient space");
  Matrix out(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < x.dim(); ++r) out.append_row(vec_times(x.basis().row(r), m));
  return Subspace::span(out);
}

// Quotient --------------------------------------------------------------

Quotient::Quotient(Subspace kernel) : kernel_(std::move(kernel)) {
  std::vector<bool> is_pivot(kernel_.ambient_dim(), false);
  for (auto p : kernel_.pivots()) is_pivot[p] = true;
  for (std::size_t j = 0; j < kernel_.ambient_dim(); ++j) {
    if (!is_pivot[j]) columns_.push_back(j);
  }
}

Matrix Quotient::complement_basis() const {
  Matrix m(kernel_.field(), dim(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) m(i, columns_[i]) = 1;
  return m;
}

Vec Quotient::project(std::span<const Elem> v) const {
  const Vec r = kernel_.reduce(v);
  Vec y(dim());
  for (std::size_t i = 0; i < dim(); ++i) y[i] = r[columns_[i]];
  return y;
}

Vec Quotient::lift(std::span<const Elem> y) const {
  if (y.size() != dim()) throw Error("quotient coordinate length mismatch");
  Vec v(ambient_dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) v[columns_[i]] = y[i];
  return v;
}

Subspace Quotient::project(const Subspace& x) const {
  Matrix m(kernel_.field(), 0, dim());
  for (std::size_t r = 0; r < x.dim(); ++r) m.append_row(project(x.basis().row(r)));
  return Subspace::span(m);
}

Subspace Quotient::lift(const Subspace& w) const {
  if (w.ambient_dim() != dim()) throw Error("subspace is not in this quotient");
  Matrix m = kernel_.basis();
  for (std::size_t r = 0; r < w.dim(); ++r) m.append_row(lift(w.basis().row(r)));
  return Subspace::span(m);
}

}  // namespace grassembed
