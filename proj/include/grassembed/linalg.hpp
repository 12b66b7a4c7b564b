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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grassembed/gf.hpp"

// Dense matrices and subspaces over a Field.
//
// Vectors are rows. The dual space of F^n is F^n again under the
// dot-product pairing, so annihilators are right null spaces and the
// adjoint of a linear map is its transpose. Both identifications use
// commutativity of the scalars.

namespace grassembed {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

  void append_row(std::span<const Elem> v);
  Matrix transpose() const;
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;  // zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form. GF(2) input takes the bit-packed path.
RrefResult rref(const Matrix& m);
// Field-generic elimination; the reference the packed path is tested against.
RrefResult rref_generic(const Matrix& m);
std::size_t rank(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
// nullopt when singular or not square.
std::optional<Matrix> inverse(const Matrix& m);
// Rows form a basis (in RREF) of { y : m * y^T = 0 }.
Matrix null_space(const Matrix& m);
// Some c with c * a = w (free unknowns set to zero); nullopt when w is not
// in the row space of a.
std::optional<Vec> solve_left(const Matrix& a, std::span<const Elem> w);

Vec vec_times(std::span<const Elem> x, const Matrix& m);
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a);
bool is_zero(std::span<const Elem> v);
// Scales so the first nonzero entry is 1; zero vectors unchanged.
Vec normalize(const Field& f, std::span<const Elem> v);

// A subspace of F^n held as its RREF basis, so structural equality is
// subspace equality.
class Subspace {
 public:
  Subspace() = default;
  // The zero subspace of F^n.
  Subspace(Field field, std::size_t n);

  static Subspace span(const Matrix& rows);
  static Subspace span(const Field& field, std::size_t n, const std::vector<Vec>& rows);
  static Subspace whole(const Field& field, std::size_t n);
  // span{e_i : i in idx}, 0-based.
  static Subspace coordinate(const Field& field, std::size_t n, const std::vector<std::size_t>& idx);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  // Residue of v modulo this subspace: zero on every pivot column.
  Vec reduce(std::span<const Elem> v) const;
  // Coordinates of v in the RREF basis; v must lie in the subspace.
  Vec coordinates(std::span<const Elem> v) const;
  // Vector with the given coordinates in the RREF basis.
  Vec from_coordinates(std::span<const Elem> c) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots, std::size_t n);

  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t dim_sum(const Subspace& x, const Subspace& y);
std::size_t dim_intersection(const Subspace& x, const Subspace& y);
Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersection(const Subspace& x, const Subspace& y);
// X^0 inside F^n under the dot-product pairing; dim n - dim X.
Subspace annihilator(const Subspace& x);
// Image of X under the linear map v -> v * m.
Subspace image(const Subspace& x, const Matrix& m);

// V/S with the complement spanned by the standard basis vectors at the
// non-pivot columns of S, in index order. Quotient coordinates are the
// entries of the residue at those columns.
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(Subspace kernel);

  const Subspace& kernel() const { return kernel_; }
  std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
  std::size_t dim() const { return columns_.size(); }
  const std::vector<std::size_t>& complement_columns() const { return columns_; }
  Matrix complement_basis() const;

  Vec project(std::span<const Elem> v) const;
  Vec lift(std::span<const Elem> y) const;
  // Image of a subspace in quotient coordinates.
  Subspace project(const Subspace& x) const;
  // Preimage S + lift(W) of a subspace W of the quotient.
  Subspace lift(const Subspace& w) const;

 private:
  Subspace kernel_;
  std::vector<std::size_t> columns_;
};

}  // namespace grassembed
