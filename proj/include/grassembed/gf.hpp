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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Finite fields GF(p^e) and the injective homomorphisms between them.
//
// Elements are integer codes 0..q-1: the base-p digits of a code are the
// coefficients of the representing polynomial, lowest degree first. The
// prime subfield therefore occupies codes 0..p-1 in every field of
// characteristic p.

namespace grassembed {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

// Trial division against every monic polynomial of degree 1..e/2.
// `coeffs` are c_0..c_e, lowest degree first.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

namespace detail {
struct FieldData;
}

class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // GF(2).
  Field();

  // Throws Error on non-prime p, e == 0, p^e > kMaxOrder, or a supplied
  // modulus that is not monic irreducible of degree e. Without a modulus
  // the lexicographically smallest monic irreducible is used, ordering by
  // (c_{e-1}, ..., c_0).
  static Field make(std::uint32_t p, std::uint32_t e,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  // Default field of order q; q must be a prime power.
  static Field of_order(std::uint64_t q);

  // Parses `GF(p^e;c_e,...,c_0)`.
  static Field parse_header(std::string_view text);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  // c_0..c_e, lowest degree first.
  const std::vector<std::uint32_t>& modulus() const;
  // `GF(p^e;c_e,...,c_0)`, highest degree first.
  std::string header() const;

  bool contains(Elem a) const { return a < order(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  // Throws Error on a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  // Smallest code generating the multiplicative group.
  Elem primitive() const;
  // The class of x in GF(p)[x]/(modulus); for e == 1 the root of the
  // linear modulus.
  Elem generator() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

// An injective ring homomorphism source -> target, stored as a full table.
class FieldHom {
 public:
  static FieldHom identity(const Field& f);

  // The homomorphism sending the source generator to `image`. Throws Error
  // if the characteristics differ or `image` is not a root of the source
  // modulus in the target.
  static FieldHom from_generator_image(const Field& source, const Field& target, Elem image);

  // a -> a^(p^power).
  static FieldHom frobenius(const Field& f, std::uint32_t power = 1);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem generator_image() const { return generator_image_; }
  const std::vector<Elem>& table() const { return table_; }

  Elem operator()(Elem a) const { return table_[a]; }

  // Inverse on the image subfield; nullopt off the image.
  std::optional<Elem> preimage(Elem b) const;
  bool is_identity() const;
  bool is_surjective() const { return source_.order() == target_.order(); }

  friend bool operator==(const FieldHom& a, const FieldHom& b);

 private:
  FieldHom(Field source, Field target, Elem generator_image, std::vector<Elem> table);

  Field source_;
  Field target_;
  Elem generator_image_ = 0;
  std::vector<Elem> table_;
  std::vector<std::int64_t> inverse_;  // -1 off the image
};

// outer o inner. Throws Error when inner.target() != outer.source().
FieldHom compose(const FieldHom& outer, const FieldHom& inner);

// All homomorphisms source -> target, ordered by generator image code.
// Empty unless the characteristics agree and deg(source) | deg(target).
std::vector<FieldHom> hom_enumerate(const Field& source, const Field& target);

// Every automorphism of f, identity first.
std::vector<FieldHom> automorphisms(const Field& f);

}  // namespace grassembed
