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

#include <doctest.h>

#include <set>

#include "grassembed/error.hpp"
#include "grassembed/gf.hpp"

using namespace grassembed;

namespace {

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = [&] {
    for (std::uint32_t x = 1; x < p; ++x) {
      if (x * b.back() % p == 1) return x;
    }
    return 0u;
  }();
  while (a.size() >= b.size()) {
    const std::uint32_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_by_trial_division(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= limit; ++q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
      if (!is_prime(p)) continue;
      std::uint32_t v = p;
      while (v < q) v *= p;
      if (v == q) out.push_back(q);
      if (q % p == 0) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("prime fields") {
  const Field f = Field::make(2, 1);
  CHECK(f.order() == 2);
  CHECK(f.add(1, 1) == 0);
  CHECK(f.mul(1, 1) == 1);
  const Field f7 = Field::of_order(7);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.neg(2) == 5);
}

TEST_CASE("default moduli") {
  CHECK(Field::make(2, 2).header() == "GF(2^2;1,1,1)");
  CHECK(Field::make(2, 3).header() == "GF(2^3;1,0,1,1)");
  const Field f9 = Field::make(3, 2);
  CHECK(f9.header() == "GF(3^2;1,0,1)");
  CHECK(irreducible_by_trial_division(f9.modulus(), 3));
  // the modulus divides x^9 - x
  Poly x9(10, 0);
  x9[9] = 1;
  x9[1] = 2;
  CHECK(poly_mod(x9, f9.modulus(), 3).empty());
}

TEST_CASE("default modulus is irreducible for every field up to 2^10") {
  for (auto q : prime_powers_up_to(1024)) {
    const Field f = Field::of_order(q);
    CHECK(irreducible_by_trial_division(f.modulus(), f.characteristic()));
    CHECK(is_irreducible(f.characteristic(), f.modulus()));
  }
}

TEST_CASE("explicit modulus") {
  const Field f = Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f == Field::of_order(4));
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2
  CHECK_THROWS_AS(Field::make(4, 1), Error);
  CHECK_THROWS_AS(Field::make(2, 0), Error);
  CHECK_THROWS_AS(Field::of_order(6), Error);
  CHECK_THROWS_AS(Field::make(2, 17), Error);
}

TEST_CASE("header roundtrip") {
  for (auto q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u, 256u, 65536u}) {
    const Field f = Field::of_order(q);
    CHECK(Field::parse_header(f.header()) == f);
  }
  CHECK_THROWS_AS(Field::parse_header("GF(2^2)"), Error);
  CHECK_THROWS_AS(Field::parse_header("GF(2^2;1,0,1)"), Error);
  CHECK_THROWS_AS(Field::parse_header("F(2^1;1,0)"), Error);
}

TEST_CASE("field axioms, exhaustive up to order 256") {
  for (auto q : prime_powers_up_to(256)) {
    const Field f = Field::of_order(q);
    bool ok = true;
    for (Elem a = 0; a < q; ++a) {
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
      ok = ok && f.add(a, f.neg(a)) == 0;
      for (Elem b = 0; b < q; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        ok = ok && f.sub(f.add(a, b), b) == a;
      }
    }
#pragma omp parallel for reduction(&& : ok)
    for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(q); ++ai) {
      const auto a = static_cast<Elem>(ai);
      for (Elem b = 0; b < q; ++b) {
        for (Elem c = 0; c < q; ++c) {
          ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
          ok = ok && f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c);
        }
      }
    }
    CHECK_MESSAGE(ok, f.header());
  }
}

TEST_CASE("large fields use log tables consistently") {
  const Field f = Field::of_order(1u << 16);
  const Elem g = f.primitive();
  CHECK(f.pow(g, (1u << 16) - 1) == 1);
  CHECK(f.pow(g, ((1u << 16) - 1) / 3) != 1);
  for (Elem a = 1; a < 2000; a += 7) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("homomorphisms") {
  const Field gf2 = Field::of_order(2);
  const Field gf4 = Field::of_order(4);
  const Field gf8 = Field::of_order(8);
  const Field gf16 = Field::of_order(16);
  CHECK(hom_enumerate(gf2, gf4).size() == 1);
  CHECK(hom_enumerate(gf4, gf4).size() == 2);
  CHECK(hom_enumerate(gf4, gf8).empty());
  CHECK(hom_enumerate(gf4, Field::of_order(9)).empty());

  const FieldHom frob = FieldHom::frobenius(gf4);
  CHECK(compose(frob, frob).is_identity());
  CHECK(frob(2) == gf4.mul(2, 2));

  const FieldHom h24 = hom_enumerate(gf2, gf4).front();
  for (const auto& h416 : hom_enumerate(gf4, gf16)) {
    CHECK(compose(h416, h24) == hom_enumerate(gf2, gf16).front());
  }
  CHECK(compose(FieldHom::identity(gf4), frob) == frob);
  CHECK_THROWS_AS(compose(h24, frob), Error);
}

TEST_CASE("hom_enumerate count is e when e divides e'") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6},
                                                                       {3, 1}, {3, 2}, {3, 4}, {5, 2}};
  for (auto [p, e] : fields) {
    for (auto [p2, e2] : fields) {
      const Field a = Field::make(p, e);
      const Field b = Field::make(p2, e2);
      const auto homs = hom_enumerate(a, b);
      const std::size_t expected = (p == p2 && e2 % e == 0) ? e : 0;
      CHECK(homs.size() == expected);
      std::set<std::vector<Elem>> tables;
      for (const auto& h : homs) {
        tables.insert(h.table());
        CHECK(h(0) == 0);
        CHECK(h(1) == 1);
        // injective and multiplicative on a sample
        std::set<Elem> image(h.table().begin(), h.table().end());
        CHECK(image.size() == a.order());
        for (Elem x = 0; x < std::min<Elem>(a.order(), 20); ++x) {
          for (Elem y = 0; y < std::min<Elem>(a.order(), 20); ++y) {
            CHECK(h(a.mul(x, y)) == b.mul(h(x), h(y)));
            CHECK(h(a.add(x, y)) == b.add(h(x), h(y)));
          }
        }
      }
      CHECK(tables.size() == homs.size());
    }
  }
}

TEST_CASE("from_generator_image validates the image") {
  const Field gf2 = Field::of_order(2);
  const Field gf4 = Field::of_order(4);
  CHECK_THROWS_AS(FieldHom::from_generator_image(gf4, gf4, 1), Error);
  CHECK(FieldHom::from_generator_image(gf4, gf4, 3) == FieldHom::frobenius(gf4));
  CHECK(FieldHom::from_generator_image(gf2, gf4, gf2.generator()).is_surjective() == false);
  CHECK_THROWS_AS(FieldHom::from_generator_image(gf2, gf4, gf2.generator() + 1), Error);
  CHECK(automorphisms(gf4).size() == 2);
  CHECK(automorphisms(Field::of_order(27)).size() == 3);
  const FieldHom h = hom_enumerate(gf2, gf4).front();
  CHECK(h.preimage(1) == std::optional<Elem>(1));
  CHECK_FALSE(h.preimage(2).has_value());
}
