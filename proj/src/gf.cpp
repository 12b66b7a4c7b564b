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

#include "grassembed/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <tuple>

#include "grassembed/error.hpp"

namespace grassembed {

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // c_0..c_e
  Elem primitive = 1;
  Elem generator = 0;
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<Elem> exp;           // length 2(q-1)
  std::vector<Elem> neg;
  std::vector<std::uint16_t> add_table;  // q*q when q <= 256
  std::vector<std::uint16_t> mul_table;  // q*q when q <= 256
};

}  // namespace detail

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(Elem a, std::uint32_t p, std::uint32_t e) {
  Digits d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem from_digits(const Digits& d, std::uint32_t p) {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a monic-or-not divisor b over GF(p). Both lowest
// degree first; trailing zeros allowed.
Digits poly_rem(Digits a, const Digits& b, std::uint32_t p) {
  std::size_t db = b.size();
  while (db > 0 && b[db - 1] == 0) --db;
  const std::uint32_t lead_inv = inv_mod(b[db - 1], p);
  for (std::size_t i = a.size(); i-- >= db;) {
    if (a[i] == 0) {
      if (i == 0) break;
      continue;
    }
    const std::uint64_t factor = static_cast<std::uint64_t>(a[i]) * lead_inv % p;
    const std::size_t shift = i - (db - 1);
    for (std::size_t j = 0; j < db; ++j) {
      const std::uint64_t sub = factor * b[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    if (i == 0) break;
  }
  a.resize(std::min(a.size(), db - 1));
  return a;
}

// Product of a and b reduced modulo the monic degree-e modulus.
Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  Digits prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  Digits r = poly_rem(std::move(prod), modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<const detail::FieldData> build(std::uint32_t p, std::uint32_t e, Digits modulus) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->e = e;
  d->modulus = std::move(modulus);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  d->q = static_cast<std::uint32_t>(q);

  auto mulmod = [&](Elem a, Elem b) {
    return from_digits(poly_mulmod(to_digits(a, p, e), to_digits(b, p, e), d->modulus, p), p);
  };
  auto slow_pow = [&](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k) {
      if (k & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      k >>= 1;
    }
    return r;
  };

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  d->primitive = 0;
  for (Elem g = 1; g < d->q; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (slow_pow(g, order / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      d->primitive = g;
      break;
    }
  }
  if (d->q == 2) d->primitive = 1;

  d->log.assign(d->q, 0);
  d->exp.assign(2 * order, 0);
  Elem x = 1;
  const Digits g = to_digits(d->primitive, p, e);
  for (std::uint64_t i = 0; i < order; ++i) {
    d->exp[i] = x;
    d->exp[i + order] = x;
    d->log[x] = static_cast<std::uint32_t>(i);
    x = from_digits(poly_mulmod(to_digits(x, p, e), g, d->modulus, p), p);
  }

  d->neg.assign(d->q, 0);
  for (Elem a = 0; a < d->q; ++a) {
    Digits da = to_digits(a, p, e);
    for (auto& c : da) c = (p - c) % p;
    d->neg[a] = from_digits(da, p);
  }

  if (e == 1) {
    d->generator = (p - d->modulus[0] % p) % p;
  } else {
    d->generator = p;
  }

  if (d->q <= 256) {
    d->add_table.assign(static_cast<std::size_t>(d->q) * d->q, 0);
    d->mul_table.assign(static_cast<std::size_t>(d->q) * d->q, 0);
    for (Elem a = 0; a < d->q; ++a) {
      const Digits da = to_digits(a, p, e);
      for (Elem b = 0; b < d->q; ++b) {
        Digits db = to_digits(b, p, e);
        for (std::uint32_t i = 0; i < e; ++i) db[i] = (db[i] + da[i]) % p;
        d->add_table[a * d->q + b] = static_cast<std::uint16_t>(from_digits(db, p));
        d->mul_table[a * d->q + b] =
            (a == 0 || b == 0) ? 0 : static_cast<std::uint16_t>(d->exp[d->log[a] + d->log[b]]);
      }
    }
  }
  return d;
}

using CacheKey = std::tuple<std::uint32_t, std::uint32_t, Digits>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, std::shared_ptr<const detail::FieldData>>& cache() {
  static std::map<CacheKey, std::shared_ptr<const detail::FieldData>> c;
  return c;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
  if (coeffs.size() < 2 || coeffs.back() == 0) return false;
  const std::size_t e = coeffs.size() - 1;
  if (e == 1) return true;
  for (std::size_t deg = 1; deg <= e / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Digits divisor = to_digits(static_cast<Elem>(t), p, static_cast<std::uint32_t>(deg));
      divisor.push_back(1);
      const Digits r = poly_rem(coeffs, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

Field::Field() : Field(Field::make(2, 1)) {}

Field Field::make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error("field order exceeds 2^16");
  }

  Digits mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != e + 1) throw Error("modulus must have e+1 coefficients");
    for (auto c : mod) {
      if (c >= p) throw Error("modulus coefficient out of range");
    }
    if (mod.back() != 1) throw Error("modulus must be monic");
    if (!is_irreducible(p, mod)) throw Error("modulus is reducible over GF(" + std::to_string(p) + ")");
  } else {
    const std::uint64_t count = q;  // p^e choices of c_0..c_{e-1}
    for (std::uint64_t t = 0; t < count; ++t) {
      Digits cand = to_digits(static_cast<Elem>(t), p, e);
      cand.push_back(1);
      if (is_irreducible(p, cand)) {
        mod = std::move(cand);
        break;
      }
    }
  }

  CacheKey key{p, e, mod};
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache().find(key);
  if (it != cache().end()) return Field(it->second);
  auto data = build(p, e, mod);
  cache().emplace(std::move(key), data);
  return Field(std::move(data));
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw Error("field order must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw Error(std::to_string(q) + " is not a prime power");
  return make(static_cast<std::uint32_t>(p), e);
}

Field Field::parse_header(std::string_view text) {
  auto fail = [&]() { return Error("malformed field header '" + std::string(text) + "'"); };
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.size() < 7 || text.substr(0, 3) != "GF(" || text.back() != ')') throw fail();
  std::string_view body = text.substr(3, text.size() - 4);
  const auto caret = body.find('^');
  const auto semi = body.find(';');
  if (caret == std::string_view::npos || semi == std::string_view::npos || caret > semi) throw fail();
  auto parse_num = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw fail();
    return v;
  };
  const std::uint32_t p = parse_num(body.substr(0, caret));
  const std::uint32_t e = parse_num(body.substr(caret + 1, semi - caret - 1));
  std::vector<std::uint32_t> high_first;
  std::string_view rest = body.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    high_first.push_back(parse_num(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::reverse(high_first.begin(), high_first.end());
  return make(p, e, high_first);
}

std::uint32_t Field::characteristic() const { return d_->p; }
std::uint32_t Field::degree() const { return d_->e; }
std::uint32_t Field::order() const { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }

std::string Field::header() const {
  std::string s = "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->e) + ";";
  for (std::size_t i = d_->modulus.size(); i-- > 0;) {
    s += std::to_string(d_->modulus[i]);
    if (i) s += ",";
  }
  return s + ")";
}

Elem Field::add(Elem a, Elem b) const {
  if (d_->p == 2) return a ^ b;
  if (!d_->add_table.empty()) return d_->add_table[a * d_->q + b];
  Elem r = 0, place = 1;
  while (a || b) {
    r += ((a % d_->p + b % d_->p) % d_->p) * place;
    a /= d_->p;
    b /= d_->p;
    place *= d_->p;
  }
  return r;
}

Elem Field::neg(Elem a) const { return d_->neg[a]; }
Elem Field::sub(Elem a, Elem b) const { return add(a, d_->neg[b]); }

Elem Field::mul(Elem a, Elem b) const {
  if (!d_->mul_table.empty()) return d_->mul_table[a * d_->q + b];
  if (a == 0 || b == 0) return 0;
  return d_->exp[d_->log[a] + d_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error("inverse of zero");
  const std::uint32_t order = d_->q - 1;
  return d_->exp[(order - d_->log[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = d_->q - 1;
  return d_->exp[(static_cast<std::uint64_t>(d_->log[a]) * (k % order)) % order];
}

Elem Field::primitive() const { return d_->primitive; }
Elem Field::generator() const { return d_->generator; }

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus;
}

// FieldHom -------------------------------------------------------------

FieldHom::FieldHom(Field source, Field target, Elem generator_image, std::vector<Elem> table)
    : source_(std::move(source)),
      target_(std::move(target)),
      generator_image_(generator_image),
      table_(std::move(table)),
      inverse_(target_.order(), -1) {
  for (Elem a = 0; a < table_.size(); ++a) inverse_[table_[a]] = a;
}

FieldHom FieldHom::identity(const Field& f) {
  std::vector<Elem> t(f.order());
  for (Elem a = 0; a < f.order(); ++a) t[a] = a;
  return FieldHom(f, f, f.generator(), std::move(t));
}

FieldHom FieldHom::from_generator_image(const Field& source, const Field& target, Elem image) {
  if (source.characteristic() != target.characteristic()) {
    throw Error("no homomorphism between fields of different characteristic");
  }
  if (!target.contains(image)) throw Error("generator image out of range");
  // Evaluate the source modulus at `image`.
  const auto& mod = source.modulus();
  Elem acc = 0;
  for (std::size_t i = mod.size(); i-- > 0;) acc = target.add(target.mul(acc, image), mod[i]);
  if (acc != 0) throw Error("generator image is not a root of the source modulus");

  const std::uint32_t p = source.characteristic();
  const std::uint32_t e = source.degree();
  std::vector<Elem> powers(e, 1);
  for (std::uint32_t i = 1; i < e; ++i) powers[i] = target.mul(powers[i - 1], image);
  std::vector<Elem> table(source.order());
  for (Elem a = 0; a < source.order(); ++a) {
    Elem v = 0, rest = a;
    for (std::uint32_t i = 0; i < e; ++i) {
      const Elem digit = rest % p;
      rest /= p;
      // digit is a prime-field code, valid in the target as well
      v = target.add(v, target.mul(digit, powers[i]));
    }
    table[a] = v;
  }
  if (e == 1) image = source.generator();
  return FieldHom(source, target, image, std::move(table));
}

FieldHom FieldHom::frobenius(const Field& f, std::uint32_t power) {
  std::uint64_t exponent = 1;
  for (std::uint32_t i = 0; i < power % f.degree(); ++i) exponent *= f.characteristic();
  return from_generator_image(f, f, f.pow(f.generator(), exponent));
}

std::optional<Elem> FieldHom::preimage(Elem b) const {
  if (b >= inverse_.size() || inverse_[b] < 0) return std::nullopt;
  return static_cast<Elem>(inverse_[b]);
}

bool FieldHom::is_identity() const {
  if (source_ != target_) return false;
  for (Elem a = 0; a < table_.size(); ++a) {
    if (table_[a] != a) return false;
  }
  return true;
}

bool operator==(const FieldHom& a, const FieldHom& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
}

FieldHom compose(const FieldHom& outer, const FieldHom& inner) {
  if (inner.target() != outer.source()) throw Error("composing homomorphisms over mismatched fields");
  return FieldHom::from_generator_image(inner.source(), outer.target(), outer(inner.generator_image()));
}

std::vector<FieldHom> hom_enumerate(const Field& source, const Field& target) {
  std::vector<FieldHom> out;
  if (source.characteristic() != target.characteristic()) return out;
  if (target.degree() % source.degree() != 0) return out;
  const auto& mod = source.modulus();
  for (Elem r = 0; r < target.order(); ++r) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = target.add(target.mul(acc, r), mod[i]);
    if (acc == 0) out.push_back(FieldHom::from_generator_image(source, target, r));
  }
  return out;
}

std::vector<FieldHom> automorphisms(const Field& f) {
  std::vector<FieldHom> out;
  for (std::uint32_t i = 0; i < f.degree(); ++i) out.push_back(FieldHom::frobenius(f, i));
  return out;
}

}  // namespace grassembed
