#include "fflie/gf.hpp"

#include <algorithm>

namespace fflie::gf {

namespace {

// Levels up to this cardinality get full multiplication/addition tables;
// larger levels fall back to polynomial arithmetic (identical results).
constexpr u64 kTableLimit = 1024;
// Hard cap on level cardinality so index arithmetic stays comfortably in u64.
constexpr u64 kCardLimit = u64(1) << 40;

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

struct FieldTower::Impl {
  u32 p = 0;

  struct Level {
    u32 degree = 1;  // over the previous level
    u64 card = 0;
    std::vector<u64> modulus;  // constant term first, monic; empty at level 0
    bool tables = false;
    std::vector<u32> mul_t, add_t;  // card*card when tables
    std::vector<u32> inv_t;         // card when tables
  };
  std::vector<Level> levels;

  u64 add(int k, u64 a, u64 b) const {
    if (k == 0) return (a + b) % p;
    const Level& L = levels[k];
    if (L.tables) return L.add_t[a * L.card + b];
    u64 B = levels[k - 1].card, r = 0, m = 1;
    for (u32 t = 0; t < L.degree; ++t) {
      r += add(k - 1, a % B, b % B) * m;
      a /= B;
      b /= B;
      m *= B;
    }
    return r;
  }

  u64 neg(int k, u64 a) const {
    if (k == 0) return a == 0 ? 0 : p - a;
    const Level& L = levels[k];
    u64 B = levels[k - 1].card, r = 0, m = 1;
    for (u32 t = 0; t < L.degree; ++t) {
      r += neg(k - 1, a % B) * m;
      a /= B;
      m *= B;
    }
    return r;
  }

  u64 sub(int k, u64 a, u64 b) const { return add(k, a, neg(k, b)); }

  u64 mul(int k, u64 a, u64 b) const {
    if (k == 0) return (a * b) % p;
    const Level& L = levels[k];
    if (L.tables) return L.mul_t[a * L.card + b];
    return mul_generic(k, a, b);
  }

  u64 mul_generic(int k, u64 a, u64 b) const {
    const Level& L = levels[k];
    const u32 d = L.degree;
    const u64 B = levels[k - 1].card;
    std::vector<u64> da(d), db(d), prod(2 * d - 1, 0);
    for (u32 t = 0; t < d; ++t) {
      da[t] = a % B;
      a /= B;
      db[t] = b % B;
      b /= B;
    }
    for (u32 i = 0; i < d; ++i) {
      if (da[i] == 0) continue;
      for (u32 j = 0; j < d; ++j)
        if (db[j] != 0) prod[i + j] = add(k - 1, prod[i + j], mul(k - 1, da[i], db[j]));
    }
    for (u32 i = 2 * d - 2; i >= d && i < 2 * d; --i) {
      u64 c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (u32 j = 0; j < d; ++j)
        prod[i - d + j] = sub(k - 1, prod[i - d + j], mul(k - 1, c, L.modulus[j]));
    }
    u64 r = 0, m = 1;
    for (u32 t = 0; t < d; ++t) {
      r += prod[t] * m;
      m *= B;
    }
    return r;
  }

  u64 pow(int k, u64 a, u64 e) const {
    u64 r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(k, r, b);
      b = mul(k, b, b);
      e >>= 1;
    }
    return r;
  }

  u64 inv(int k, u64 a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero");
    const Level& L = levels[k];
    if (L.tables) return L.inv_t[a];
    return pow(k, a, L.card - 2);
  }

  u64 frobenius(int k, u64 a, u64 i) const {
    if (a == 0) return 0;
    const u64 ord = levels[k].card - 1;
    if (ord == 1) return a;
    u64 e = 1, base = p % ord;
    while (i) {
      if (i & 1) e = (e * base) % ord;
      base = (base * base) % ord;
      i >>= 1;
    }
    return pow(k, a, e);
  }

  void build_tables(int k) {
    Level& L = levels[k];
    if (L.card > kTableLimit) return;
    const u64 n = L.card;
    L.add_t.resize(n * n);
    L.mul_t.resize(n * n);
    L.inv_t.assign(n, 0);
    for (u64 a = 0; a < n; ++a)
      for (u64 b = 0; b < n; ++b) {
        u64 B0 = levels[k - 1].card, s = 0, m = 1, x = a, y = b;
        for (u32 t = 0; t < L.degree; ++t) {
          s += add(k - 1, x % B0, y % B0) * m;
          x /= B0;
          y /= B0;
          m *= B0;
        }
        L.add_t[a * n + b] = static_cast<u32>(s);
        u64 pr = mul_generic(k, a, b);
        L.mul_t[a * n + b] = static_cast<u32>(pr);
        if (pr == 1) L.inv_t[a] = static_cast<u32>(b);
      }
    L.tables = true;
  }
};

// ---------------------------------------------------------------------------
// polynomial helpers over an arbitrary level (indices, constant term first)

namespace {

using Poly = std::vector<u64>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

// remainder of a modulo m; m must have invertible leading coefficient
Poly poly_mod(const Field& F, Poly a, const Poly& m) {
  const size_t dm = m.size() - 1;
  const u64 lead_inv = F.inv(m.back());
  poly_trim(a);
  while (a.size() > dm) {
    const u64 c = F.mul(a.back(), lead_inv);
    const size_t shift = a.size() - 1 - dm;
    if (c != 0)
      for (size_t j = 0; j < m.size(); ++j)
        a[shift + j] = F.sub(a[shift + j], F.mul(c, m[j]));
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
  return poly_mod(F, poly_mul(F, a, b), m);
}

Poly poly_powmod(const Field& F, Poly a, u64 e, const Poly& m) {
  Poly r = {1};
  a = poly_mod(F, std::move(a), m);
  while (e) {
    if (e & 1) r = poly_mulmod(F, r, a, m);
    a = poly_mulmod(F, a, a, m);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(const Field& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  poly_trim(a);
  return a;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const Field& base, std::span<const u64> monic_poly) {
  Poly f(monic_poly.begin(), monic_poly.end());
  if (f.size() < 2 || f.back() != 1) fail("BadParameter", "modulus must be monic of degree >= 1");
  const u32 d = static_cast<u32>(f.size() - 1);
  if (d == 1) return true;
  const u64 B = base.card();
  const Poly x = {0, 1};
  Poly h = x;
  for (u32 t = 1; t <= d; ++t) {
    h = poly_powmod(base, h, B, f);  // h = x^(B^t) mod f
    if (t < d && d % t == 0 && is_prime_u64(d / t)) {
      Poly g = poly_gcd(base, poly_sub(base, h, x), f);
      if (g.size() != 1) return false;
    }
  }
  Poly diff = poly_sub(base, h, x);
  return diff.empty();
}

std::vector<u64> find_irreducible(const Field& base, u32 degree) {
  if (degree < 1) fail("BadParameter", "extension degree must be >= 1");
  const u64 B = base.card();
  u64 count = 1;
  for (u32 t = 0; t < degree; ++t) {
    if (count > kCardLimit / B) fail("BadParameter", "extension too large");
    count *= B;
  }
  std::vector<u64> f(degree + 1, 0);
  f[degree] = 1;
  for (u64 n = 0; n < count; ++n) {
    u64 x = n;
    for (u32 t = 0; t < degree; ++t) {
      f[t] = x % B;
      x /= B;
    }
    if (is_irreducible(base, f)) return f;
  }
  fail("BadParameter", "no irreducible polynomial found");  // unreachable
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower FieldTower::prime(u32 p) {
  if (!is_prime_u64(p)) fail("BadParameter", "characteristic must be prime, got " + std::to_string(p));
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  Impl::Level L0;
  L0.degree = 1;
  L0.card = p;
  impl->levels.push_back(std::move(L0));
  return FieldTower(std::move(impl));
}

FieldTower FieldTower::extended(u32 degree) const {
  return extended(find_irreducible(top(), degree));
}

FieldTower FieldTower::extended(const std::vector<u64>& modulus) const {
  const Field t = top();
  if (modulus.size() < 2 || modulus.back() != 1)
    fail("BadParameter", "modulus must be monic of degree >= 1");
  for (u64 c : modulus)
    if (c >= t.card()) fail("BadParameter", "modulus coefficient out of range");
  if (!is_irreducible(t, modulus)) fail("BadParameter", "modulus is not irreducible");

  auto impl = std::make_shared<Impl>(*impl_);
  Impl::Level L;
  L.degree = static_cast<u32>(modulus.size() - 1);
  L.card = 1;
  for (u32 i = 0; i < L.degree; ++i) {
    if (L.card > kCardLimit / t.card()) fail("BadParameter", "extension too large");
    L.card *= t.card();
  }
  L.modulus = modulus;
  impl->levels.push_back(std::move(L));
  impl->build_tables(static_cast<int>(impl->levels.size()) - 1);
  return FieldTower(std::move(impl));
}

int FieldTower::levels() const { return static_cast<int>(impl_->levels.size()); }
u32 FieldTower::characteristic() const { return impl_->p; }

u64 FieldTower::card(int level) const { return impl_->levels.at(level).card; }
u32 FieldTower::degree(int level) const { return impl_->levels.at(level).degree; }

u32 FieldTower::absolute_degree(int level) const {
  u32 d = 1;
  for (int k = 1; k <= level; ++k) d *= impl_->levels[k].degree;
  return d;
}

const std::vector<u64>& FieldTower::modulus(int level) const {
  if (level < 1 || level >= levels()) fail("BadParameter", "no modulus at this level");
  return impl_->levels[level].modulus;
}

Field FieldTower::level(int k) const {
  if (k < 0 || k >= levels()) fail("BadParameter", "no such tower level");
  return Field(*this, k);
}

Field FieldTower::top() const { return Field(*this, levels() - 1); }

bool FieldTower::same(const FieldTower& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->p != other.impl_->p) return false;
  if (impl_->levels.size() != other.impl_->levels.size()) return false;
  for (size_t k = 1; k < impl_->levels.size(); ++k)
    if (impl_->levels[k].modulus != other.impl_->levels[k].modulus) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(FieldTower tower, int level) : tower_(std::move(tower)), level_(level) {
  if (level_ < 0 || level_ >= tower_.levels()) fail("BadParameter", "no such tower level");
}

u64 Field::card() const { return tower_.card(level_); }
u32 Field::characteristic() const { return tower_.characteristic(); }
u32 Field::degree() const { return tower_.degree(level_); }
u32 Field::absolute_degree() const { return tower_.absolute_degree(level_); }

u64 Field::add(u64 a, u64 b) const { return tower_.impl().add(level_, a, b); }
u64 Field::sub(u64 a, u64 b) const { return tower_.impl().sub(level_, a, b); }
u64 Field::neg(u64 a) const { return tower_.impl().neg(level_, a); }
u64 Field::mul(u64 a, u64 b) const { return tower_.impl().mul(level_, a, b); }
u64 Field::inv(u64 a) const { return tower_.impl().inv(level_, a); }
u64 Field::pow(u64 a, u64 e) const { return tower_.impl().pow(level_, a, e); }
u64 Field::frobenius(u64 a, u64 i) const { return tower_.impl().frobenius(level_, a, i); }

u64 Field::from_int(u64 n) const { return n % characteristic(); }

u64 Field::generator() const {
  if (level_ == 0) return 1;
  if (degree() >= 2) return tower_.card(level_ - 1);
  return neg(tower_.modulus(level_)[0]);  // degree-1 extension: root of t + c
}

std::vector<u64> Field::coords(u64 x) const {
  if (level_ == 0) return {x};
  const u64 B = tower_.card(level_ - 1);
  std::vector<u64> c(degree());
  for (u32 t = 0; t < degree(); ++t) {
    c[t] = x % B;
    x /= B;
  }
  return c;
}

u64 Field::from_coords(std::span<const u64> c) const {
  if (level_ == 0) {
    if (c.size() != 1 || c[0] >= card()) fail("BadParameter", "bad coordinate vector");
    return c[0];
  }
  if (c.size() != degree()) fail("BadParameter", "bad coordinate vector length");
  const u64 B = tower_.card(level_ - 1);
  u64 r = 0, m = 1;
  for (u32 t = 0; t < degree(); ++t) {
    if (c[t] >= B) fail("BadParameter", "coordinate out of range");
    r += c[t] * m;
    m *= B;
  }
  return r;
}

u64 Field::find_nonsquare() const {
  if (characteristic() == 2) fail("NoNonsquare", "every element of a characteristic-2 field is a square");
  std::vector<bool> sq(card(), false);
  for (u64 y = 0; y < card(); ++y) sq[mul(y, y)] = true;
  for (u64 x = 0; x < card(); ++x)
    if (!sq[x]) return x;
  fail("NoNonsquare", "no nonsquare found");  // unreachable for odd cardinality
}

Field Field::base() const {
  if (level_ == 0) fail("BadParameter", "prime field has no base");
  return Field(tower_, level_ - 1);
}

bool Field::same(const Field& other) const {
  if (level_ != other.level_) return false;
  if (tower_.characteristic() != other.tower_.characteristic()) return false;
  // Only the chain up to this level determines the arithmetic; levels that may
  // exist above it in either tower are irrelevant context.
  for (int k = 1; k <= level_; ++k)
    if (tower_.modulus(k) != other.tower_.modulus(k)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Field field, u64 index) : field_(std::move(field)), index_(index) {
  if (index_ >= field_.card()) fail("BadParameter", "element index out of range");
}

void FieldElement::check(const FieldElement& o) const {
  if (!field_.same(o.field_)) fail("FieldMismatch", "elements live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return FieldElement(field_, field_.add(index_, o.index_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return FieldElement(field_, field_.sub(index_, o.index_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return FieldElement(field_, field_.mul(index_, o.index_));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(index_)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(index_)); }
FieldElement FieldElement::pow(u64 e) const { return FieldElement(field_, field_.pow(index_, e)); }
FieldElement FieldElement::frobenius(u64 i) const {
  return FieldElement(field_, field_.frobenius(index_, i));
}
bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  return index_ == o.index_;
}

// ---------------------------------------------------------------------------
// ExtView

ExtView ExtView::of(const Field& top_field) {
  return ExtView{top_field.base(), top_field, top_field.degree()};
}

std::vector<u64> ExtView::down(u64 x) const {
  if (top.level() == base.level()) return {x};
  return top.coords(x);
}

u64 ExtView::up(std::span<const u64> c) const {
  if (top.level() == base.level()) {
    if (c.size() != 1) fail("BadParameter", "bad coordinate vector length");
    return c[0];
  }
  return top.from_coords(c);
}

u64 ExtView::alpha() const {
  if (top.level() == base.level()) return 1;
  return top.generator();
}

}  // namespace fflie::gf
