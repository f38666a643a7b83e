#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fflie/error.hpp"

namespace fflie::gf {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

class Field;

/// A chain of finite fields F_p = L0 < L1 < ... where each level is
/// L(k) = L(k-1)[t] / (modulus_k), modulus_k monic irreducible over L(k-1).
///
/// Elements of a level are identified with their canonical index: the
/// coordinate vector (c_0, ..., c_{d-1}) over the previous level corresponds to
/// index c_0 + c_1*B + ... + c_{d-1}*B^{d-1}, B = previous level cardinality.
/// Index order (0, 1, 2, ...) therefore IS the canonical enumeration order,
/// 0 and 1 are the additive and multiplicative identities at every level, and
/// at an extension level index B is the residue class of t (written alpha).
///
/// Towers are immutable and cheap to copy; equality is structural
/// (same characteristic, same modulus chain).
class FieldTower {
public:
  /// The one-level tower F_p. `p` must be prime.
  static FieldTower prime(u32 p);

  /// This tower with one more level on top, using the lexicographically
  /// smallest monic irreducible modulus of the given degree (>= 1).
  FieldTower extended(u32 degree) const;

  /// This tower with one more level on top, using an explicit modulus given as
  /// element indices over the current top level, constant term first, monic.
  /// Throws BadParameter if not monic of degree >= 1 or not irreducible.
  FieldTower extended(const std::vector<u64>& modulus) const;

  int levels() const;
  u32 characteristic() const;
  u64 card(int level) const;
  /// Degree of `level` over the level below (1 for level 0).
  u32 degree(int level) const;
  /// Degree of `level` over the prime field.
  u32 absolute_degree(int level) const;
  /// Modulus of `level` (>= 1) as indices over level-1, constant term first.
  const std::vector<u64>& modulus(int level) const;

  Field level(int k) const;
  Field top() const;

  bool same(const FieldTower& other) const;

  struct Impl;
  const Impl& impl() const { return *impl_; }

private:
  explicit FieldTower(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Handle to one level of a FieldTower; the arithmetic context used by all
/// higher modules. All element arguments/results are canonical indices.
class Field {
public:
  Field(FieldTower tower, int level);

  const FieldTower& tower() const { return tower_; }
  int level() const { return level_; }
  u64 card() const;
  u32 characteristic() const;
  u32 degree() const;           // over the level below
  u32 absolute_degree() const;  // over F_p

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  /// Throws DivisionByZero on a = 0.
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;
  /// frob_i: x -> x^(p^i), the i-th power of the absolute Frobenius.
  u64 frobenius(u64 a, u64 i) const;

  u64 zero() const { return 0; }
  u64 one() const { return 1; }
  /// Integer scalar n*1 (n taken mod p).
  u64 from_int(u64 n) const;
  /// Residue class of t at an extension level; 1 at a prime level.
  u64 generator() const;

  /// Coordinates over the level below (length degree(); identity at level 0).
  std::vector<u64> coords(u64 x) const;
  u64 from_coords(std::span<const u64> c) const;

  /// First element in canonical enumeration order that is not a square.
  /// Throws NoNonsquare in characteristic 2 (every element is a square).
  u64 find_nonsquare() const;

  /// The field one level below (throws BadParameter at level 0).
  Field base() const;

  /// True when both handles denote the same level of the same modulus chain.
  /// Levels that exist above either handle do not matter.
  bool same(const Field& other) const;

private:
  FieldTower tower_;
  int level_;
};

/// Checked element wrapper: operations between elements of different fields
/// throw FieldMismatch. Internals of the library work with raw indices plus a
/// Field context; this type is the safe API surface.
class FieldElement {
public:
  FieldElement(Field field, u64 index);

  const Field& field() const { return field_; }
  u64 index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(u64 e) const;
  FieldElement frobenius(u64 i) const;
  bool operator==(const FieldElement& o) const;

private:
  void check(const FieldElement& o) const;
  Field field_;
  u64 index_;
};

/// Lexicographically smallest monic irreducible polynomial of degree d over
/// `base`, as element indices, constant term first (length d+1, last entry 1).
/// Candidate order: constant coefficient least significant, each coefficient
/// ranging over the canonical element enumeration.
std::vector<u64> find_irreducible(const Field& base, u32 degree);

/// Rabin irreducibility test for a monic polynomial over `base`
/// (indices, constant term first).
bool is_irreducible(const Field& base, std::span<const u64> monic_poly);

/// View of a degree-m extension step: `top` is m-dimensional over `base`.
/// When m == 1 both handles are the same level and alpha() == 1, so the
/// power basis is {1}. Used for F_q < F_{q^m} and F_p < F_q flattening.
struct ExtView {
  Field base;
  Field top;
  u32 m;

  /// Coordinates of a top element over base (length m).
  std::vector<u64> down(u64 x) const;
  u64 up(std::span<const u64> c) const;
  u64 alpha() const;

  /// View with top == base (m = 1).
  static ExtView trivial(const Field& f) { return ExtView{f, f, 1}; }
  /// View of `top` over its immediate base (m = top.degree()).
  static ExtView of(const Field& top_field);
};

}  // namespace fflie::gf
