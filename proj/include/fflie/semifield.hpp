#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fflie/liealg.hpp"

namespace fflie::semifield {

using gf::Field;
using gf::u32;
using gf::u64;
using liealg::LieAlgebra;
using linalg::Mat;
using linalg::Subspace;
using linalg::Vec;

/// A biadditive multiplication on F^n stored as a bilinear tensor:
/// mult[i][j] = coordinate vector of e_i * e_j. Two-sided distributivity is
/// structural; whether every nonzero left/right multiplication is invertible
/// (no zero divisors) is certified separately.
///
/// The tensor lives over whichever field level makes the multiplication
/// bilinear. A twisted product such as Dickson's, which is additive but only
/// F_p-bilinear, is stored over the prime field with n = [F : F_p].
struct PreSemifield {
  Field field;
  int n;
  std::vector<u64> mult;  // (i*n + j)*n + k
  bool certified_f3 = false;

  PreSemifield(Field f, int n_);
  u64 t(int i, int j, int k) const {
    return mult[(static_cast<size_t>(i) * n + j) * n + k];
  }
  u64& t(int i, int j, int k) {
    return mult[(static_cast<size_t>(i) * n + j) * n + k];
  }

  Vec mul(std::span<const u64> a, std::span<const u64> b) const;
  /// Matrix of x -> a * x.
  Mat left_mul(std::span<const u64> a) const;
  /// Matrix of x -> x * a.
  Mat right_mul(std::span<const u64> a) const;

  bool operator==(const PreSemifield& o) const;
};

struct Semifield {
  PreSemifield pre;
  Vec identity;
};

struct F3Report {
  bool ok = false;
  /// First zero-divisor pair in canonical order when !ok: a*b = 0, a,b != 0.
  std::optional<std::pair<Vec, Vec>> witness;
};
/// Certifies axiom F3: every left multiplication by a nonzero element is
/// invertible (right multiplications are checked too; the verdicts agree for
/// finite biadditive multiplications and both are computed). Sets
/// certified_f3 on success.
F3Report certify_f3(PreSemifield& P);

/// Dickson commutative semifield on F_q x F_q, q = p^s odd with s > 1:
/// (a,b)*(c,d) = (ac + k sigma(b) sigma(d), ad + bc), sigma = frob_i
/// non-identity, k a nonsquare. Stored over the prime field (n = 2s); the
/// identity is (1,0). k "auto" picks find_nonsquare(F_q).
/// The F_q level must be a degree-s extension of the prime level.
Semifield dickson(const Field& fq, u32 sigma_index, std::optional<u64> k_or_auto);

/// Multiplication tensor of the field F_{q^n} in the power basis of the
/// deterministic degree-n extension of `fq`, as a semifield over F_q.
Semifield field_semifield(const Field& fq, u32 n);

/// Pack a pair (a, b) over F_q into the flat coordinates used by a
/// pre-semifield stored over a subfield level (e.g. Dickson over F_p).
Vec pair_to_vec(const PreSemifield& P, const Field& fq, u64 a, u64 b);

struct AssocCommReport {
  bool is_commutative = false;
  bool is_associative = false;
  std::optional<std::pair<int, int>> comm_witness;       // basis pair
  std::optional<std::tuple<int, int, int>> assoc_witness;  // basis triple
};
AssocCommReport assoc_comm(const PreSemifield& P);

struct MidReport {
  Subspace mid;
  u64 size = 0;
  bool is_field = false;
};
/// Middle nucleus Mid = {z : x*(z*y) = (x*z)*y for all x,y}, computed as the
/// kernel of z -> (associator(e_i, z, e_j))_{i,j}; the associator is linear
/// in the middle slot. is_field checks closure, identity membership,
/// commutativity/associativity inside Mid, and two-sided inverses for every
/// nonzero element (exhaustive; |Mid| must stay within budget).
MidReport middle_nucleus(const Semifield& F, u64 budget = 78125);

/// Semifield Lie algebra L(F) = F^3, [(a1,b1,c1),(a2,b2,c2)] =
/// (0,0, a1*b2 - a2*b1); basis ordered A-block, B-block, C-block.
LieAlgebra lie_of(const PreSemifield& P);

struct PairCentralizerReport {
  Subspace c;  // inside F x F (ambient 2n)
  bool abelian = false;
  /// First basis pair u = (a2,b2), v = (a3,b3) of c with a2*b3 != a3*b2.
  std::optional<std::pair<Vec, Vec>> witness;
};
/// C_(a,b) = {(a2,b2) : a*b2 = a2*b}; abelian iff C x F is abelian in lie_of.
PairCentralizerReport centralizer_pair(const PreSemifield& P, std::span<const u64> a,
                                       std::span<const u64> b);

struct Isotopism {
  Mat A, B, C;
};

/// mult2(a, b) := C(A^-1(a) *1 B^-1(b)); SingularMap if any map is singular.
PreSemifield apply_isotopism(const PreSemifield& F1, const Isotopism& iso);
/// Contract C(a *1 b) = A(a) *2 B(b) on all basis pairs.
bool verify_isotopism(const PreSemifield& F1, const PreSemifield& F2, const Isotopism& iso);

/// Normalize a certified pre-semifield to an isotopic semifield:
/// e = first nonzero element canonically, a o b := solve(R_e, a) * solve(L_e, b),
/// identity e*e. The witness (R_e, L_e, id) satisfies
/// verify_isotopism(input, result, witness).
std::pair<Semifield, Isotopism> normalize_to_semifield(const PreSemifield& P);

struct LieIsoReport {
  Mat map;  // block diagonal (A, B, C) on F^3n
  bool verified = false;
};
/// The block map (a,b,c) -> (Aa, Bb, Cc) from lie_of(F1) to lie_of(F2);
/// requires verify_isotopism(F1, F2, iso) (IsotopismInvalid otherwise);
/// verified = bijective and bracket-preserving on all basis pairs.
LieIsoReport lie_iso_from_isotopism(const PreSemifield& F1, const PreSemifield& F2,
                                    const Isotopism& iso);

/// Reconstruct a pre-semifield from a class-2 Camina Lie algebra of dimension
/// 3n with two abelian subspaces Astar, Bstar of dimension 2n containing
/// L' = Z(L): pick complements A, B of L' inside them (greedy standard-vector
/// completion), then mult(a, b) = coordinates of [a, b] in the L' basis.
/// Violated hypotheses raise HypothesisFailure naming the failed check.
PreSemifield extract(const LieAlgebra& L, const Subspace& Astar, const Subspace& Bstar);

/// Greedy search for two distinct abelian subspaces of dimension 2n
/// containing L' (n = dim L'), as extract() needs: the first grows L' by
/// standard basis vectors in index order while the extension stays abelian;
/// the second does the same skipping vectors already inside the first.
/// HypothesisFailure if either search stalls below dimension 2n.
std::pair<Subspace, Subspace> abelian_star_pair(const LieAlgebra& L);

}  // namespace fflie::semifield
