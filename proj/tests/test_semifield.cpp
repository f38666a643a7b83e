#include "doctest.h"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "fflie/constructions.hpp"
#include "fflie/semifield.hpp"

using namespace fflie;
using constructions::FieldSetup;
using gf::Field;
using gf::u64;
using linalg::Mat;
using linalg::Subspace;
using linalg::Vec;
using semifield::Isotopism;
using semifield::PreSemifield;
using semifield::Semifield;

namespace {

const FieldSetup kFs9 = FieldSetup::make(9, 1);

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

Vec basis_vec(int n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("semifield");

TEST_CASE("the degree-2 field semifield is the field it names") {
  const Field f3 = gf::FieldTower::prime(3).top();
  const Semifield S = semifield::field_semifield(f3, 2);
  CHECK(S.pre.n == 2);
  CHECK(S.pre.certified_f3);
  CHECK(S.identity == Vec{1, 0});

  const auto ac = semifield::assoc_comm(S.pre);
  CHECK(ac.is_commutative);
  CHECK(ac.is_associative);
  CHECK(!ac.comm_witness.has_value());

  const auto mid = semifield::middle_nucleus(S);
  CHECK(mid.size == 9);
  CHECK(mid.is_field);
  CHECK(mid.mid.dim() == 2);

  // multiplication agrees with GF(9) arithmetic through the coordinate map
  const Field f9 = kFs9.fq();
  linalg::SplitMix64 rng{11};
  for (int t = 0; t < 100; ++t) {
    const u64 x = rng.below(9), y = rng.below(9);
    CHECK(S.pre.mul(f9.coords(x), f9.coords(y)) == f9.coords(f9.mul(x, y)));
  }
}

TEST_CASE("dickson multiplication matches its closed formula") {
  const Field fq = kFs9.fq();
  const Semifield S = semifield::dickson(fq, 1, std::nullopt);
  const PreSemifield& P = S.pre;
  CHECK(P.n == 4);
  CHECK(P.field.card() == 3);
  CHECK(P.certified_f3);
  CHECK(S.identity == semifield::pair_to_vec(P, fq, 1, 0));

  const u64 k = fq.find_nonsquare();
  CHECK(k == 4);
  auto sigma = [&](u64 x) { return fq.frobenius(x, 1); };

  linalg::SplitMix64 rng{2024};
  for (int t = 0; t < 400; ++t) {
    const u64 a = rng.below(9), b = rng.below(9), c = rng.below(9), d = rng.below(9);
    const u64 first = fq.add(fq.mul(a, c), fq.mul(k, fq.mul(sigma(b), sigma(d))));
    const u64 second = fq.add(fq.mul(a, d), fq.mul(b, c));
    const Vec got = P.mul(semifield::pair_to_vec(P, fq, a, b),
                          semifield::pair_to_vec(P, fq, c, d));
    CHECK(got == semifield::pair_to_vec(P, fq, first, second));
  }

  // pair packing concatenates base-field coordinates
  CHECK(semifield::pair_to_vec(P, fq, 5, 0) == Vec{2, 1, 0, 0});
  CHECK(semifield::pair_to_vec(P, fq, 0, 5) == Vec{0, 0, 2, 1});

  // explicit nonsquare k reproduces the auto-selected tensor
  const Semifield S2 = semifield::dickson(fq, 1, 4);
  CHECK(S2.pre == P);
  CHECK(S2.identity == S.identity);
}

TEST_CASE("dickson is commutative, not associative, with a checkable witness") {
  const Semifield S = semifield::dickson(kFs9.fq(), 1, std::nullopt);
  const auto ac = semifield::assoc_comm(S.pre);
  CHECK(ac.is_commutative);
  CHECK(!ac.is_associative);
  REQUIRE(ac.assoc_witness.has_value());
  const auto [i, j, l] = *ac.assoc_witness;
  const int n = S.pre.n;
  const Vec lhs = S.pre.mul(S.pre.mul(basis_vec(n, i), basis_vec(n, j)), basis_vec(n, l));
  const Vec rhs = S.pre.mul(basis_vec(n, i), S.pre.mul(basis_vec(n, j), basis_vec(n, l)));
  CHECK(lhs != rhs);

  // the identity is two-sided
  for (int b = 0; b < n; ++b) {
    CHECK(S.pre.mul(S.identity, basis_vec(n, b)) == basis_vec(n, b));
    CHECK(S.pre.mul(basis_vec(n, b), S.identity) == basis_vec(n, b));
  }
}

TEST_CASE("dickson middle nucleus is the defining field F_q for p = 3, 5, 7") {
  for (const u64 p : {3, 5, 7}) {
    const FieldSetup fs = FieldSetup::make(p * p, 1);
    const Semifield S = semifield::dickson(fs.fq(), 1, std::nullopt);
    const auto mid = semifield::middle_nucleus(S);
    CHECK(mid.size == p * p);
    CHECK(mid.is_field);
    // the first block of the identity's line lies inside the nucleus
    CHECK(mid.mid.contains_vec(S.identity));
  }
}

TEST_CASE("dickson parameter validation") {
  const Field f3 = gf::FieldTower::prime(3).top();
  CHECK_THROWS_WITH_AS(semifield::dickson(f3, 1, std::nullopt),
                       doctest::Contains("UnsupportedParameters"), Error);
  const Field f4 = gf::FieldTower::prime(2).extended(2).top();
  CHECK_THROWS_WITH_AS(semifield::dickson(f4, 1, std::nullopt),
                       doctest::Contains("odd characteristic"), Error);
  const Field fq = kFs9.fq();
  CHECK_THROWS_WITH_AS(semifield::dickson(fq, 0, std::nullopt),
                       doctest::Contains("BadParameter"), Error);
  CHECK_THROWS_WITH_AS(semifield::dickson(fq, 2, std::nullopt),
                       doctest::Contains("sigma"), Error);
  CHECK_THROWS_WITH_AS(semifield::dickson(fq, 1, 1), doctest::Contains("nonsquare"), Error);
  CHECK_THROWS_WITH_AS(semifield::dickson(fq, 1, 99), doctest::Contains("out of range"), Error);
}

TEST_CASE("certify_f3 exposes the first zero-divisor pair") {
  // pointwise product on F_3 x F_3: (a,b)*(c,d) = (ac, bd)
  const Field f3 = gf::FieldTower::prime(3).top();
  PreSemifield P(f3, 2);
  P.t(0, 0, 0) = 1;
  P.t(1, 1, 1) = 1;
  const auto rep = semifield::certify_f3(P);
  CHECK(!rep.ok);
  CHECK(!P.certified_f3);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first == Vec{1, 0});
  CHECK(rep.witness->second == Vec{0, 1});
  CHECK(is_zero(P.mul(rep.witness->first, rep.witness->second)));

  CHECK_THROWS_WITH_AS(semifield::normalize_to_semifield(P),
                       doctest::Contains("NotCertified"), Error);

  PreSemifield F = semifield::field_semifield(f3, 2).pre;
  F.certified_f3 = false;
  CHECK(semifield::certify_f3(F).ok);
  CHECK(F.certified_f3);
}

TEST_CASE("the semifield Lie algebra is class-2 with C-block center") {
  const Semifield S = semifield::field_semifield(gf::FieldTower::prime(3).top(), 2);
  const liealg::LieAlgebra L = semifield::lie_of(S.pre);
  CHECK(L.dim() == 6);
  CHECK(validate(L).ok);
  const auto s = liealg::series(L);
  CHECK(s.nilpotency_class == 2);
  CHECK(s.derived_dim == 2);
  CHECK(s.derived == s.center_space);
  CHECK(s.is_stem);
  // [A-block, B-block] realizes the product in the C-block
  const Vec a = basis_vec(6, 0), b = basis_vec(6, 3);  // e_0 and B-block e_1
  const Vec br = L.bracket(a, b);
  const Vec prod = S.pre.mul(Vec{1, 0}, Vec{0, 1});
  CHECK(Vec{br[4], br[5]} == prod);
}

TEST_CASE("pair centralizers distinguish dickson from the field") {
  const Field fq = kFs9.fq();
  const Semifield D = semifield::dickson(fq, 1, std::nullopt);
  const Vec one = semifield::pair_to_vec(D.pre, fq, 1, 0);
  const Vec i_elt = semifield::pair_to_vec(D.pre, fq, 0, 1);
  const auto rep = semifield::centralizer_pair(D.pre, one, i_elt);
  CHECK(rep.c.dim() == 4);
  CHECK(!rep.abelian);
  REQUIRE(rep.witness.has_value());
  const auto& [u, v] = *rep.witness;
  const int n = D.pre.n;
  const Vec a2(u.begin(), u.begin() + n), b2(u.begin() + n, u.end());
  const Vec a3(v.begin(), v.begin() + n), b3(v.begin() + n, v.end());
  CHECK(D.pre.mul(a2, b3) != D.pre.mul(a3, b2));
  CHECK(rep.c.contains_vec(u));
  CHECK(rep.c.contains_vec(v));

  const Semifield F = semifield::field_semifield(gf::FieldTower::prime(3).top(), 2);
  const auto frep =
      semifield::centralizer_pair(F.pre, basis_vec(2, 0), basis_vec(2, 1));
  CHECK(frep.abelian);
  CHECK(!frep.witness.has_value());
}

TEST_CASE("isotopisms transport semifields and lift to Lie isomorphisms") {
  const Semifield D = semifield::dickson(kFs9.fq(), 1, std::nullopt);
  const int n = D.pre.n;
  for (u64 seed : {1u, 2u, 3u}) {
    const Isotopism iso{linalg::random_invertible(D.pre.field, n, seed),
                        linalg::random_invertible(D.pre.field, n, seed + 100),
                        linalg::random_invertible(D.pre.field, n, seed + 200)};
    const PreSemifield F2 = semifield::apply_isotopism(D.pre, iso);
    CHECK(F2.certified_f3);
    CHECK(semifield::verify_isotopism(D.pre, F2, iso));
    const auto lift = semifield::lie_iso_from_isotopism(D.pre, F2, iso);
    CHECK(lift.verified);
    CHECK(linalg::rank(lift.map) == 3 * n);

    // breaking one row of C invalidates the contract
    Isotopism broken = iso;
    for (int c = 0; c < n; ++c)
      std::swap(broken.C.at(0, c), broken.C.at(1, c));
    CHECK(!semifield::verify_isotopism(D.pre, F2, broken));
    CHECK_THROWS_WITH_AS(semifield::lie_iso_from_isotopism(D.pre, F2, broken),
                         doctest::Contains("IsotopismInvalid"), Error);
  }
}

TEST_CASE("normalization turns a scrambled field back into a field") {
  const Semifield F = semifield::field_semifield(gf::FieldTower::prime(3).top(), 2);
  const Isotopism iso{linalg::random_invertible(F.pre.field, 2, 7),
                      linalg::random_invertible(F.pre.field, 2, 8),
                      linalg::random_invertible(F.pre.field, 2, 9)};
  const PreSemifield scrambled = semifield::apply_isotopism(F.pre, iso);
  const auto [S, wit] = semifield::normalize_to_semifield(scrambled);
  CHECK(semifield::verify_isotopism(scrambled, S.pre, wit));
  const auto ac = semifield::assoc_comm(S.pre);
  CHECK(ac.is_commutative);
  CHECK(ac.is_associative);
  for (int b = 0; b < 2; ++b) {
    CHECK(S.pre.mul(S.identity, basis_vec(2, b)) == basis_vec(2, b));
    CHECK(S.pre.mul(basis_vec(2, b), S.identity) == basis_vec(2, b));
  }
  const auto mid = semifield::middle_nucleus(S);
  CHECK(mid.size == 9);
  CHECK(mid.is_field);
}

TEST_CASE("extract inverts lie_of through the greedy abelian pair") {
  for (const bool use_dickson : {false, true}) {
    const Semifield S =
        use_dickson ? semifield::dickson(kFs9.fq(), 1, std::nullopt)
                    : semifield::field_semifield(gf::FieldTower::prime(3).top(), 2);
    const liealg::LieAlgebra L = semifield::lie_of(S.pre);
    const auto [astar, bstar] = semifield::abelian_star_pair(L);
    CHECK(astar.dim() == 2 * S.pre.n);
    CHECK(bstar.dim() == 2 * S.pre.n);
    CHECK(!(astar == bstar));
    CHECK(L.is_abelian_subspace(astar));
    CHECK(L.is_abelian_subspace(bstar));
    const PreSemifield back = semifield::extract(L, astar, bstar);
    CHECK(back == S.pre);
    CHECK(back.certified_f3);
  }
}

TEST_CASE("extract rejects violated hypotheses by name") {
  const Field f3 = gf::FieldTower::prime(3).top();
  const Semifield S = semifield::field_semifield(f3, 2);
  const liealg::LieAlgebra L = semifield::lie_of(S.pre);
  const auto [astar, bstar] = semifield::abelian_star_pair(L);

  CHECK_THROWS_WITH_AS(semifield::extract(constructions::abelian(f3, 6), astar, bstar),
                       doctest::Contains("class 2"), Error);
  CHECK_THROWS_WITH_AS(semifield::extract(L, liealg::center(L), bstar),
                       doctest::Contains("wrong dimension"), Error);
  // a non-abelian 4-dimensional subspace containing the center
  const Subspace bad = Subspace::span(f3, 6, {basis_vec(6, 0), basis_vec(6, 3),
                                              basis_vec(6, 4), basis_vec(6, 5)});
  CHECK(!L.is_abelian_subspace(bad));
  CHECK_THROWS_WITH_AS(semifield::extract(L, bad, bstar),
                       doctest::Contains("not abelian"), Error);
  CHECK_THROWS_WITH_AS(semifield::abelian_star_pair(constructions::u_n_restricted(
                           5, FieldSetup::make(3, 1))),
                       doctest::Contains("HypothesisFailure"), Error);
}

TEST_SUITE_END();
