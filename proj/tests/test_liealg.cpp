#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "fflie/constructions.hpp"
#include "fflie/liealg.hpp"

using namespace fflie;
using constructions::FieldSetup;
using gf::u64;
using liealg::EnumOptions;
using liealg::LieAlgebra;
using linalg::Subspace;
using linalg::Vec;

namespace {

Vec e(int dim, int i) {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

/// [x, L] as a subspace: the column space of ad_x.
Subspace image_of_ad(const LieAlgebra& L, const Vec& x) {
  return Subspace::row_space(L.ad(x).transposed());
}

}  // namespace

TEST_SUITE_BEGIN("liealg");

TEST_CASE("set_bracket writes both orientations antisymmetrically") {
  const FieldSetup fs = FieldSetup::make(5, 1);
  LieAlgebra L(fs.fq(), 3);
  L.set_bracket(0, 1, Vec{0, 1, 0});
  CHECK(L.c(0, 1, 1) == 1);
  CHECK(L.c(1, 0, 1) == 4);  // -1 mod 5
  CHECK(L.c(0, 0, 1) == 0);
  CHECK(validate(L).ok);

  // bilinearity of the evaluated bracket: [2 e0 + e2, 3 e1] = 6 e1 = e1
  CHECK(L.bracket(Vec{2, 0, 1}, Vec{0, 3, 0}) == Vec{0, 1, 0});
}

TEST_CASE("validate flags a Jacobi violation") {
  // [e0,e1] = e1, [e0,e2] = e2, [e1,e2] = e0 gives J(e0,e1,e2) = 2 e0 != 0
  const FieldSetup fs = FieldSetup::make(3, 1);
  LieAlgebra L(fs.fq(), 3);
  L.set_bracket(0, 1, Vec{0, 1, 0});
  L.set_bracket(0, 2, Vec{0, 0, 1});
  L.set_bracket(1, 2, Vec{1, 0, 0});
  const auto rep = validate(L);
  CHECK(!rep.ok);
  CHECK(rep.violation == "jacobi");
  CHECK(rep.i >= 0);
  CHECK_THROWS_WITH_AS(liealg::ensure_valid(L), doctest::Contains("ValidationFailure"), Error);
}

TEST_CASE("heisenberg breadth data is the frozen histogram") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const LieAlgebra H = constructions::u_n_restricted(3, fs);
  const auto br = liealg::breadth_report(H);
  const std::vector<std::pair<int, u64>> expected{{0, 3}, {1, 24}};
  CHECK(br.histogram == expected);
  CHECK(br.type_set == std::vector<int>{0, 1});

  const auto fp = liealg::fingerprint(H);
  CHECK(fp.dim == 3);
  CHECK(fp.nilpotency_class == 2);
  CHECK(fp.gamma_dims == std::vector<int>{3, 1, 0});
  CHECK(fp.center_dim == 1);
  CHECK(fp.derived_dim == 1);
  CHECK(fp.is_stem);
  CHECK(fp.is_camina);
  CHECK(fp.all_noncentral_centralizers_abelian);

  // fingerprints of two independent constructions compare equal
  CHECK(fp == liealg::fingerprint(constructions::u_n_restricted(3, fs)));
}

TEST_CASE("scalar restriction of u3 doubles the breadth, not the class") {
  const FieldSetup fs = FieldSetup::make(3, 2);
  const LieAlgebra L = constructions::u_n_restricted(3, fs);
  CHECK(L.dim() == 6);
  const auto br = liealg::breadth_report(L);
  const std::vector<std::pair<int, u64>> expected{{0, 9}, {2, 720}};
  CHECK(br.histogram == expected);
  CHECK(br.type_set == std::vector<int>{0, 2});
  const auto s = liealg::series(L);
  CHECK(s.nilpotency_class == 2);
  CHECK(s.center_dim == 2);
}

TEST_CASE("breadth equals dim minus centralizer dimension") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const LieAlgebra G = constructions::g_m_direct(fs);
  linalg::SplitMix64 rng{99};
  for (int t = 0; t < 50; ++t) {
    Vec x(G.dim(), 0);
    for (auto& c : x) c = rng.below(3);
    CHECK(G.breadth(x) == G.dim() - G.centralizer(x).dim());
  }
  // hand check: C(a) = {y = z = 0} has dimension 3, so b(a) = 2
  CHECK(G.breadth(e(5, 0)) == 2);
  CHECK(G.centralizer(e(5, 0)).dim() == 3);
  // ad_a restricted to the derived subalgebra only reaches [a, c] = d
  CHECK(G.relative_breadth(e(5, 0), liealg::derived_subalgebra(G)) == 1);
}

TEST_CASE("coset enumeration walks one representative per central coset") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const LieAlgebra G = constructions::g_m_direct(fs);
  const Subspace Z = liealg::center(G);
  CHECK(Z.dim() == 2);
  const auto en = liealg::coset_representatives(G, Z, EnumOptions{});
  CHECK(en.card == 3);
  CHECK(en.count == 27);  // 3^(5-2)
  CHECK(en.free_positions == Z.complement_positions());

  std::set<Vec> seen;
  Vec rep(G.dim(), 0);
  for (u64 i = 0; i < en.count; ++i) {
    std::fill(rep.begin(), rep.end(), 0);
    en.decode(i, rep);
    for (int p : Z.pivots()) CHECK(rep[p] == 0);
    seen.insert(rep);
  }
  CHECK(seen.size() == en.count);
}

TEST_CASE("enumeration guard throws and the budget is adjustable") {
  const FieldSetup fs = FieldSetup::make(3, 2);
  const LieAlgebra L = constructions::u_n_restricted(3, fs);  // 81 representatives
  CHECK_THROWS_WITH_AS(liealg::breadth_report(L, EnumOptions{.budget = 10}),
                       doctest::Contains("BudgetExceeded"), Error);
  CHECK_NOTHROW(liealg::breadth_report(L, EnumOptions{.budget = 81}));
}

TEST_CASE("worker count and scalar-orbit mode do not change any report") {
  const FieldSetup fs = FieldSetup::make(5, 1);
  const LieAlgebra G = constructions::g_m_direct(fs);
  const auto base = liealg::breadth_report(G, EnumOptions{});
  for (int workers : {2, 4}) {
    const auto r = liealg::breadth_report(G, EnumOptions{.workers = workers});
    CHECK(r.histogram == base.histogram);
    CHECK(r.type_set == base.type_set);
  }
  const auto orb = liealg::breadth_report(G, EnumOptions{.scalar_orbits = true});
  CHECK(orb.histogram == base.histogram);
  CHECK(orb.type_set == base.type_set);

  const auto c1 = liealg::camina(G, EnumOptions{});
  const auto c2 = liealg::camina(G, EnumOptions{.workers = 4, .scalar_orbits = true});
  CHECK(c1.is_camina == c2.is_camina);
}

TEST_CASE("camina failure produces a checkable witness") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const LieAlgebra G = constructions::g_m_direct(fs);
  const auto rep = liealg::camina(G);
  CHECK(!rep.is_camina);
  CHECK(!rep.degenerate);
  REQUIRE(rep.witness.has_value());
  const Subspace derived = liealg::derived_subalgebra(G);
  CHECK(!derived.contains_vec(*rep.witness));
  CHECK(!(image_of_ad(G, *rep.witness) == derived));

  // an abelian algebra is degenerate for this condition
  const auto ab = liealg::camina(constructions::abelian(fs.fq(), 3));
  CHECK(ab.degenerate);
}

TEST_CASE("abelian-centralizer scan accepts g and reports witnesses when present") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const LieAlgebra G = constructions::g_m_direct(fs);
  const auto rep = liealg::noncentral_centralizers_abelian(G);
  CHECK(rep.all_abelian);
  CHECK(!rep.witness_x.has_value());

  // u5 has noncentral elements with non-abelian centralizer
  const LieAlgebra U5 = constructions::u_n_restricted(5, fs);
  const auto neg = liealg::noncentral_centralizers_abelian(U5);
  CHECK(!neg.all_abelian);
  REQUIRE(neg.witness_x.has_value());
  REQUIRE(neg.witness_pair.has_value());
  const auto& [u, v] = *neg.witness_pair;
  const Subspace C = U5.centralizer(*neg.witness_x);
  CHECK(!liealg::center(U5).contains_vec(*neg.witness_x));
  CHECK(C.contains_vec(u));
  CHECK(C.contains_vec(v));
  CHECK(U5.bracket(u, v) != Vec(U5.dim(), 0));
  CHECK(!U5.is_abelian_subspace(C));
}

TEST_CASE("subspace predicates and generated subalgebras") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const LieAlgebra G = constructions::g_m_direct(fs);
  CHECK(G.is_abelian_subspace(liealg::center(G)));
  CHECK(G.is_abelian_subspace(liealg::derived_subalgebra(G)));
  CHECK(!G.is_abelian_subspace(Subspace::full(fs.fq(), 5)));

  // a and b generate everything; a central element generates only its line
  CHECK(liealg::generated(G, {e(5, 0), e(5, 1)}).dim() == 5);
  CHECK(liealg::generated(G, {e(5, 2)}).dim() == 1);
  CHECK(liealg::generated(G, {}).dim() == 0);

  const Subspace ab = Subspace::span(fs.fq(), 5, {e(5, 0), e(5, 1)});
  CHECK(liealg::subspace_bracket(G, ab, ab).dim() == 1);  // span of [a, b]
}

TEST_CASE("series data for the abelian algebra") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const auto s = liealg::series(constructions::abelian(fs.fq(), 3));
  CHECK(s.gamma_dims == std::vector<int>{3, 0});
  CHECK(s.nilpotency_class == 1);
  CHECK(s.derived_dim == 0);
  CHECK(s.center_dim == 3);
  CHECK(!s.is_stem);
}

TEST_CASE("quotient by the center is bracket-preserving") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const LieAlgebra G = constructions::g_m_direct(fs);
  const auto [Q, proj] = liealg::quotient(G, liealg::center(G));
  CHECK(Q.dim() == 3);
  CHECK(validate(Q).ok);
  for (int i = 0; i < G.dim(); ++i) {
    for (int j = i + 1; j < G.dim(); ++j) {
      Vec bi(G.dim(), 0), bj(G.dim(), 0);
      bi[i] = 1;
      bj[j] = 1;
      const Vec lhs = proj.mul_vec(G.bracket(bi, bj));
      const Vec rhs = Q.bracket(proj.mul_vec(bi), proj.mul_vec(bj));
      CHECK(lhs == rhs);
    }
  }
  // the line through a is not an ideal: [a, b] lands outside it
  CHECK_THROWS_WITH_AS(liealg::quotient(G, Subspace::span(fs.fq(), 5, {e(5, 0)})),
                       doctest::Contains("NotAnIdeal"), Error);
}

TEST_CASE("check_hom separates its three ingredients") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  const auto [V, pres] = constructions::v_presentation(fs);
  const LieAlgebra G = constructions::g_m_direct(fs);

  const auto good = liealg::check_hom(pres, G, constructions::v_standard_images(fs));
  CHECK(good.relations_hold);
  CHECK(good.images_generate);
  CHECK(good.dims_match);
  CHECK(good.is_isomorphism_evidence);

  // zero images satisfy every relation but generate nothing
  const std::vector<Vec> zeros(pres.generators.size(), Vec(G.dim(), 0));
  const auto z = liealg::check_hom(pres, G, zeros);
  CHECK(z.relations_hold);
  CHECK(!z.images_generate);
  CHECK(!z.is_isomorphism_evidence);

  // the identity assignment on basis vectors violates the relations
  std::vector<Vec> ident;
  for (size_t i = 0; i < pres.generators.size(); ++i) ident.push_back(e(G.dim(), static_cast<int>(i)));
  const auto bad = liealg::check_hom(pres, G, ident);
  CHECK(!bad.relations_hold);
  CHECK(!bad.is_isomorphism_evidence);
}

TEST_CASE("algebra equality compares tensors, field, and dimension") {
  const FieldSetup fs = FieldSetup::make(3, 1);
  LieAlgebra A(fs.fq(), 3, {"x", "y", "z"});
  LieAlgebra B(fs.fq(), 3);
  CHECK(A.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(A == B);  // labels are not structural
  B.set_bracket(0, 1, Vec{0, 0, 1});
  CHECK(!(A == B));
  CHECK(constructions::u_n_restricted(3, fs) == constructions::u_n_restricted(3, fs));
}

TEST_SUITE_END();
