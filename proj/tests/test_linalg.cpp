#include "doctest.h"

#include <algorithm>
#include <vector>

#include "fflie/linalg.hpp"

using namespace fflie;
using gf::Field;
using gf::FieldTower;
using gf::u64;
using linalg::Mat;
using linalg::Subspace;
using linalg::Vec;

namespace {

const Field kF5 = FieldTower::prime(5).top();
const Field kF9 = FieldTower::prime(3).extended(2).top();

Mat mat5(const std::vector<Vec>& rows) { return Mat::from_rows(kF5, rows); }

Vec row_of(const Mat& m, int r) {
  const auto s = m.row(r);
  return Vec(s.begin(), s.end());
}

bool in_kernel(const Mat& m, std::span<const u64> v) {
  const Vec image = m.mul_vec(v);
  return std::all_of(image.begin(), image.end(), [](u64 x) { return x == 0; });
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rref of a hand-reduced matrix over F_5") {
  // row2 = 2*row1 mod 5, so the rank drops to 2 with pivots at columns 0, 2
  const Mat m = mat5({{1, 2, 3, 4}, {2, 4, 1, 3}, {0, 0, 2, 1}});
  const auto r = linalg::rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 2});
  CHECK(row_of(r.rref, 0) == Vec{1, 2, 0, 0});
  CHECK(row_of(r.rref, 1) == Vec{0, 0, 1, 3});

  const Subspace k = linalg::kernel(m);
  CHECK(k.dim() == 2);
  CHECK(row_of(k.basis(), 0) == Vec{1, 2, 0, 0});
  CHECK(row_of(k.basis(), 1) == Vec{0, 0, 1, 3});
  for (int i = 0; i < k.dim(); ++i) CHECK(in_kernel(m, k.basis().row(i)));
}

TEST_CASE("solve finds a witness exactly when the system is consistent") {
  const Mat m = mat5({{1, 2, 3, 4}, {2, 4, 1, 3}, {0, 0, 2, 1}});
  // b = column span member: m * (1, 0, 1, 0) = (4, 3, 2)
  const auto sol = linalg::solve(m, Vec{4, 3, 2});
  REQUIRE(sol.has_value());
  CHECK(m.mul_vec(*sol) == Vec{4, 3, 2});
  // row2 = 2*row1 forces b2 = 2*b1 on any consistent right-hand side
  CHECK(!linalg::solve(m, Vec{1, 0, 0}).has_value());
  CHECK(linalg::solve(m, Vec{1, 2, 3}).has_value());
  CHECK_THROWS_WITH_AS(linalg::solve(m, Vec{1, 2}), doctest::Contains("ShapeError"), Error);
}

TEST_CASE("inverse round-trips and rejects singular input") {
  const Mat a = mat5({{1, 2}, {3, 4}});  // det = 4 - 6 = 3 != 0
  const Mat ai = linalg::inverse(a);
  CHECK(a.mul(ai) == Mat::identity(kF5, 2));
  CHECK(ai.mul(a) == Mat::identity(kF5, 2));
  const Mat s = mat5({{1, 2}, {2, 4}});
  CHECK_THROWS_WITH_AS(linalg::inverse(s), doctest::Contains("SingularMap"), Error);
}

TEST_CASE("matrix product over GF(9) matches the schoolbook computation") {
  const u64 i = kF9.generator();
  const Mat a = Mat::from_rows(kF9, {{1, i}, {2, 0}});
  const Mat b = Mat::from_rows(kF9, {{i, 1}, {1, 2}});
  const Mat c = a.mul(b);
  CHECK(c.at(0, 0) == kF9.add(i, i));              // 1*i + i*1
  CHECK(c.at(0, 1) == kF9.add(1, kF9.mul(i, 2)));  // 1*1 + i*2
  CHECK(c.at(1, 0) == kF9.mul(2, i));
  CHECK(c.at(1, 1) == 2);
  CHECK_THROWS_WITH_AS(a.mul(mat5({{1, 2}, {3, 4}})), doctest::Contains("FieldMismatch"), Error);
}

TEST_CASE("subspaces are canonical regardless of the spanning set") {
  const Vec u{1, 2, 3, 4}, v{0, 0, 2, 1};
  const Subspace s1 = Subspace::span(kF5, 4, {u, v});
  const Subspace s2 = Subspace::span(kF5, 4, {v, u});
  const Subspace s3 = Subspace::span(kF5, 4, {u, v, u});
  CHECK(s1 == s2);
  CHECK(s1 == s3);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains_vec(u));
  CHECK(s1.contains_vec(Vec{2, 4, 1, 3}));   // 2u
  CHECK(!s1.contains_vec(Vec{0, 1, 0, 0}));  // members satisfy x1 = 2 x0

  // the canonical basis is the RREF of the generators
  CHECK(row_of(s1.basis(), 0) == Vec{1, 2, 0, 0});
  CHECK(row_of(s1.basis(), 1) == Vec{0, 0, 1, 3});
  CHECK(s1.pivots() == std::vector<int>{0, 2});

  // coordinates_of reconstructs members in the canonical basis
  const auto coords = s1.coordinates_of(u);
  REQUIRE(coords.has_value());
  Vec rebuilt(4, 0);
  for (int r = 0; r < s1.dim(); ++r)
    for (int c = 0; c < 4; ++c)
      rebuilt[c] = kF5.add(rebuilt[c], kF5.mul((*coords)[r], s1.basis().at(r, c)));
  CHECK(rebuilt == u);
  CHECK(!s1.coordinates_of(Vec{0, 1, 0, 0}).has_value());
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  const Subspace a = Subspace::span(kF5, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const Subspace b = Subspace::span(kF5, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  const Subspace s = a.sum(b);
  const Subspace i = a.intersect(b);
  CHECK(s.dim() == 3);
  CHECK(i.dim() == 1);
  CHECK(row_of(i.basis(), 0) == Vec{0, 1, 0, 0});
  CHECK(s.dim() + i.dim() == a.dim() + b.dim());
  CHECK(s.contains(a));
  CHECK(s.contains(b));
  CHECK(a.contains(i));

  const Subspace z = Subspace::zero(kF5, 4);
  const Subspace f = Subspace::full(kF5, 4);
  CHECK(z.dim() == 0);
  CHECK(f.dim() == 4);
  CHECK(a.sum(z) == a);
  CHECK(a.intersect(f) == a);
  CHECK(a.complement_positions() == std::vector<int>{2, 3});
}

TEST_CASE("reduce_vec eliminates exactly the pivot coordinates") {
  const Subspace a = Subspace::span(kF5, 3, {{1, 2, 0}, {0, 0, 1}});
  const Vec r = a.reduce_vec(Vec{3, 2, 4});  // not a member: members look like (a, 2a, b)
  CHECK(r[0] == 0);
  CHECK(r[2] == 0);
  CHECK(r[1] != 0);
  // reduction is a coset representative: it differs from the input by a member
  Vec diff(3, 0);
  const Vec input{3, 2, 4};
  for (int c = 0; c < 3; ++c) diff[c] = kF5.sub(input[c], r[c]);
  CHECK(a.contains_vec(diff));
  CHECK(a.reduce_vec(a.basis().row(0)) == Vec{0, 0, 0});
}

TEST_CASE("random_invertible is seeded, deterministic, and invertible") {
  const Mat a = linalg::random_invertible(kF9, 5, 42);
  const Mat b = linalg::random_invertible(kF9, 5, 42);
  const Mat c = linalg::random_invertible(kF9, 5, 43);
  CHECK(a == b);
  CHECK(!(a == c));
  CHECK(linalg::rank(a) == 5);
  CHECK(linalg::rank(c) == 5);

  linalg::SplitMix64 r1{7}, r2{7};
  for (int t = 0; t < 10; ++t) CHECK(r1.next() == r2.next());
}

TEST_SUITE_END();
