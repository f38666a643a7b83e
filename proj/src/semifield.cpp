#include "fflie/semifield.hpp"

#include <algorithm>

namespace fflie::semifield {

namespace {

constexpr u64 kEnumLimit = u64(1) << 24;

u64 space_size(u64 q, int n) {
  u64 c = 1;
  for (int t = 0; t < n; ++t) {
    if (c > kEnumLimit / q) fail("BadParameter", "element enumeration too large");
    c *= q;
  }
  return c;
}

void decode_vec(u64 index, u64 q, Vec& out) {
  for (auto& v : out) {
    v = index % q;
    index /= q;
  }
}

void check_compatible(const PreSemifield& a, const PreSemifield& b) {
  if (a.n != b.n || !a.field.same(b.field))
    fail("ShapeError", "pre-semifields have different shapes or fields");
}

}  // namespace

PreSemifield::PreSemifield(Field f, int n_) : field(std::move(f)), n(n_) {
  if (n < 1) fail("ShapeError", "need dimension >= 1");
  mult.assign(static_cast<size_t>(n) * n * n, 0);
}

Vec PreSemifield::mul(std::span<const u64> a, std::span<const u64> b) const {
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    fail("ShapeError", "bad vector length");
  Vec r(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const u64 ab = field.mul(a[i], b[j]);
      for (int k = 0; k < n; ++k) {
        const u64 v = t(i, j, k);
        if (v != 0) r[k] = field.add(r[k], field.mul(ab, v));
      }
    }
  }
  return r;
}

Mat PreSemifield::left_mul(std::span<const u64> a) const {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const u64 v = t(i, j, k);
        if (v != 0) m.at(k, j) = field.add(m.at(k, j), field.mul(a[i], v));
      }
  }
  return m;
}

Mat PreSemifield::right_mul(std::span<const u64> a) const {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const u64 v = t(j, i, k);
        if (v != 0) m.at(k, j) = field.add(m.at(k, j), field.mul(a[i], v));
      }
  }
  return m;
}

bool PreSemifield::operator==(const PreSemifield& o) const {
  return n == o.n && field.same(o.field) && mult == o.mult;
}

F3Report certify_f3(PreSemifield& P) {
  const u64 q = P.field.card();
  const u64 count = space_size(q, P.n);
  bool left_ok = true, right_ok = true;
  u64 first_bad = 0;
  Vec a(P.n);
  for (u64 idx = 1; idx < count; ++idx) {
    decode_vec(idx, q, a);
    const bool l = linalg::rank(P.left_mul(a)) == P.n;
    const bool r = linalg::rank(P.right_mul(a)) == P.n;
    if (!l && left_ok) {
      left_ok = false;
      first_bad = idx;
    }
    if (!r) right_ok = false;
  }
  if (left_ok != right_ok)
    fail("ValidationFailure", "left/right zero-divisor verdicts disagree (internal bug)");
  F3Report rep;
  rep.ok = left_ok;
  if (rep.ok) {
    P.certified_f3 = true;
    return rep;
  }
  decode_vec(first_bad, q, a);
  Vec b(P.n);
  for (u64 idx = 1; idx < count; ++idx) {
    decode_vec(idx, q, b);
    Vec prod = P.mul(a, b);
    if (std::all_of(prod.begin(), prod.end(), [](u64 v) { return v == 0; })) {
      rep.witness = std::make_pair(a, b);
      break;
    }
  }
  return rep;
}

Semifield dickson(const Field& fq, u32 sigma_index, std::optional<u64> k_or_auto) {
  const u32 p = fq.characteristic();
  if (p == 2) fail("UnsupportedParameters", "Dickson construction needs odd characteristic");
  if (fq.level() != 1)
    fail("UnsupportedParameters", "Dickson base field must be a direct extension of the prime field");
  const u32 s = fq.degree();
  if (s < 2) fail("UnsupportedParameters", "Dickson construction needs q = p^s with s > 1");
  if (sigma_index < 1 || sigma_index >= s)
    fail("BadParameter", "sigma index must satisfy 1 <= i < s (sigma non-identity)");

  u64 k;
  if (k_or_auto) {
    k = *k_or_auto;
    if (k >= fq.card()) fail("BadParameter", "k out of range");
    bool square = false;
    for (u64 y = 0; y < fq.card() && !square; ++y)
      if (fq.mul(y, y) == k) square = true;
    if (square) fail("BadParameter", "k must be a nonsquare");
  } else {
    k = fq.find_nonsquare();
  }

  const Field fp = fq.base();
  const int n = static_cast<int>(2 * s);
  PreSemifield P(fp, n);

  // basis element blocks: (beta_t, 0) for t < s, (0, beta_t) for t >= s
  auto fq_part = [&](int idx, bool& second) -> u64 {
    second = idx >= static_cast<int>(s);
    Vec c(s, 0);
    c[second ? idx - s : idx] = 1;
    return fq.from_coords(c);
  };

  for (int i = 0; i < n; ++i) {
    bool i2;
    const u64 xi = fq_part(i, i2);
    const u64 a = i2 ? 0 : xi, b = i2 ? xi : 0;
    for (int j = 0; j < n; ++j) {
      bool j2;
      const u64 yj = fq_part(j, j2);
      const u64 c = j2 ? 0 : yj, d = j2 ? yj : 0;
      const u64 first = fq.add(fq.mul(a, c), fq.mul(k, fq.mul(fq.frobenius(b, sigma_index),
                                                              fq.frobenius(d, sigma_index))));
      const u64 second = fq.add(fq.mul(a, d), fq.mul(b, c));
      const std::vector<u64> c1 = fq.coords(first), c2 = fq.coords(second);
      for (u32 t = 0; t < s; ++t) {
        P.t(i, j, t) = c1[t];
        P.t(i, j, s + t) = c2[t];
      }
    }
  }

  F3Report f3 = certify_f3(P);
  if (!f3.ok) fail("ValidationFailure", "Dickson tensor has zero divisors (internal bug)");
  Vec identity(n, 0);
  identity[0] = 1;
  return Semifield{std::move(P), std::move(identity)};
}

Semifield field_semifield(const Field& fq, u32 n) {
  if (n < 1) fail("BadParameter", "need n >= 1");
  if (n >= 2 && fq.level() != fq.tower().levels() - 1)
    fail("BadParameter", "base field must be the top of its tower");
  PreSemifield P(fq, static_cast<int>(n));
  if (n == 1) {
    P.t(0, 0, 0) = 1;
  } else {
    const gf::FieldTower ext = fq.tower().extended(n);
    const Field top = ext.top();
    const u64 alpha = top.generator();
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) {
        const std::vector<u64> c = top.coords(top.pow(alpha, i + j));
        for (u32 t = 0; t < n; ++t) P.t(i, j, t) = c[t];
      }
  }
  F3Report f3 = certify_f3(P);
  if (!f3.ok) fail("ValidationFailure", "field tensor has zero divisors (internal bug)");
  Vec identity(n, 0);
  identity[0] = 1;
  return Semifield{std::move(P), std::move(identity)};
}

Vec pair_to_vec(const PreSemifield& P, const Field& fq, u64 a, u64 b) {
  gf::ExtView view = fq.same(P.field) ? gf::ExtView::trivial(fq) : gf::ExtView::of(fq);
  if (!view.base.same(P.field)) fail("FieldMismatch", "pair field does not flatten to the tensor field");
  if (static_cast<int>(2 * view.m) != P.n) fail("ShapeError", "pair does not fit the tensor dimension");
  Vec out;
  for (u64 x : view.down(a)) out.push_back(x);
  for (u64 x : view.down(b)) out.push_back(x);
  return out;
}

AssocCommReport assoc_comm(const PreSemifield& P) {
  AssocCommReport rep;
  rep.is_commutative = true;
  rep.is_associative = true;
  for (int i = 0; i < P.n && rep.is_commutative; ++i)
    for (int j = i + 1; j < P.n; ++j) {
      for (int k = 0; k < P.n; ++k)
        if (P.t(i, j, k) != P.t(j, i, k)) {
          rep.is_commutative = false;
          rep.comm_witness = std::make_pair(i, j);
          break;
        }
      if (!rep.is_commutative) break;
    }
  Vec ei(P.n, 0), ej(P.n, 0), ek(P.n, 0);
  for (int i = 0; i < P.n && rep.is_associative; ++i)
    for (int j = 0; j < P.n && rep.is_associative; ++j)
      for (int k = 0; k < P.n; ++k) {
        std::fill(ei.begin(), ei.end(), 0);
        std::fill(ej.begin(), ej.end(), 0);
        std::fill(ek.begin(), ek.end(), 0);
        ei[i] = ej[j] = ek[k] = 1;
        const Vec lhs = P.mul(P.mul(ei, ej), ek);
        const Vec rhs = P.mul(ei, P.mul(ej, ek));
        if (lhs != rhs) {
          rep.is_associative = false;
          rep.assoc_witness = std::make_tuple(i, j, k);
          break;
        }
      }
  return rep;
}

MidReport middle_nucleus(const Semifield& F, u64 budget) {
  const PreSemifield& P = F.pre;
  const int n = P.n;
  // associator A(e_i, z, e_j) is linear in z; stack all (i, j, component) rows
  Mat m(P.field, n * n * n, n);
  Vec ei(n, 0), ej(n, 0);
  for (int l = 0; l < n; ++l) {
    Vec el(n, 0);
    el[l] = 1;
    for (int i = 0; i < n; ++i) {
      std::fill(ei.begin(), ei.end(), 0);
      ei[i] = 1;
      for (int j = 0; j < n; ++j) {
        std::fill(ej.begin(), ej.end(), 0);
        ej[j] = 1;
        const Vec zy = P.mul(el, ej);
        const Vec xz = P.mul(ei, el);
        const Vec lhs = P.mul(ei, zy);
        const Vec rhs = P.mul(xz, ej);
        for (int k = 0; k < n; ++k)
          m.at((i * n + j) * n + k, l) = P.field.sub(lhs[k], rhs[k]);
      }
    }
  }
  MidReport rep{linalg::kernel(m), 0, false};
  const u64 q = P.field.card();
  u64 size = 1;
  for (int t = 0; t < rep.mid.dim(); ++t) {
    if (size > budget / q) fail("BudgetExceeded", "middle nucleus too large to certify");
    size *= q;
  }
  rep.size = size;

  // field certificate: identity, closure, commutativity, associativity,
  // two-sided inverses (all inside Mid; associativity in the middle slot is
  // definitional, checked anyway on basis triples)
  bool ok = rep.mid.contains_vec(F.identity);
  const Mat& bas = rep.mid.basis();
  for (int a = 0; a < rep.mid.dim() && ok; ++a)
    for (int b = 0; b < rep.mid.dim() && ok; ++b) {
      const Vec prod = P.mul(bas.row(a), bas.row(b));
      if (!rep.mid.contains_vec(prod)) ok = false;
      if (ok && P.mul(bas.row(b), bas.row(a)) != prod) ok = false;
    }
  for (int a = 0; a < rep.mid.dim() && ok; ++a)
    for (int b = 0; b < rep.mid.dim() && ok; ++b)
      for (int cidx = 0; cidx < rep.mid.dim() && ok; ++cidx) {
        const Vec lhs = P.mul(P.mul(bas.row(a), bas.row(b)), bas.row(cidx));
        const Vec rhs = P.mul(bas.row(a), P.mul(bas.row(b), bas.row(cidx)));
        if (lhs != rhs) ok = false;
      }
  if (ok) {
    // enumerate Mid by coefficient vectors over its basis
    std::vector<Vec> elems;
    elems.reserve(size);
    Vec coef(rep.mid.dim());
    for (u64 idx = 0; idx < size; ++idx) {
      decode_vec(idx, q, coef);
      Vec v(n, 0);
      for (int r = 0; r < rep.mid.dim(); ++r) {
        if (coef[r] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (bas.at(r, j) != 0) v[j] = P.field.add(v[j], P.field.mul(coef[r], bas.at(r, j)));
      }
      elems.push_back(std::move(v));
    }
    for (size_t a = 1; a < elems.size() && ok; ++a) {
      bool has_inverse = false;
      for (size_t b = 1; b < elems.size(); ++b) {
        if (P.mul(elems[a], elems[b]) == F.identity && P.mul(elems[b], elems[a]) == F.identity) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) ok = false;
    }
  }
  rep.is_field = ok;
  return rep;
}

LieAlgebra lie_of(const PreSemifield& P) {
  const int n = P.n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
  LieAlgebra L(P.field, 3 * n, std::move(labels));
  Vec coeffs(3 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::fill(coeffs.begin(), coeffs.end(), 0);
      for (int k = 0; k < n; ++k) coeffs[2 * n + k] = P.t(i, j, k);
      L.set_bracket(i, n + j, coeffs);
    }
  liealg::ensure_valid(L);
  return L;
}

PairCentralizerReport centralizer_pair(const PreSemifield& P, std::span<const u64> a,
                                       std::span<const u64> b) {
  const int n = P.n;
  const Mat La = P.left_mul(a);
  const Mat Rb = P.right_mul(b);
  // rows: a*b2 - a2*b = La b2 - Rb a2 = 0 over (a2, b2)
  Mat m(P.field, n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = P.field.neg(Rb.at(r, c));
      m.at(r, n + c) = La.at(r, c);
    }
  PairCentralizerReport rep{linalg::kernel(m), true, std::nullopt};
  const Mat& bas = rep.c.basis();
  for (int x = 0; x < rep.c.dim() && rep.abelian; ++x)
    for (int y = x + 1; y < rep.c.dim(); ++y) {
      const std::span<const u64> u = bas.row(x), v = bas.row(y);
      const Vec lhs = P.mul(u.subspan(0, n), v.subspan(n, n));
      const Vec rhs = P.mul(v.subspan(0, n), u.subspan(n, n));
      if (lhs != rhs) {
        rep.abelian = false;
        rep.witness = std::make_pair(Vec(u.begin(), u.end()), Vec(v.begin(), v.end()));
        break;
      }
    }
  return rep;
}

PreSemifield apply_isotopism(const PreSemifield& F1, const Isotopism& iso) {
  const int n = F1.n;
  if (iso.A.rows() != n || iso.B.rows() != n || iso.C.rows() != n)
    fail("ShapeError", "isotopism dimension mismatch");
  const Mat Ainv = linalg::inverse(iso.A);
  const Mat Binv = linalg::inverse(iso.B);
  if (linalg::rank(iso.C) != n) fail("SingularMap", "C is not invertible");
  PreSemifield F2(F1.field, n);
  for (int i = 0; i < n; ++i) {
    Vec x(n);
    for (int r = 0; r < n; ++r) x[r] = Ainv.at(r, i);
    for (int j = 0; j < n; ++j) {
      Vec y(n);
      for (int r = 0; r < n; ++r) y[r] = Binv.at(r, j);
      const Vec out = iso.C.mul_vec(F1.mul(x, y));
      for (int k = 0; k < n; ++k) F2.t(i, j, k) = out[k];
    }
  }
  F2.certified_f3 = F1.certified_f3;  // isotopy preserves the no-zero-divisor property
  return F2;
}

bool verify_isotopism(const PreSemifield& F1, const PreSemifield& F2, const Isotopism& iso) {
  check_compatible(F1, F2);
  const int n = F1.n;
  if (iso.A.rows() != n || iso.A.cols() != n || iso.B.rows() != n || iso.B.cols() != n ||
      iso.C.rows() != n || iso.C.cols() != n)
    return false;
  if (linalg::rank(iso.A) != n || linalg::rank(iso.B) != n || linalg::rank(iso.C) != n)
    return false;
  Vec t1(n);
  for (int i = 0; i < n; ++i) {
    Vec Ai(n);
    for (int r = 0; r < n; ++r) Ai[r] = iso.A.at(r, i);
    for (int j = 0; j < n; ++j) {
      Vec Bj(n);
      for (int r = 0; r < n; ++r) Bj[r] = iso.B.at(r, j);
      for (int k = 0; k < n; ++k) t1[k] = F1.t(i, j, k);
      if (iso.C.mul_vec(t1) != F2.mul(Ai, Bj)) return false;
    }
  }
  return true;
}

std::pair<Semifield, Isotopism> normalize_to_semifield(const PreSemifield& P) {
  if (!P.certified_f3) fail("NotCertified", "normalize requires a certified pre-semifield");
  const int n = P.n;
  Vec e(n, 0);
  e[0] = 1;  // first nonzero element in canonical order
  const Mat Re = P.right_mul(e), Le = P.left_mul(e);
  const Mat Rinv = linalg::inverse(Re), Linv = linalg::inverse(Le);
  PreSemifield Q(P.field, n);
  for (int i = 0; i < n; ++i) {
    Vec x(n);
    for (int r = 0; r < n; ++r) x[r] = Rinv.at(r, i);
    for (int j = 0; j < n; ++j) {
      Vec y(n);
      for (int r = 0; r < n; ++r) y[r] = Linv.at(r, j);
      const Vec out = P.mul(x, y);
      for (int k = 0; k < n; ++k) Q.t(i, j, k) = out[k];
    }
  }
  Q.certified_f3 = true;
  Vec identity = P.mul(e, e);
  Isotopism iso{Re, Le, Mat::identity(P.field, n)};
  Semifield S{std::move(Q), std::move(identity)};
  if (!verify_isotopism(P, S.pre, iso))
    fail("ValidationFailure", "normalization witness failed to verify (internal bug)");
  return {std::move(S), std::move(iso)};
}

LieIsoReport lie_iso_from_isotopism(const PreSemifield& F1, const PreSemifield& F2,
                                    const Isotopism& iso) {
  if (!verify_isotopism(F1, F2, iso))
    fail("IsotopismInvalid", "the isotopy contract does not hold");
  const int n = F1.n;
  Mat map(F1.field, 3 * n, 3 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      map.at(r, c) = iso.A.at(r, c);
      map.at(n + r, n + c) = iso.B.at(r, c);
      map.at(2 * n + r, 2 * n + c) = iso.C.at(r, c);
    }
  const LieAlgebra L1 = lie_of(F1), L2 = lie_of(F2);
  bool verified = linalg::rank(map) == 3 * n;
  Vec ei(3 * n), ej(3 * n);
  for (int i = 0; i < 3 * n && verified; ++i)
    for (int j = i + 1; j < 3 * n; ++j) {
      std::fill(ei.begin(), ei.end(), 0);
      std::fill(ej.begin(), ej.end(), 0);
      ei[i] = 1;
      ej[j] = 1;
      const Vec lhs = map.mul_vec(L1.bracket(ei, ej));
      const Vec rhs = L2.bracket(map.mul_vec(ei), map.mul_vec(ej));
      if (lhs != rhs) {
        verified = false;
        break;
      }
    }
  return LieIsoReport{std::move(map), verified};
}

PreSemifield extract(const LieAlgebra& L, const Subspace& Astar, const Subspace& Bstar) {
  const liealg::SeriesReport s = liealg::series(L);
  if (!s.nilpotency_class || *s.nilpotency_class != 2)
    fail("HypothesisFailure", "algebra is not nilpotent of class 2");
  if (!(s.derived == s.center_space)) fail("HypothesisFailure", "derived subalgebra != center");
  const int n = s.derived_dim;
  if (L.dim() != 3 * n) fail("HypothesisFailure", "dimension is not three times dim of derived");
  // The Camina property itself needs no separate scan here: with class 2,
  // derived = center and the bracket supported on complements of the two
  // abelian subspaces, [a + b, L] = im L_a + im R_b, so the final zero-divisor
  // certification of the reconstructed multiplication is equivalent to it.

  auto check_star = [&](const Subspace& S, const char* name) {
    if (S.dim() != 2 * n) fail("HypothesisFailure", std::string(name) + " has wrong dimension");
    if (!S.contains(s.derived)) fail("HypothesisFailure", std::string(name) + " does not contain the derived subalgebra");
    if (!L.is_abelian_subspace(S)) fail("HypothesisFailure", std::string(name) + " is not abelian");
  };
  check_star(Astar, "Astar");
  check_star(Bstar, "Bstar");

  auto complement_in = [&](const Subspace& S) {
    std::vector<Vec> basis;
    Subspace cur = s.derived;
    for (int r = 0; r < S.dim() && static_cast<int>(basis.size()) < n; ++r) {
      const auto row = S.basis().row(r);
      if (cur.contains_vec(row)) continue;
      basis.emplace_back(row.begin(), row.end());
      cur = cur.sum(Subspace::span(L.field(), L.dim(), {basis.back()}));
    }
    return basis;
  };
  const std::vector<Vec> A = complement_in(Astar), B = complement_in(Bstar);

  PreSemifield P(L.field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec br = L.bracket(A[i], B[j]);
      const auto coords = s.derived.coordinates_of(br);
      if (!coords) fail("HypothesisFailure", "bracket escaped the derived subalgebra");
      for (int k = 0; k < n; ++k) P.t(i, j, k) = (*coords)[k];
    }
  F3Report f3 = certify_f3(P);
  if (!f3.ok) fail("HypothesisFailure", "extracted multiplication has zero divisors");
  return P;
}

std::pair<Subspace, Subspace> abelian_star_pair(const LieAlgebra& L) {
  const Subspace derived = liealg::derived_subalgebra(L);
  const int target = 2 * derived.dim();
  const auto grow = [&](const Subspace* avoid) {
    Subspace cur = derived;
    Vec e(L.dim(), 0);
    for (int i = 0; i < L.dim() && cur.dim() < target; ++i) {
      std::fill(e.begin(), e.end(), 0);
      e[i] = 1;
      if (cur.contains_vec(e) || (avoid && avoid->contains_vec(e))) continue;
      const Subspace cand = cur.sum(Subspace::span(L.field(), L.dim(), {e}));
      if (L.is_abelian_subspace(cand)) cur = cand;
    }
    if (cur.dim() != target)
      fail("HypothesisFailure", "greedy scan found no abelian subspace of twice the derived dimension");
    return cur;
  };
  const Subspace a = grow(nullptr);
  const Subspace b = grow(&a);
  return {a, b};
}

}  // namespace fflie::semifield
