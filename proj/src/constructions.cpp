#include "fflie/constructions.hpp"

#include <algorithm>

namespace fflie::constructions {

using linalg::Subspace;

namespace {

/// q = p^s with p prime, or BadParameter.
std::pair<u32, u32> factor_prime_power(u64 q) {
  if (q < 2) fail("BadParameter", "q must be at least 2");
  u64 p = 0;
  for (u64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q itself is prime
  u32 s = 0;
  u64 r = q;
  while (r % p == 0) {
    r /= p;
    ++s;
  }
  if (r != 1) fail("BadParameter", "q must be a prime power");
  return {static_cast<u32>(p), s};
}

void check_odd(const FieldSetup& fs, const char* what) {
  if (fs.p == 2)
    fail("UnsupportedCharacteristic", std::string(what) + " requires odd characteristic");
}

std::string power_label(char slot, u32 t) { return std::string(1, slot) + std::to_string(t + 1); }

}  // namespace

gf::ExtView FieldSetup::qm_view() const {
  return m == 1 ? gf::ExtView::trivial(fq()) : gf::ExtView::of(fqm());
}

FieldSetup FieldSetup::make(u64 q, u32 m, const std::optional<std::vector<u64>>& top_poly) {
  if (m < 1) fail("BadParameter", "m must be at least 1");
  const auto [p, s] = factor_prime_power(q);
  FieldTower tower = FieldTower::prime(p);
  const u32 top_degree = m > 1 ? m : s;
  if (top_poly && top_degree == 1)
    fail("BadParameter", "no field extension to override with the given polynomial");
  if (top_poly && top_poly->size() != top_degree + 1)
    fail("BadParameter", "override polynomial has the wrong degree");
  if (s > 1) tower = (m == 1 && top_poly) ? tower.extended(*top_poly) : tower.extended(s);
  if (m > 1) tower = top_poly ? tower.extended(*top_poly) : tower.extended(m);
  return FieldSetup{p, s, m, q, std::move(tower)};
}

KappaTensor kappa(const FieldSetup& fs) {
  const gf::ExtView view = fs.qm_view();
  const Field level = fs.fq();
  std::vector<Vec> table;
  table.reserve(static_cast<size_t>(fs.m) * fs.m);
  const u64 alpha = view.alpha();
  for (u32 i = 0; i < fs.m; ++i)
    for (u32 j = 0; j < fs.m; ++j) table.push_back(view.down(view.top.pow(alpha, i + j)));
  std::vector<u64> alpha_poly = fs.m == 1 ? std::vector<u64>{level.neg(1), 1}  // t - 1: alpha is 1
                                          : fs.tower.modulus(view.top.level());
  return KappaTensor{fs.m, level, std::move(table), std::move(alpha_poly)};
}

LieAlgebra u_n_restricted(u32 n, const FieldSetup& fs) {
  if (n != 3 && n != 5) fail("BadParameter", "only n in {3, 5} is supported");
  const gf::ExtView view = fs.qm_view();
  const u32 m = fs.m;

  // positions (r, s), r < s <= n, superdiagonal-major
  std::vector<std::pair<u32, u32>> pos;
  std::vector<int> pos_index(n * n + n + 1, -1);
  for (u32 d = 1; d < n; ++d)
    for (u32 r = 1; r + d <= n; ++r) {
      pos_index[r * n + (r + d)] = static_cast<int>(pos.size());
      pos.emplace_back(r, r + d);
    }

  const int dim = static_cast<int>(pos.size() * m);
  std::vector<std::string> labels;
  for (const auto& [r, s] : pos)
    for (u32 t = 0; t < m; ++t)
      labels.push_back("e" + std::to_string(r) + std::to_string(s) + "_" + std::to_string(t + 1));

  LieAlgebra L(fs.fq(), dim, std::move(labels));
  const u64 alpha = view.alpha();
  Vec coeffs(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const auto [r1, s1] = pos[i / m];
      const auto [r2, s2] = pos[j / m];
      const u32 t1 = i % m, t2 = j % m;
      std::fill(coeffs.begin(), coeffs.end(), 0);
      bool nonzero = false;
      const std::vector<u64> prod = view.down(view.top.pow(alpha, t1 + t2));
      if (s1 == r2) {  // E_{r1 s1} E_{r2 s2} = E_{r1 s2}
        const int target = pos_index[r1 * n + s2];
        for (u32 t = 0; t < m; ++t) coeffs[target * m + t] = prod[t];
        nonzero = true;
      } else if (s2 == r1) {
        const int target = pos_index[r2 * n + s1];
        for (u32 t = 0; t < m; ++t) coeffs[target * m + t] = L.field().neg(prod[t]);
        nonzero = true;
      }
      if (nonzero) L.set_bracket(i, j, coeffs);
    }
  liealg::ensure_valid(L);
  return L;
}

Mat six_slot_matrix(const Field& f, std::span<const u64> slots) {
  if (slots.size() != 6) fail("ShapeError", "need six slots");
  const u64 a = slots[0], b = slots[1], c = slots[2], d = slots[3], e = slots[4], w = slots[5];
  Mat m(f, 5, 5);
  m.at(0, 1) = a;
  m.at(0, 2) = c;
  m.at(0, 3) = d;
  m.at(0, 4) = w;
  m.at(1, 2) = b;
  m.at(1, 3) = f.sub(f.add(a, b), c);
  m.at(1, 4) = e;
  m.at(2, 3) = a;
  m.at(2, 4) = c;
  m.at(3, 4) = b;
  return m;
}

std::array<u64, 6> six_slot_bracket(const Field& f, std::span<const u64> lhs,
                                    std::span<const u64> rhs) {
  if (lhs.size() != 6 || rhs.size() != 6) fail("ShapeError", "need six slots");
  const u64 a = lhs[0], b = lhs[1], c = lhs[2], d = lhs[3], e = lhs[4];
  const u64 x = rhs[0], y = rhs[1], z = rhs[2], u = rhs[3], v = rhs[4];
  const u64 two = f.add(1, 1);
  const u64 r2 = f.sub(f.mul(a, y), f.mul(b, x));
  const u64 r3 = f.add(r2, f.mul(two, f.sub(f.mul(c, x), f.mul(a, z))));
  const u64 r4 = f.add(r2, f.mul(two, f.sub(f.mul(b, z), f.mul(c, y))));
  const u64 r5 = f.sub(f.add(f.mul(a, v), f.mul(d, y)), f.add(f.mul(b, u), f.mul(e, x)));
  return {0, 0, r2, r3, r4, r5};
}

namespace {

/// Shared builder for the slot families: `slots` letters, formula maps two
/// slot tuples over F_{q^m} to a slot tuple.
template <size_t S, typename Formula>
LieAlgebra slot_algebra(const FieldSetup& fs, const std::array<char, S>& slots,
                        Formula&& formula) {
  const gf::ExtView view = fs.qm_view();
  const u32 m = fs.m;
  const int dim = static_cast<int>(S * m);
  std::vector<std::string> labels;
  for (char slot : slots)
    for (u32 t = 0; t < m; ++t) labels.push_back(power_label(slot, t));

  LieAlgebra L(fs.fq(), dim, std::move(labels));
  const u64 alpha = view.alpha();
  std::array<u64, S> lhs{}, rhs{};
  Vec coeffs(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      lhs.fill(0);
      rhs.fill(0);
      lhs[i / m] = view.top.pow(alpha, i % m);
      rhs[j / m] = view.top.pow(alpha, j % m);
      const std::array<u64, S> out = formula(lhs, rhs);
      std::fill(coeffs.begin(), coeffs.end(), 0);
      for (size_t slot = 0; slot < S; ++slot) {
        if (out[slot] == 0) continue;
        const std::vector<u64> cs = view.down(out[slot]);
        for (u32 t = 0; t < m; ++t) coeffs[slot * m + t] = cs[t];
      }
      L.set_bracket(i, j, coeffs);
    }
  liealg::ensure_valid(L);
  return L;
}

std::array<u64, 5> five_slot_bracket(const Field& f, const std::array<u64, 5>& lhs,
                                     const std::array<u64, 5>& rhs) {
  const std::array<u64, 6> l6{lhs[0], lhs[1], lhs[2], lhs[3], lhs[4], 0};
  const std::array<u64, 6> r6{rhs[0], rhs[1], rhs[2], rhs[3], rhs[4], 0};
  const std::array<u64, 6> out = six_slot_bracket(f, l6, r6);
  return {out[0], out[1], out[2], out[3], out[4]};
}

}  // namespace

LieAlgebra l_m_matrix_algebra(const FieldSetup& fs) {
  check_odd(fs, "the matrix family");
  const Field top = fs.qm_view().top;
  LieAlgebra L = slot_algebra(fs, std::array<char, 6>{'a', 'b', 'c', 'd', 'e', 'f'},
                              [&](const auto& lhs, const auto& rhs) {
                                return six_slot_bracket(top, lhs, rhs);
                              });

  // cross-check the closed formula against literal matrix commutators on all
  // slot/power basis pairs
  const gf::ExtView view = fs.qm_view();
  const u64 alpha = view.alpha();
  std::array<u64, 6> lhs{}, rhs{};
  for (u32 i = 0; i < 6 * fs.m; ++i)
    for (u32 j = 0; j < 6 * fs.m; ++j) {
      lhs.fill(0);
      rhs.fill(0);
      lhs[i / fs.m] = view.top.pow(alpha, i % fs.m);
      rhs[j / fs.m] = view.top.pow(alpha, j % fs.m);
      const Mat m1 = six_slot_matrix(view.top, lhs);
      const Mat m2 = six_slot_matrix(view.top, rhs);
      const Mat p1 = m1.mul(m2), p2 = m2.mul(m1);
      const Mat expect = six_slot_matrix(view.top, six_slot_bracket(view.top, lhs, rhs));
      for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
          if (view.top.sub(p1.at(r, c), p2.at(r, c)) != expect.at(r, c))
            fail("ValidationFailure", "matrix commutator cross-check failed (internal bug)");
    }
  return L;
}

LieAlgebra g_m_direct(const FieldSetup& fs) {
  check_odd(fs, "the quotient family");
  const Field top = fs.qm_view().top;
  return slot_algebra(fs, std::array<char, 5>{'a', 'b', 'c', 'd', 'e'},
                      [&](const auto& lhs, const auto& rhs) {
                        return five_slot_bracket(top, lhs, rhs);
                      });
}

LieAlgebra g_m_quotient(const FieldSetup& fs) {
  LieAlgebra L = l_m_matrix_algebra(fs);
  const Subspace Z = liealg::center(L);
  if (static_cast<u32>(Z.dim()) != fs.m)
    fail("ValidationFailure", "matrix family center has unexpected dimension (internal bug)");
  LieAlgebra Q = liealg::quotient(L, Z).algebra;
  if (Q.tensor() != g_m_direct(fs).tensor())
    fail("ValidationFailure", "quotient tensor differs from the direct construction (internal bug)");
  return Q;
}

std::pair<LieAlgebra, Presentation> v_presentation(const FieldSetup& fs) {
  const u32 m = fs.m;
  const Field f = fs.fq();
  Presentation pres{f, {}, {}};
  LieAlgebra L = [&] {
    if (m == 1) {
      pres.generators = {"x1", "x2", "y", "z1", "z2"};
      LieAlgebra A(f, 5, pres.generators);
      Vec rhs(5, 0);
      const auto rel = [&](int i, int j, int k) {
        std::fill(rhs.begin(), rhs.end(), 0);
        rhs[k] = 1;
        A.set_bracket(i, j, rhs);
        pres.relations.push_back({i, j, rhs});
      };
      rel(0, 1, 2);  // [x1, x2] = y
      rel(0, 2, 3);  // [x1, y] = z1
      rel(1, 2, 4);  // [x2, y] = z2
      return A;
    }
    const KappaTensor k = kappa(fs);
    const int dim = static_cast<int>(5 * m);
    std::vector<std::string> labels;
    for (u32 i = 0; i < m; ++i) labels.push_back(power_label('x', i));
    for (u32 i = 0; i < m; ++i) labels.push_back(power_label('y', i));
    for (u32 i = 0; i < m; ++i) labels.push_back(power_label('h', i));
    for (u32 i = 0; i < 2 * m; ++i) labels.push_back(power_label('z', i));
    pres.generators = labels;
    LieAlgebra A(f, dim, labels);
    const auto x_at = [&](u32 i) { return static_cast<int>(i); };
    const auto y_at = [&](u32 i) { return static_cast<int>(m + i); };
    const auto h_at = [&](u32 i) { return static_cast<int>(2 * m + i); };
    const auto z_at = [&](u32 i) { return static_cast<int>(3 * m + i); };
    Vec rhs(dim, 0);
    const auto rel = [&](int i, int j, const Vec& v) {
      A.set_bracket(i, j, v);
      pres.relations.push_back({i, j, v});
    };
    for (u32 i = 0; i < m; ++i)
      for (u32 j = 0; j < m; ++j) {
        const Vec& kij = k.at(i, j);
        // [x_i, y_j] = sum_t kappa h_t
        std::fill(rhs.begin(), rhs.end(), 0);
        for (u32 t = 0; t < m; ++t) rhs[h_at(t)] = kij[t];
        rel(x_at(i), y_at(j), rhs);
        // [h_i, x_j] = sum_t kappa z_t, stored as [x_j, h_i] = -(...)
        std::fill(rhs.begin(), rhs.end(), 0);
        for (u32 t = 0; t < m; ++t) rhs[z_at(t)] = f.neg(kij[t]);
        rel(x_at(j), h_at(i), rhs);
        // [h_i, y_j] = sum_t kappa z_{m+t}, stored as [y_j, h_i] = -(...)
        std::fill(rhs.begin(), rhs.end(), 0);
        for (u32 t = 0; t < m; ++t) rhs[z_at(m + t)] = f.neg(kij[t]);
        rel(y_at(j), h_at(i), rhs);
      }
    return A;
  }();
  const liealg::ValidationReport rep = liealg::validate(L);
  if (!rep.ok) {
    if (rep.violation == "jacobi") fail("JacobiFailure", "presentation tensor violates Jacobi");
    fail("ValidationFailure", "presentation tensor is not antisymmetric (internal bug)");
  }
  return {std::move(L), std::move(pres)};
}

std::vector<Vec> v_standard_images(const FieldSetup& fs) {
  const u32 m = fs.m;
  const gf::ExtView view = fs.qm_view();
  const Field fq = fs.fq();
  const u64 two = fq.add(1, 1);
  const int dim = static_cast<int>(5 * m);

  // image with value alpha^t (scaled) in the given slots of the 5-slot space
  const auto slot_vec = [&](std::initializer_list<std::pair<int, u64>> entries, u32 t) {
    Vec v(dim, 0);
    const std::vector<u64> cs = view.down(view.top.pow(view.alpha(), t));
    for (const auto& [slot, scale] : entries)
      for (u32 r = 0; r < m; ++r) v[slot * m + r] = fq.mul(scale, cs[r]);
    return v;
  };

  std::vector<Vec> images;
  if (m == 1) {
    // order (x1, x2, y, z1, z2)
    images.push_back(slot_vec({{0, 1}}, 0));                                // (1,0,0,0,0)
    images.push_back(slot_vec({{1, 1}}, 0));                                // (0,1,0,0,0)
    images.push_back(slot_vec({{2, 1}, {3, 1}, {4, 1}}, 0));                // (0,0,1,1,1)
    images.push_back(slot_vec({{3, fq.neg(two)}}, 0));                      // (0,0,0,-2,0)
    images.push_back(slot_vec({{4, two}}, 0));                              // (0,0,0,0,2)
    return images;
  }
  for (u32 i = 0; i < m; ++i) images.push_back(slot_vec({{0, 1}}, i));
  for (u32 i = 0; i < m; ++i) images.push_back(slot_vec({{1, 1}}, i));
  for (u32 i = 0; i < m; ++i) images.push_back(slot_vec({{2, 1}, {3, 1}, {4, 1}}, i));
  for (u32 i = 0; i < m; ++i) images.push_back(slot_vec({{3, two}}, i));
  for (u32 i = 0; i < m; ++i) images.push_back(slot_vec({{4, fq.neg(two)}}, i));
  return images;
}

LieAlgebra abelian(const Field& f, int dim) { return LieAlgebra(f, dim); }

std::vector<CatalogEntry> catalog(u64 q) {
  const auto [p, s] = factor_prime_power(q);
  if (s != 1 || p == 2) fail("BadParameter", "the catalog is configured for odd prime q");

  std::vector<CatalogEntry> entries;
  const auto add = [&](std::string name, std::function<LieAlgebra()> build) {
    entries.push_back({std::move(name), std::move(build)});
  };
  add("abelian_dim3", [q] { return abelian(FieldSetup::make(q, 1).fq(), 3); });
  add("u3_m1", [q] { return u_n_restricted(3, FieldSetup::make(q, 1)); });
  add("u3_m2", [q] { return u_n_restricted(3, FieldSetup::make(q, 2)); });
  add("u5_m1", [q] { return u_n_restricted(5, FieldSetup::make(q, 1)); });
  add("lm_m1", [q] { return l_m_matrix_algebra(FieldSetup::make(q, 1)); });
  add("lm_m2", [q] { return l_m_matrix_algebra(FieldSetup::make(q, 2)); });
  add("gm_m1", [q] { return g_m_direct(FieldSetup::make(q, 1)); });
  add("gm_m2", [q] { return g_m_direct(FieldSetup::make(q, 2)); });
  add("v_m1", [q] { return v_presentation(FieldSetup::make(q, 1)).first; });
  add("v_m2", [q] { return v_presentation(FieldSetup::make(q, 2)).first; });
  add("lie_dickson_s2", [q] {
    const FieldSetup fs = FieldSetup::make(q * q, 1);
    return semifield::lie_of(semifield::dickson(fs.fq(), 1, std::nullopt).pre);
  });
  add("lie_field_ext2", [q] {
    return semifield::lie_of(semifield::field_semifield(FieldSetup::make(q, 1).fq(), 2).pre);
  });
  return entries;
}

}  // namespace fflie::constructions
