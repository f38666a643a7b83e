#include "fflie/liealg.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace fflie::liealg {

namespace {

std::vector<std::pair<u64, u64>> split_ranges(u64 count, int workers) {
  if (workers < 1) workers = 1;
  std::vector<std::pair<u64, u64>> out;
  const u64 w = static_cast<u64>(workers);
  const u64 chunk = count / w, rem = count % w;
  u64 lo = 0;
  for (u64 i = 0; i < w; ++i) {
    u64 hi = lo + chunk + (i < rem ? 1 : 0);
    out.emplace_back(lo, hi);
    lo = hi;
  }
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(Field f, int dim, std::vector<std::string> labels)
    : f_(std::move(f)), dim_(dim), labels_(std::move(labels)) {
  if (dim < 0) fail("ShapeError", "negative dimension");
  tensor_.assign(static_cast<size_t>(dim) * dim * dim, 0);
  if (labels_.empty()) {
    labels_.reserve(dim);
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != dim) fail("ShapeError", "label count mismatch");
}

void LieAlgebra::set_bracket(int i, int j, std::span<const u64> coeffs) {
  if (i == j) fail("ShapeError", "diagonal brackets are zero by antisymmetry");
  if (static_cast<int>(coeffs.size()) != dim_) fail("ShapeError", "bad coefficient length");
  for (int k = 0; k < dim_; ++k) {
    tensor_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k] = coeffs[k];
    tensor_[(static_cast<size_t>(j) * dim_ + i) * dim_ + k] = f_.neg(coeffs[k]);
  }
}

Vec LieAlgebra::bracket(std::span<const u64> u, std::span<const u64> v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    fail("ShapeError", "bad vector length");
  Vec r(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      const u64 uv = f_.mul(u[i], v[j]);
      for (int k = 0; k < dim_; ++k) {
        const u64 cc = c(i, j, k);
        if (cc != 0) r[k] = f_.add(r[k], f_.mul(uv, cc));
      }
    }
  }
  return r;
}

Mat LieAlgebra::ad(std::span<const u64> x) const {
  if (static_cast<int>(x.size()) != dim_) fail("ShapeError", "bad vector length");
  Mat m(f_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const u64 cc = c(i, j, k);
        if (cc != 0) m.at(k, j) = f_.add(m.at(k, j), f_.mul(x[i], cc));
      }
  }
  return m;
}

int LieAlgebra::breadth(std::span<const u64> x) const { return linalg::rank(ad(x)); }

Subspace LieAlgebra::centralizer(std::span<const u64> x) const { return linalg::kernel(ad(x)); }

int LieAlgebra::relative_breadth(std::span<const u64> x, const Subspace& I) const {
  if (I.ambient() != dim_) fail("ShapeError", "ambient mismatch");
  Mat m(f_, dim_, I.dim());
  for (int b = 0; b < I.dim(); ++b) {
    Vec col = bracket(x, I.basis().row(b));
    for (int k = 0; k < dim_; ++k) m.at(k, b) = col[k];
  }
  return linalg::rank(m);
}

bool LieAlgebra::is_abelian_subspace(const Subspace& S) const {
  for (int a = 0; a < S.dim(); ++a)
    for (int b = a + 1; b < S.dim(); ++b) {
      Vec w = bracket(S.basis().row(a), S.basis().row(b));
      if (std::any_of(w.begin(), w.end(), [](u64 v) { return v != 0; })) return false;
    }
  return true;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  return f_.same(o.f_) && dim_ == o.dim_ && tensor_ == o.tensor_;
}

ValidationReport validate(const LieAlgebra& L) {
  const int n = L.dim();
  const Field& F = L.field();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (L.c(i, i, k) != 0) return {false, "antisymmetry", i, i, k};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (L.c(j, i, k) != F.neg(L.c(i, j, k))) return {false, "antisymmetry", i, j, k};
  // Jacobi on basis triples: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
  auto double_bracket = [&](int i, int j, int k, Vec& acc) {
    for (int s = 0; s < n; ++s) {
      const u64 cij = L.c(i, j, s);
      if (cij == 0) continue;
      for (int l = 0; l < n; ++l) {
        const u64 cs = L.c(s, k, l);
        if (cs != 0) acc[l] = F.add(acc[l], F.mul(cij, cs));
      }
    }
  };
  Vec acc(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        double_bracket(i, j, k, acc);
        double_bracket(j, k, i, acc);
        double_bracket(k, i, j, acc);
        for (int l = 0; l < n; ++l)
          if (acc[l] != 0) return {false, "jacobi", i, j, k};
      }
  return {};
}

void ensure_valid(const LieAlgebra& L) {
  ValidationReport r = validate(L);
  if (!r.ok)
    fail("ValidationFailure", r.violation + " violated at basis indices (" + std::to_string(r.i) +
                                  "," + std::to_string(r.j) + "," + std::to_string(r.k) + ")");
}

Subspace subspace_bracket(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  std::vector<Vec> prods;
  for (int a = 0; a < U.dim(); ++a)
    for (int b = 0; b < V.dim(); ++b) prods.push_back(L.bracket(U.basis().row(a), V.basis().row(b)));
  return Subspace::span(L.field(), L.dim(), prods);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  return subspace_bracket(L, full, full);
}

Subspace center(const LieAlgebra& L) {
  const int n = L.dim();
  // rows indexed by (j, k): sum_i x_i c[i][j][k] = 0
  Mat m(L.field(), n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m.at(j * n + k, i) = L.c(i, j, k);
  return linalg::kernel(m);
}

Subspace generated(const LieAlgebra& L, const std::vector<Vec>& gens) {
  Subspace S = Subspace::span(L.field(), L.dim(), gens);
  for (;;) {
    Subspace next = S.sum(subspace_bracket(L, S, S));
    if (next.dim() == S.dim()) return S;
    S = next;
  }
}

SeriesReport series(const LieAlgebra& L) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  std::vector<Subspace> gammas{full};
  std::vector<int> gamma_dims{L.dim()};
  std::optional<int> nilpotency_class;
  if (L.dim() == 0) {
    nilpotency_class = 0;
  } else {
    for (;;) {
      Subspace next = subspace_bracket(L, full, gammas.back());
      const int prev_dim = gammas.back().dim();
      gammas.push_back(next);
      gamma_dims.push_back(next.dim());
      if (next.dim() == 0) {
        nilpotency_class = static_cast<int>(gammas.size()) - 1;
        break;
      }
      if (next.dim() == prev_dim) break;  // stabilized above zero: not nilpotent
    }
  }
  SeriesReport rep{std::move(gamma_dims),
                   {},
                   nilpotency_class,
                   gammas.size() > 1 ? gammas[1] : Subspace::zero(L.field(), L.dim()),
                   center(L),
                   0,
                   0,
                   false};
  rep.gammas = std::move(gammas);
  rep.derived_dim = rep.derived.dim();
  rep.center_dim = rep.center_space.dim();
  rep.is_stem = rep.derived.contains(rep.center_space);
  return rep;
}

CosetEnum coset_representatives(const LieAlgebra& L, const Subspace& Z, const EnumOptions& opts) {
  CosetEnum e;
  e.free_positions = Z.complement_positions();
  e.card = L.field().card();
  e.count = 1;
  for (size_t t = 0; t < e.free_positions.size(); ++t) {
    if (e.count > opts.budget / e.card)
      fail("BudgetExceeded", "coset representative count exceeds budget " +
                                 std::to_string(opts.budget));
    e.count *= e.card;
  }
  if (e.count > opts.budget)
    fail("BudgetExceeded", std::to_string(e.count) + " coset representatives exceed budget " +
                               std::to_string(opts.budget));
  return e;
}

void CosetEnum::decode(u64 index, Vec& out) const {
  for (int pos : free_positions) {
    out[pos] = index % card;
    index /= card;
  }
}

BreadthReport breadth_report(const LieAlgebra& L, const EnumOptions& opts) {
  const Subspace Z = center(L);
  const CosetEnum e = coset_representatives(L, Z, opts);
  u64 zsize = 1;
  for (int t = 0; t < Z.dim(); ++t) zsize *= e.card;
  const u64 orbit_mult = e.card - 1;

  const auto ranges = split_ranges(e.count, opts.workers);
  std::vector<std::vector<u64>> hists(ranges.size(), std::vector<u64>(L.dim() + 1, 0));

  auto work = [&](size_t w) {
    Vec x(L.dim(), 0);
    auto& hist = hists[w];
    for (u64 idx = ranges[w].first; idx < ranges[w].second; ++idx) {
      e.decode(idx, x);
      if (opts.scalar_orbits) {
        u64 lead = 0;
        for (int pos : e.free_positions)
          if (x[pos] != 0) {
            lead = x[pos];
            break;
          }
        if (lead == 0)
          hist[0] += zsize;  // the center coset itself
        else if (lead == 1)
          hist[L.breadth(x)] += orbit_mult * zsize;
      } else {
        hist[L.breadth(x)] += zsize;
      }
    }
  };

  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < ranges.size(); ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  std::vector<u64> total(L.dim() + 1, 0);
  for (const auto& h : hists)
    for (int b = 0; b <= L.dim(); ++b) total[b] += h[b];

  BreadthReport rep;
  for (int b = 0; b <= L.dim(); ++b)
    if (total[b] != 0) {
      rep.histogram.emplace_back(b, total[b]);
      rep.type_set.push_back(b);
    }
  return rep;
}

CaminaReport camina(const LieAlgebra& L, const EnumOptions& opts) {
  CaminaReport rep;
  const Subspace derived = derived_subalgebra(L);
  if (derived.dim() == 0) {
    // [x, L] = 0 = L' for every x, so the condition holds trivially
    rep.is_camina = true;
    rep.degenerate = true;
    return rep;
  }
  const Subspace Z = center(L);
  const bool z_in_derived = derived.contains(Z);
  const CosetEnum e = coset_representatives(L, Z, opts);
  const int target = derived.dim();

  const auto ranges = split_ranges(e.count, opts.workers);
  std::vector<u64> fail_idx(ranges.size(), UINT64_MAX);

  auto work = [&](size_t w) {
    Vec x(L.dim(), 0);
    for (u64 idx = ranges[w].first; idx < ranges[w].second; ++idx) {
      e.decode(idx, x);
      // skip cosets lying entirely inside L'
      if (z_in_derived && derived.contains_vec(x)) continue;
      if (L.breadth(x) != target) {  // [x,L] is always inside L', so rank decides
        fail_idx[w] = idx;
        return;
      }
    }
  };

  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < ranges.size(); ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  u64 best = UINT64_MAX;
  for (u64 fi : fail_idx) best = std::min(best, fi);
  if (best == UINT64_MAX) {
    rep.is_camina = true;
    return rep;
  }
  // found a coset whose non-L' elements fail; emit a concrete witness outside L'
  Vec x(L.dim(), 0);
  e.decode(best, x);
  if (derived.contains_vec(x)) {
    // pick x + z outside L' (exists since the coset was not skipped)
    const Field& F = L.field();
    Vec cand(L.dim());
    u64 zcount = 1;
    for (int t = 0; t < Z.dim(); ++t) zcount *= e.card;
    for (u64 zi = 1; zi < zcount; ++zi) {
      cand = x;
      u64 rest = zi;
      for (int r = 0; r < Z.dim(); ++r) {
        const u64 coef = rest % e.card;
        rest /= e.card;
        if (coef == 0) continue;
        for (int j = 0; j < L.dim(); ++j)
          cand[j] = F.add(cand[j], F.mul(coef, Z.basis().at(r, j)));
      }
      if (!derived.contains_vec(cand)) {
        x = cand;
        break;
      }
    }
  }
  rep.is_camina = false;
  rep.witness = std::move(x);
  return rep;
}

AbelianCentralizersReport noncentral_centralizers_abelian(const LieAlgebra& L,
                                                          const EnumOptions& opts) {
  AbelianCentralizersReport rep;
  const Subspace Z = center(L);
  const CosetEnum e = coset_representatives(L, Z, opts);

  const auto ranges = split_ranges(e.count, opts.workers);
  std::vector<u64> fail_idx(ranges.size(), UINT64_MAX);

  auto work = [&](size_t w) {
    Vec x(L.dim(), 0);
    for (u64 idx = std::max<u64>(ranges[w].first, 1); idx < ranges[w].second; ++idx) {
      e.decode(idx, x);
      if (!L.is_abelian_subspace(L.centralizer(x))) {
        fail_idx[w] = idx;
        return;
      }
    }
  };

  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < ranges.size(); ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  u64 best = UINT64_MAX;
  for (u64 fi : fail_idx) best = std::min(best, fi);
  if (best == UINT64_MAX) {
    rep.all_abelian = true;
    return rep;
  }
  Vec x(L.dim(), 0);
  e.decode(best, x);
  const Subspace C = L.centralizer(x);
  for (int a = 0; a < C.dim() && !rep.witness_pair; ++a)
    for (int b = a + 1; b < C.dim(); ++b) {
      Vec w = L.bracket(C.basis().row(a), C.basis().row(b));
      if (std::any_of(w.begin(), w.end(), [](u64 v) { return v != 0; })) {
        rep.witness_pair = std::make_pair(Vec(C.basis().row(a).begin(), C.basis().row(a).end()),
                                          Vec(C.basis().row(b).begin(), C.basis().row(b).end()));
        break;
      }
    }
  rep.all_abelian = false;
  rep.witness_x = std::move(x);
  return rep;
}

Fingerprint fingerprint(const LieAlgebra& L, const EnumOptions& opts) {
  Fingerprint fp;
  fp.dim = L.dim();
  SeriesReport s = series(L);
  fp.nilpotency_class = s.nilpotency_class;
  fp.gamma_dims = s.gamma_dims;
  fp.center_dim = s.center_dim;
  fp.derived_dim = s.derived_dim;
  fp.is_stem = s.is_stem;
  BreadthReport b = breadth_report(L, opts);
  fp.breadth_histogram = b.histogram;
  fp.type_set = b.type_set;
  fp.is_camina = camina(L, opts).is_camina;
  fp.all_noncentral_centralizers_abelian = noncentral_centralizers_abelian(L, opts).all_abelian;
  return fp;
}

QuotientResult quotient(const LieAlgebra& L, const Subspace& I) {
  if (I.ambient() != L.dim()) fail("ShapeError", "ambient mismatch");
  const Subspace full = Subspace::full(L.field(), L.dim());
  if (!I.contains(subspace_bracket(L, full, I))) fail("NotAnIdeal", "[L, I] is not contained in I");

  const std::vector<int> comp = I.complement_positions();
  const int k = static_cast<int>(comp.size());
  Mat proj(L.field(), k, L.dim());
  for (int j = 0; j < L.dim(); ++j) {
    Vec ej(L.dim(), 0);
    ej[j] = 1;
    Vec red = I.reduce_vec(ej);
    for (int a = 0; a < k; ++a) proj.at(a, j) = red[comp[a]];
  }

  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a) labels.push_back(L.labels()[comp[a]]);
  LieAlgebra Q(L.field(), k, std::move(labels));
  Vec ei(L.dim()), ej(L.dim());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      std::fill(ei.begin(), ei.end(), 0);
      std::fill(ej.begin(), ej.end(), 0);
      ei[comp[a]] = 1;
      ej[comp[b]] = 1;
      Vec br = proj.mul_vec(L.bracket(ei, ej));
      Q.set_bracket(a, b, br);
    }
  ensure_valid(Q);
  return QuotientResult{std::move(Q), std::move(proj)};
}

Vec Presentation::rhs_for(int i, int j) const {
  for (const Relation& r : relations)
    if (r.i == i && r.j == j) return r.rhs;
  return Vec(generators.size(), 0);
}

HomReport check_hom(const Presentation& pres, const LieAlgebra& target,
                    const std::vector<Vec>& images) {
  const int g = static_cast<int>(pres.generators.size());
  if (static_cast<int>(images.size()) != g) fail("ShapeError", "one image per generator required");
  if (!pres.field.same(target.field())) fail("FieldMismatch", "presentation/target field mismatch");
  for (const Vec& im : images)
    if (static_cast<int>(im.size()) != target.dim()) fail("ShapeError", "bad image length");

  const Field& F = target.field();
  HomReport rep;
  rep.relations_hold = true;
  for (int i = 0; i < g && rep.relations_hold; ++i)
    for (int j = i + 1; j < g; ++j) {
      const Vec rhs = pres.rhs_for(i, j);
      Vec expected(target.dim(), 0);
      for (int t = 0; t < g; ++t) {
        if (rhs[t] == 0) continue;
        for (int s = 0; s < target.dim(); ++s)
          expected[s] = F.add(expected[s], F.mul(rhs[t], images[t][s]));
      }
      if (target.bracket(images[i], images[j]) != expected) {
        rep.relations_hold = false;
        rep.detail = "relation failed at generator pair (" + pres.generators[i] + ", " +
                     pres.generators[j] + ")";
        break;
      }
    }
  rep.images_generate = generated(target, images).dim() == target.dim();
  rep.dims_match = target.dim() == g;
  rep.is_isomorphism_evidence = rep.relations_hold && rep.images_generate && rep.dims_match;
  return rep;
}

}  // namespace fflie::liealg
