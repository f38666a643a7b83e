#include "fflie/suites.hpp"

#include <chrono>
#include <sstream>

#include "fflie/liealg.hpp"
#include "fflie/semifield.hpp"

namespace fflie::suites {

using constructions::FieldSetup;
using gf::Field;
using liealg::EnumOptions;
using liealg::LieAlgebra;
using linalg::Mat;
using linalg::Subspace;
using linalg::Vec;

namespace {

u64 ipow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) r *= base;
  return r;
}

struct Outcome {
  bool ok = false;
  std::string details;
};

class Runner {
public:
  template <typename F>
  void run(const std::string& name, F&& body) {
    Check c{name, "fail", ""};
    try {
      Outcome o = body();
      c.status = o.ok ? "pass" : "fail";
      c.details = std::move(o.details);
    } catch (const Error& e) {
      if (e.kind() == "BudgetExceeded") {
        c.status = "skipped";
        c.details = e.what();
      } else {
        c.details = e.what();
      }
    } catch (const std::exception& e) {
      c.details = e.what();
    }
    checks.push_back(std::move(c));
  }

  std::vector<Check> checks;
};

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

EnumOptions enum_opts(const SuiteParams& p) {
  return EnumOptions{p.budget, p.workers, false};
}

u64 count_at(const liealg::BreadthReport& br, int breadth) {
  for (const auto& [b, n] : br.histogram)
    if (b == breadth) return n;
  return 0;
}

// ---------------------------------------------------------------------------

void suite_gm(const SuiteParams& p, Runner& r) {
  const FieldSetup fs = FieldSetup::make(p.q, p.m);
  const LieAlgebra L = constructions::g_m_direct(fs);
  const u32 m = p.m;

  r.run("validates", [&] {
    return Outcome{liealg::validate(L).ok, "antisymmetry and Jacobi hold"};
  });
  r.run("breadth_type", [&] {
    const auto br = liealg::breadth_report(L, enum_opts(p));
    const bool ok = br.type_set == std::vector<int>{0, static_cast<int>(2 * m)};
    return Outcome{ok, "type " + join_ints(br.type_set)};
  });
  r.run("histogram_counts", [&] {
    const auto br = liealg::breadth_report(L, enum_opts(p));
    const u64 zero = count_at(br, 0);
    const u64 top = count_at(br, static_cast<int>(2 * m));
    const u64 all = ipow(p.q, 5 * m);
    const bool ok = zero == ipow(p.q, 2 * m) && top == all - zero;
    return Outcome{ok, std::to_string(zero) + " elements of breadth 0, " + std::to_string(top) +
                           " of breadth " + std::to_string(2 * m)};
  });
  r.run("series_structure", [&] {
    const auto s = liealg::series(L);
    const bool ok = s.nilpotency_class == 3 && s.gamma_dims.size() >= 3 &&
                    s.gamma_dims[1] == static_cast<int>(3 * m) &&
                    s.gammas[2] == s.center_space && s.is_stem;
    return Outcome{ok, "gamma dims " + join_ints(s.gamma_dims) + ", stem"};
  });
  r.run("c_slot_centralizer", [&] {
    Vec x(L.dim(), 0);
    x[2 * m] = 1;  // c-slot, power 0
    const auto derived = liealg::derived_subalgebra(L);
    const bool ok = L.centralizer(x) == derived && L.breadth(x) == static_cast<int>(2 * m);
    return Outcome{ok, "centralizer of the c-slot unit equals the derived subalgebra"};
  });
}

void suite_dimensions(const SuiteParams& p, Runner& r) {
  const FieldSetup fs = FieldSetup::make(p.q, p.m);
  const LieAlgebra L = constructions::g_m_direct(fs);
  const auto s = liealg::series(L);
  const u32 m = p.m;

  r.run("dim_over_derived_is_2m", [&] {
    const bool ok = L.dim() - s.derived_dim == static_cast<int>(2 * m);
    return Outcome{ok, std::to_string(L.dim() - s.derived_dim)};
  });
  r.run("derived_over_center_is_m", [&] {
    const bool ok = s.derived_dim - s.center_dim == static_cast<int>(m);
    return Outcome{ok, std::to_string(s.derived_dim - s.center_dim)};
  });
  r.run("centralizers_meet_derived_in_center", [&] {
    const auto e = liealg::coset_representatives(L, s.center_space, enum_opts(p));
    Vec x(L.dim(), 0);
    u64 scanned = 0;
    for (u64 idx = 0; idx < e.count; ++idx) {
      std::fill(x.begin(), x.end(), 0);
      e.decode(idx, x);
      if (s.derived.contains_vec(x)) continue;
      const Subspace c = L.centralizer(x);
      if (!(c.intersect(s.derived) == s.center_space)) return Outcome{false, "intersection"};
      if (c.dim() - s.center_dim != static_cast<int>(m)) return Outcome{false, "dimension"};
      ++scanned;
    }
    return Outcome{true, std::to_string(scanned) + " cosets outside the derived subalgebra"};
  });
  r.run("restricted_centralizer_elements_span", [&] {
    const auto e = liealg::coset_representatives(L, s.center_space, enum_opts(p));
    Vec x(L.dim(), 0);
    Subspace span = s.center_space;
    for (u64 idx = 0; idx < e.count && span.dim() < L.dim(); ++idx) {
      std::fill(x.begin(), x.end(), 0);
      e.decode(idx, x);
      if (L.centralizer(x).intersect(s.derived) == s.center_space)
        span = span.sum(Subspace::span(L.field(), L.dim(), {x}));
    }
    return Outcome{span.dim() == L.dim(), "span dimension " + std::to_string(span.dim())};
  });
  r.run("center_is_third_lower_central_term", [&] {
    const bool ok = s.gammas.size() >= 3 && s.gammas[2] == s.center_space;
    return Outcome{ok, "gamma_3 equals the center"};
  });
}

void suite_u3char(const SuiteParams& p, Runner& r) {
  const FieldSetup fs = FieldSetup::make(p.q, p.m);
  const LieAlgebra U = constructions::u_n_restricted(3, fs);

  r.run("u3_camina", [&] {
    return Outcome{liealg::camina(U, enum_opts(p)).is_camina, ""};
  });
  r.run("u3_class_and_derived", [&] {
    const auto s = liealg::series(U);
    const bool ok = s.nilpotency_class == 2 && s.derived_dim == static_cast<int>(p.m);
    return Outcome{ok, "class 2, derived dimension " + std::to_string(s.derived_dim)};
  });
  r.run("u3_centralizers_abelian", [&] {
    return Outcome{liealg::noncentral_centralizers_abelian(U, enum_opts(p)).all_abelian,
                   "every noncentral coset checked"};
  });

  // converse witness: the proper Dickson semifield over F_9 (fixed instance,
  // independent of the suite's q so the scan stays within any budget)
  const FieldSetup fs9 = FieldSetup::make(9, 1);
  const semifield::Semifield S = semifield::dickson(fs9.fq(), 1, std::nullopt);
  const int half = S.pre.n / 2;

  r.run("dickson_lie_algebra_camina", [&] {
    const LieAlgebra L = semifield::lie_of(S.pre);
    return Outcome{liealg::camina(L, enum_opts(p)).is_camina, ""};
  });
  r.run("dickson_identity_pair_centralizer_nonabelian", [&] {
    Vec a(S.pre.n, 0), b(S.pre.n, 0);
    a[0] = 1;     // the multiplicative identity (1, 0)
    b[half] = 1;  // (0, 1)
    const auto rep = semifield::centralizer_pair(S.pre, a, b);
    if (rep.abelian || !rep.witness) return Outcome{false, "centralizer is abelian"};
    return Outcome{true, "non-commuting witness pair found in a centralizer of dimension " +
                             std::to_string(rep.c.dim())};
  });
  r.run("dickson_mid_is_base_field", [&] {
    const auto mid = semifield::middle_nucleus(S, p.budget);
    bool base_inside = true;
    Vec e(S.pre.n, 0);
    for (int t = 0; t < half; ++t) {
      std::fill(e.begin(), e.end(), 0);
      e[t] = 1;
      if (!mid.mid.contains_vec(e)) base_inside = false;
    }
    const bool ok = mid.size == 9 && mid.is_field && base_inside;
    return Outcome{ok, std::to_string(mid.size) + " elements, field: " +
                           (mid.is_field ? "yes" : "no")};
  });
}

void suite_uniqueness(const SuiteParams& p, Runner& r) {
  const FieldSetup fs = FieldSetup::make(p.q, p.m);
  const LieAlgebra G = constructions::g_m_direct(fs);

  r.run("quotient_matches_direct", [&] {
    const LieAlgebra Q = constructions::g_m_quotient(fs);
    return Outcome{Q.tensor() == G.tensor(), "tensors bit-identical"};
  });
  r.run("presentation_validates", [&] {
    constructions::v_presentation(fs);  // JacobiFailure on violation
    return Outcome{true, "Jacobi holds for the presentation tensor"};
  });
  r.run("hom_is_isomorphism_evidence", [&] {
    const auto [V, pres] = constructions::v_presentation(fs);
    const auto images = constructions::v_standard_images(fs);
    const auto hom = liealg::check_hom(pres, G, images);
    return Outcome{hom.is_isomorphism_evidence,
                   hom.is_isomorphism_evidence ? "relations, generation, dimension" : hom.detail};
  });
  r.run("fingerprint_match", [&] {
    const auto [V, pres] = constructions::v_presentation(fs);
    const bool ok = liealg::fingerprint(V, enum_opts(p)) == liealg::fingerprint(G, enum_opts(p));
    return Outcome{ok, "presentation algebra and direct construction agree"};
  });
}

void suite_central_quotient(const SuiteParams& p, Runner& r) {
  const FieldSetup fs = FieldSetup::make(p.q, p.m);
  const LieAlgebra G = constructions::g_m_direct(fs);
  const auto s = liealg::series(G);
  const LieAlgebra Q = liealg::quotient(G, s.center_space).algebra;

  r.run("quotient_camina", [&] {
    return Outcome{liealg::camina(Q, enum_opts(p)).is_camina, ""};
  });
  r.run("quotient_centralizers_abelian", [&] {
    return Outcome{liealg::noncentral_centralizers_abelian(Q, enum_opts(p)).all_abelian, ""};
  });
  r.run("extracted_semifield_is_field", [&] {
    const auto [astar, bstar] = semifield::abelian_star_pair(Q);
    const semifield::PreSemifield P = semifield::extract(Q, astar, bstar);
    const semifield::Semifield S = semifield::normalize_to_semifield(P).first;
    const auto ac = semifield::assoc_comm(S.pre);
    const auto mid = semifield::middle_nucleus(S, p.budget);
    const bool ok =
        ac.is_associative && ac.is_commutative && mid.is_field && mid.size == ipow(p.q, p.m);
    return Outcome{ok, "associative, commutative, middle nucleus of full size " +
                           std::to_string(mid.size)};
  });
  if (p.q != 3 || p.m != 1) {
    r.checks.push_back({"derived_correction_exhaustive", "skipped",
                        "exhaustive pair scan configured for (q, m) = (3, 1)"});
    return;
  }
  r.run("derived_correction_exhaustive", [&] {
    const Subspace& derived = s.derived;
    const Subspace& center = s.center_space;
    const u64 total = ipow(p.q, G.dim());
    std::vector<Vec> all(total, Vec(G.dim(), 0));
    for (u64 idx = 0; idx < total; ++idx) {
      u64 v = idx;
      for (int t = 0; t < G.dim(); ++t) {
        all[idx][t] = v % p.q;
        v /= p.q;
      }
    }
    std::vector<Vec> derived_elems;
    for (const Vec& x : all)
      if (derived.contains_vec(x)) derived_elems.push_back(x);
    u64 pairs = 0;
    const Vec zero(G.dim(), 0);
    for (const Vec& u : all) {
      if (derived.contains_vec(u)) continue;
      for (const Vec& v : all) {
        if (derived.contains_vec(v)) continue;
        if (!center.contains_vec(G.bracket(u, v))) continue;
        ++pairs;
        bool fixed = false;
        Vec shifted(G.dim());
        for (const Vec& h : derived_elems) {
          for (int t = 0; t < G.dim(); ++t) shifted[t] = G.field().add(v[t], h[t]);
          if (G.bracket(u, shifted) == zero) {
            fixed = true;
            break;
          }
        }
        if (!fixed) return Outcome{false, "no correction for some pair"};
      }
    }
    return Outcome{true, std::to_string(pairs) + " commuting-mod-center pairs corrected"};
  });
}

void suite_semifield_roundtrip(const SuiteParams& p, Runner& r) {
  const FieldSetup fs_field = FieldSetup::make(p.q, 1);
  const semifield::Semifield F = semifield::field_semifield(fs_field.fq(), 2);
  const FieldSetup fs2 = FieldSetup::make(p.q * p.q, 1);
  const semifield::Semifield D = semifield::dickson(fs2.fq(), 1, std::nullopt);

  const auto roundtrip = [](const semifield::PreSemifield& P) {
    const LieAlgebra L = semifield::lie_of(P);
    const auto [astar, bstar] = semifield::abelian_star_pair(L);
    return semifield::extract(L, astar, bstar) == P;
  };
  r.run("field_extract_roundtrip", [&] {
    return Outcome{roundtrip(F.pre), "tensor recovered bit-identically"};
  });
  r.run("dickson_extract_roundtrip", [&] {
    return Outcome{roundtrip(D.pre), "tensor recovered bit-identically"};
  });

  const auto transport = [&](const semifield::PreSemifield& P, linalg::SplitMix64& rng) {
    for (int t = 0; t < 10; ++t) {
      const semifield::Isotopism iso{linalg::random_invertible(P.field, P.n, rng.next()),
                                     linalg::random_invertible(P.field, P.n, rng.next()),
                                     linalg::random_invertible(P.field, P.n, rng.next())};
      const semifield::PreSemifield P2 = semifield::apply_isotopism(P, iso);
      if (!semifield::verify_isotopism(P, P2, iso)) return false;
      if (!semifield::lie_iso_from_isotopism(P, P2, iso).verified) return false;
    }
    return true;
  };
  r.run("isotopy_transport", [&] {
    linalg::SplitMix64 rng{p.seed};
    const bool ok = transport(F.pre, rng) && transport(D.pre, rng);
    return Outcome{ok, "10 seeded isotopisms per semifield, all transported"};
  });
  r.run("broken_isotopism_rejected", [&] {
    linalg::SplitMix64 rng{p.seed ^ 0x9e3779b97f4a7c15ULL};
    const semifield::Isotopism iso{linalg::random_invertible(D.pre.field, D.pre.n, rng.next()),
                                   linalg::random_invertible(D.pre.field, D.pre.n, rng.next()),
                                   linalg::random_invertible(D.pre.field, D.pre.n, rng.next())};
    const semifield::PreSemifield D2 = semifield::apply_isotopism(D.pre, iso);
    Mat crooked = iso.C;
    for (int c = 0; c < crooked.cols(); ++c) std::swap(crooked.at(0, c), crooked.at(1, c));
    const semifield::Isotopism broken{iso.A, iso.B, crooked};
    if (semifield::verify_isotopism(D.pre, D2, broken))
      return Outcome{false, "tampered isotopism unexpectedly verified"};
    try {
      semifield::lie_iso_from_isotopism(D.pre, D2, broken);
      return Outcome{false, "no rejection raised"};
    } catch (const Error& e) {
      return Outcome{e.kind() == "IsotopismInvalid", e.what()};
    }
  });
}

void suite_parity(const SuiteParams& p, Runner& r) {
  const auto entries = constructions::catalog(p.q);
  std::vector<std::pair<std::string, LieAlgebra>> built;

  r.run("catalog_builds_and_validates", [&] {
    for (const auto& e : entries) {
      LieAlgebra L = e.build();
      if (!liealg::validate(L).ok) return Outcome{false, e.name + " failed validation"};
      built.emplace_back(e.name, std::move(L));
    }
    return Outcome{built.size() >= 6,
                   std::to_string(built.size()) + " catalog entries built and validated"};
  });
  r.run("two_breadth_class3_entries_have_even_breadth", [&] {
    std::ostringstream os;
    u64 matching = 0, skipped = 0;
    for (const auto& [name, L] : built) {
      const auto s = liealg::series(L);
      if (s.nilpotency_class != 3) continue;
      try {
        const auto br = liealg::breadth_report(L, enum_opts(p));
        if (br.type_set.size() != 2 || br.type_set[0] != 0) continue;
        ++matching;
        os << name << ":" << join_ints(br.type_set) << " ";
        if (br.type_set[1] % 2 != 0) return Outcome{false, name + " has odd nonzero breadth"};
      } catch (const Error& e) {
        if (e.kind() != "BudgetExceeded") throw;
        ++skipped;
      }
    }
    if (matching == 0) return Outcome{false, "no two-breadth class-3 entries scanned"};
    std::string details = os.str() + "(" + std::to_string(matching) + " scanned";
    if (skipped > 0) details += ", " + std::to_string(skipped) + " over budget";
    details += ")";
    return Outcome{true, details};
  });
}

}  // namespace

bool SuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

ordered_json SuiteReport::to_json() const {
  ordered_json out;
  out["suite"] = suite;
  out["params"] = {{"q", params.q}, {"m", params.m}, {"seed", params.seed},
                   {"budget", params.budget}};
  ordered_json cs = ordered_json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"status", c.status}, {"details", c.details}});
  out["checks"] = std::move(cs);
  out["elapsed_ms"] = elapsed_ms;
  out["version"] = serialize::kVersion;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "gm",      "dimensions",       "u3char", "uniqueness",
      "central_quotient", "semifield_roundtrip", "parity"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = name;
  report.params = params;
  Runner r;
  if (name == "gm")
    suite_gm(params, r);
  else if (name == "dimensions")
    suite_dimensions(params, r);
  else if (name == "u3char")
    suite_u3char(params, r);
  else if (name == "uniqueness")
    suite_uniqueness(params, r);
  else if (name == "central_quotient")
    suite_central_quotient(params, r);
  else if (name == "semifield_roundtrip")
    suite_semifield_roundtrip(params, r);
  else if (name == "parity")
    suite_parity(params, r);
  else
    fail("UnknownSuite", "no suite named '" + name + "'");
  report.checks = std::move(r.checks);
  report.elapsed_ms = static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - start)
                                           .count());
  return report;
}

const std::vector<CoverageEntry>& coverage() {
  static const std::vector<CoverageEntry> table = {
      {"two-breadth class-3 algebras have even nonzero breadth", {"parity"}},
      {"quotient-family breadth type is (0,2m) with q^2m breadth-0 elements", {"gm"}},
      {"quotient-family series: class 3, stem, gamma_2 of dimension 3m", {"gm"}},
      {"centralizer of the c-slot unit equals the derived subalgebra", {"gm"}},
      {"dim(L/L') is twice m for the two-breadth class-3 stem families", {"dimensions"}},
      {"centralizers of elements outside L' meet L' exactly in the center", {"dimensions"}},
      {"dim(L'/Z) = m for the two-breadth class-3 stem families", {"dimensions"}},
      {"elements whose derived centralizer is the center span the algebra", {"dimensions"}},
      {"the center equals the third lower central term", {"dimensions", "gm"}},
      {"restricted u3 is Camina of class 2 with abelian noncentral centralizers", {"u3char"}},
      {"a proper semifield's Lie algebra has a non-abelian noncentral centralizer", {"u3char"}},
      {"the Dickson middle nucleus is exactly the base field", {"u3char"}},
      {"matrix-family central quotient matches the direct construction", {"uniqueness"}},
      {"presentation algebra is isomorphic to the direct construction", {"uniqueness"}},
      {"central quotient is Camina with abelian noncentral centralizers", {"central_quotient"}},
      {"central quotient carries a field structure via extraction", {"central_quotient"}},
      {"pairs commuting modulo the center commute after a derived correction",
       {"central_quotient"}},
      {"semifield extraction inverts the Lie algebra construction", {"semifield_roundtrip"}},
      {"isotopic semifields yield isomorphic Lie algebras", {"semifield_roundtrip"}},
  };
  return table;
}

}  // namespace fflie::suites
