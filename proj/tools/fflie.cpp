#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fflie/constructions.hpp"
#include "fflie/liealg.hpp"
#include "fflie/semifield.hpp"
#include "fflie/serialize.hpp"
#include "fflie/suites.hpp"

namespace {

using fflie::Error;
using fflie::fail;
using fflie::constructions::FieldSetup;
using fflie::gf::u32;
using fflie::gf::u64;
using fflie::liealg::LieAlgebra;
using fflie::linalg::Vec;
using fflie::serialize::ordered_json;

namespace constructions = fflie::constructions;
namespace liealg = fflie::liealg;
namespace linalg = fflie::linalg;
namespace semifield = fflie::semifield;
namespace serialize = fflie::serialize;
namespace suites = fflie::suites;

/// Exit codes: 0 success / all-pass, 1 verification failed, 2 usage or
/// parameter error, 3 enumeration budget exceeded.
int error_exit_code(const Error& e) {
  if (e.kind() == "BudgetExceeded") return 3;
  static const std::set<std::string> usage = {
      "BadParameter",  "UnsupportedCharacteristic",
      "UnsupportedParameters", "ParseError",
      "UnknownSuite",  "ShapeError",
      "FieldMismatch", "NotAnIdeal",
      "NoNonsquare"};
  return usage.count(e.kind()) ? 2 : 1;
}

u64 parse_u64(const std::string& s, const char* what) {
  u64 value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail("BadParameter", std::string(what) + " must be a nonnegative integer, got '" + s + "'");
  return value;
}

u64 default_budget() {
  if (const char* env = std::getenv("LBA_BUDGET")) return parse_u64(env, "LBA_BUDGET");
  return suites::kDefaultBudget;
}

bool is_prime(u64 v) {
  if (v < 2) return false;
  for (u64 d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// q directly, or p^s from explicit --p/--s.
u64 resolve_q(u64 q, bool q_given, u64 p, bool p_given, u32 s, bool s_given) {
  if (p_given) {
    if (q_given) fail("BadParameter", "give either --q or --p/--s, not both");
    if (!is_prime(p)) fail("BadParameter", "--p must be prime, got " + std::to_string(p));
    u64 result = 1;
    for (u32 i = 0; i < s; ++i) {
      if (result > (u64{1} << 40)) fail("BadParameter", "p^s out of range");
      result *= p;
    }
    return result;
  }
  if (s_given) fail("BadParameter", "--s requires --p");
  return q;
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("ParseError", "cannot open '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const std::exception& e) {
    fail("ParseError", "invalid JSON in '" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("BadParameter", "cannot open '" + path + "' for writing");
  out << bytes;
  if (!out) fail("BadParameter", "failed writing '" + path + "'");
}

/// Artifact emitters (construct, semifield builders): the JSON payload goes
/// to -o whenever -o is given, so written files always round-trip; the text
/// summary, when selected, goes to stdout instead of the payload.
void emit_artifact(const ordered_json& payload, const std::string& summary,
                   const std::string& format, const std::string& out_path) {
  const std::string bytes = payload.dump(2) + "\n";
  if (!out_path.empty()) {
    write_file(out_path, bytes);
    if (format == "text-summary") std::cout << summary;
  } else {
    std::cout << (format == "text-summary" ? summary : bytes);
  }
}

/// Report emitters (analyze, verify, mid, isotopy-check): the selected
/// rendering goes to -o or stdout.
void emit_report(const ordered_json& payload, const std::string& summary,
                 const std::string& format, const std::string& out_path) {
  const std::string bytes = format == "text-summary" ? summary : payload.dump(2) + "\n";
  if (out_path.empty())
    std::cout << bytes;
  else
    write_file(out_path, bytes);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string render_type_set(const std::vector<int>& type_set) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < type_set.size(); ++i) os << (i ? "," : "") << type_set[i];
  os << "}";
  return os.str();
}

std::string render_suite_text(const suites::SuiteReport& rep) {
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& c : rep.checks) {
    if (c.status == "pass") ++passed;
    else if (c.status == "skipped") ++skipped;
    else ++failed;
  }
  std::ostringstream os;
  os << "suite " << rep.suite << " (q=" << rep.params.q << ", m=" << rep.params.m
     << "): " << (rep.all_passed() ? "PASS" : "FAIL") << " — " << passed << " passed, "
     << failed << " failed, " << skipped << " skipped [" << rep.elapsed_ms << " ms]\n";
  for (const auto& c : rep.checks) {
    os << "  " << c.status << "  " << c.name;
    if (!c.details.empty()) os << ": " << c.details;
    os << "\n";
  }
  return os.str();
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"finite-field nilpotent Lie algebras: construction, analysis, verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", serialize::kVersion);

  const u64 budget_default = default_budget();

  // --- construct ------------------------------------------------------------
  auto* construct = app.add_subcommand(
      "construct", "Build a named algebra over F_q (optionally restricted from F_{q^m})");
  std::string c_kind;
  u64 c_q = 3, c_p = 0;
  u32 c_s = 1, c_m = 1, c_n = 2;
  std::vector<u64> c_poly;
  std::string c_out, c_format = "json";
  construct->add_option("kind", c_kind, "gm | lm | u3 | u5 | v | lf-dickson | lf-field")
      ->required()
      ->check(CLI::IsMember({"gm", "lm", "u3", "u5", "v", "lf-dickson", "lf-field"}));
  auto* c_q_opt = construct->add_option("--q", c_q, "field order, a prime power (default 3)");
  auto* c_p_opt = construct->add_option("--p", c_p, "characteristic (alternative to --q)");
  auto* c_s_opt = construct->add_option("--s", c_s, "q = p^s (with --p; default 1)");
  construct->add_option("--m", c_m, "extension degree of the scalar field (default 1)");
  construct->add_option("--n", c_n, "extension degree for lf-field (default 2)");
  construct->add_option("--poly", c_poly,
                        "modulus override for the top extension, constant term first")
      ->delimiter(',');
  construct->add_option("-o,--output", c_out, "write the algebra JSON here (default stdout)");
  construct->add_option("--format", c_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  // --- analyze ---------------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "Analyze an algebra file written by construct");
  std::string a_file, a_out, a_format = "json";
  bool a_breadth = false, a_series = false, a_fingerprint = false;
  u64 a_budget = budget_default;
  int a_workers = 1;
  analyze->add_option("file", a_file, "algebra JSON file")->required();
  analyze->add_flag("--breadth", a_breadth, "breadth histogram and type set");
  analyze->add_flag("--series", a_series, "lower central series summary");
  analyze->add_flag("--fingerprint", a_fingerprint, "full isomorphism-invariant fingerprint");
  analyze->add_option("--budget", a_budget, "max coset representatives per scan");
  analyze->add_option("--workers", a_workers, "parallel workers for the scans");
  analyze->add_option("-o,--output", a_out, "write the report here (default stdout)");
  analyze->add_option("--format", a_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  // --- verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string v_suite, v_out, v_format = "json";
  u64 v_q = 3, v_p = 0, v_seed = suites::kDefaultSeed, v_budget = budget_default;
  u32 v_s = 1, v_m = 1;
  int v_workers = 1;
  verify->add_option("suite", v_suite, "gm | dimensions | u3char | uniqueness | central_quotient | semifield_roundtrip | parity")
      ->required();
  auto* v_q_opt = verify->add_option("--q", v_q, "field order, a prime power (default 3)");
  auto* v_p_opt = verify->add_option("--p", v_p, "characteristic (alternative to --q)");
  auto* v_s_opt = verify->add_option("--s", v_s, "q = p^s (with --p; default 1)");
  verify->add_option("--m", v_m, "extension degree (default 1)");
  verify->add_option("--seed", v_seed, "seed for the seeded checks (fixed default)");
  verify->add_option("--budget", v_budget, "max coset representatives per scan");
  verify->add_option("--workers", v_workers, "parallel workers for the scans");
  verify->add_option("-o,--output", v_out, "write the report here (default stdout)");
  verify->add_option("--format", v_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  // --- semifield ---------------------------------------------------------------
  auto* sf = app.add_subcommand("semifield", "Build and examine (pre-)semifields");
  sf->require_subcommand(1);

  auto* sfd = sf->add_subcommand("dickson", "Dickson commutative semifield on F_q x F_q (q = p^s, s > 1, p odd)");
  u64 sfd_q = 9, sfd_p = 0;
  u32 sfd_s = 1, sfd_sigma = 1;
  std::string sfd_k = "auto", sfd_out, sfd_format = "json";
  std::vector<u64> sfd_poly;
  auto* sfd_q_opt = sfd->add_option("--q", sfd_q, "field order, a proper prime power (default 9)");
  auto* sfd_p_opt = sfd->add_option("--p", sfd_p, "characteristic (alternative to --q)");
  auto* sfd_s_opt = sfd->add_option("--s", sfd_s, "q = p^s (with --p)");
  sfd->add_option("--sigma", sfd_sigma, "Frobenius power for the twist (default 1)");
  sfd->add_option("--k", sfd_k, "nonsquare twist constant as an element index, or 'auto'");
  sfd->add_option("--poly", sfd_poly, "modulus override for F_q over F_p, constant term first")
      ->delimiter(',');
  sfd->add_option("-o,--output", sfd_out, "write the semifield JSON here (default stdout)");
  sfd->add_option("--format", sfd_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  auto* sff = sf->add_subcommand("field", "The field F_{q^n} as a semifield over F_q");
  u64 sff_q = 3, sff_p = 0;
  u32 sff_s = 1, sff_n = 2;
  std::string sff_out, sff_format = "json";
  std::vector<u64> sff_poly;
  auto* sff_q_opt = sff->add_option("--q", sff_q, "base field order (default 3)");
  auto* sff_p_opt = sff->add_option("--p", sff_p, "characteristic (alternative to --q)");
  auto* sff_s_opt = sff->add_option("--s", sff_s, "q = p^s (with --p)");
  sff->add_option("--n", sff_n, "extension degree (default 2)");
  sff->add_option("--poly", sff_poly, "modulus override for F_q over F_p, constant term first")
      ->delimiter(',');
  sff->add_option("-o,--output", sff_out, "write the semifield JSON here (default stdout)");
  sff->add_option("--format", sff_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  auto* sfe = sf->add_subcommand(
      "extract", "Recover a pre-semifield from a class-2 Camina algebra file");
  std::string sfe_file, sfe_out, sfe_format = "json";
  sfe->add_option("file", sfe_file, "algebra JSON file")->required();
  sfe->add_option("-o,--output", sfe_out, "write the semifield JSON here (default stdout)");
  sfe->add_option("--format", sfe_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  auto* sfm = sf->add_subcommand("mid", "Middle nucleus of a semifield file");
  std::string sfm_file, sfm_out, sfm_format = "json";
  u64 sfm_budget = budget_default;
  sfm->add_option("file", sfm_file, "semifield JSON file")->required();
  sfm->add_option("--budget", sfm_budget, "max middle-nucleus size for the field check");
  sfm->add_option("-o,--output", sfm_out, "write the report here (default stdout)");
  sfm->add_option("--format", sfm_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  auto* sfi = sf->add_subcommand(
      "isotopy-check", "Transport a semifield file through seeded isotopisms and verify");
  std::string sfi_file, sfi_out, sfi_format = "json";
  int sfi_count = 10;
  u64 sfi_seed = suites::kDefaultSeed;
  sfi->add_option("file", sfi_file, "semifield JSON file")->required();
  sfi->add_option("--count", sfi_count, "number of seeded isotopisms (default 10)")
      ->check(CLI::PositiveNumber);
  sfi->add_option("--seed", sfi_seed, "seed for the isotopism sampler (fixed default)");
  sfi->add_option("-o,--output", sfi_out, "write the report here (default stdout)");
  sfi->add_option("--format", sfi_format, "json | text-summary")
      ->check(CLI::IsMember({"json", "text-summary"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (construct->parsed()) {
    const u64 q = resolve_q(c_q, c_q_opt->count() > 0, c_p, c_p_opt->count() > 0, c_s,
                            c_s_opt->count() > 0);
    const std::optional<std::vector<u64>> poly =
        c_poly.empty() ? std::nullopt : std::optional(c_poly);
    const LieAlgebra L = [&]() -> LieAlgebra {
      if (c_kind == "gm") return constructions::g_m_direct(FieldSetup::make(q, c_m, poly));
      if (c_kind == "lm") return constructions::l_m_matrix_algebra(FieldSetup::make(q, c_m, poly));
      if (c_kind == "u3") return constructions::u_n_restricted(3, FieldSetup::make(q, c_m, poly));
      if (c_kind == "u5") return constructions::u_n_restricted(5, FieldSetup::make(q, c_m, poly));
      if (c_kind == "v") return constructions::v_presentation(FieldSetup::make(q, c_m, poly)).first;
      if (c_m != 1) fail("BadParameter", "--m does not apply to " + c_kind);
      const FieldSetup fs = FieldSetup::make(q, 1, poly);
      if (c_kind == "lf-dickson")
        return semifield::lie_of(semifield::dickson(fs.fq(), 1, std::nullopt).pre);
      return semifield::lie_of(semifield::field_semifield(fs.fq(), c_n).pre);
    }();
    std::ostringstream os;
    os << c_kind << ": dimension " << L.dim() << " over field of order " << L.field().card()
       << " (characteristic " << L.field().characteristic() << ")\n";
    emit_artifact(serialize::algebra_to_json(L), os.str(), c_format, c_out);
    return 0;
  }

  if (analyze->parsed()) {
    const LieAlgebra L = serialize::algebra_from_json(load_json(a_file));
    const auto vr = liealg::validate(L);
    if (!vr.ok) fail("ValidationFailure", "loaded tensor violates " + vr.violation);
    if (!a_breadth && !a_series && !a_fingerprint) a_fingerprint = true;
    const liealg::EnumOptions opts{a_budget, a_workers, false};
    ordered_json out;
    out["dim"] = L.dim();
    std::ostringstream os;
    os << "dimension " << L.dim() << " over field of order " << L.field().card() << "\n";
    if (a_breadth) {
      const auto br = liealg::breadth_report(L, opts);
      ordered_json hist = ordered_json::array();
      for (const auto& [b, count] : br.histogram) hist.push_back({b, count});
      out["breadth"] = {{"histogram", std::move(hist)}, {"type_set", br.type_set}};
      os << "breadth type " << render_type_set(br.type_set) << "; histogram:";
      for (const auto& [b, count] : br.histogram) os << " " << b << "->" << count;
      os << "\n";
    }
    if (a_series) {
      const auto s = liealg::series(L);
      out["series"] = {{"nilpotency_class",
                        s.nilpotency_class ? ordered_json(*s.nilpotency_class) : ordered_json()},
                       {"gamma_dims", s.gamma_dims},
                       {"center_dim", s.center_dim},
                       {"derived_dim", s.derived_dim},
                       {"is_stem", s.is_stem}};
      os << "class " << (s.nilpotency_class ? std::to_string(*s.nilpotency_class) : "none")
         << "; gamma dims [";
      for (size_t i = 0; i < s.gamma_dims.size(); ++i) os << (i ? "," : "") << s.gamma_dims[i];
      os << "]; center dim " << s.center_dim << "; derived dim " << s.derived_dim
         << "; stem: " << yesno(s.is_stem) << "\n";
    }
    if (a_fingerprint) {
      const auto fp = liealg::fingerprint(L, opts);
      out["fingerprint"] = serialize::fingerprint_to_json(fp);
      os << "type " << render_type_set(fp.type_set) << "; class "
         << (fp.nilpotency_class ? std::to_string(*fp.nilpotency_class) : "none")
         << "; camina: " << yesno(fp.is_camina)
         << "; noncentral centralizers abelian: "
         << yesno(fp.all_noncentral_centralizers_abelian) << "\n";
    }
    out["version"] = serialize::kVersion;
    emit_report(out, os.str(), a_format, a_out);
    return 0;
  }

  if (verify->parsed()) {
    suites::SuiteParams sp;
    sp.q = resolve_q(v_q, v_q_opt->count() > 0, v_p, v_p_opt->count() > 0, v_s,
                     v_s_opt->count() > 0);
    sp.m = v_m;
    sp.seed = v_seed;
    sp.budget = v_budget;
    sp.workers = v_workers;
    const suites::SuiteReport rep = suites::run_suite(v_suite, sp);
    emit_report(rep.to_json(), render_suite_text(rep), v_format, v_out);
    return rep.all_passed() ? 0 : 1;
  }

  if (sfd->parsed()) {
    const u64 q = resolve_q(sfd_q, sfd_q_opt->count() > 0, sfd_p, sfd_p_opt->count() > 0, sfd_s,
                            sfd_s_opt->count() > 0);
    const std::optional<std::vector<u64>> poly =
        sfd_poly.empty() ? std::nullopt : std::optional(sfd_poly);
    const std::optional<u64> k =
        sfd_k == "auto" ? std::nullopt : std::optional(parse_u64(sfd_k, "--k"));
    const semifield::Semifield S =
        semifield::dickson(FieldSetup::make(q, 1, poly).fq(), sfd_sigma, k);
    std::ostringstream os;
    os << "dickson semifield on F_" << q << " x F_" << q << ": n=" << S.pre.n
       << " over characteristic " << S.pre.field.characteristic() << "\n";
    emit_artifact(serialize::semifield_to_json(S.pre, S.identity), os.str(), sfd_format, sfd_out);
    return 0;
  }

  if (sff->parsed()) {
    const u64 q = resolve_q(sff_q, sff_q_opt->count() > 0, sff_p, sff_p_opt->count() > 0, sff_s,
                            sff_s_opt->count() > 0);
    const std::optional<std::vector<u64>> poly =
        sff_poly.empty() ? std::nullopt : std::optional(sff_poly);
    const semifield::Semifield S =
        semifield::field_semifield(FieldSetup::make(q, 1, poly).fq(), sff_n);
    std::ostringstream os;
    os << "field semifield F_" << q << "^" << sff_n << ": n=" << S.pre.n << " over F_" << q
       << "\n";
    emit_artifact(serialize::semifield_to_json(S.pre, S.identity), os.str(), sff_format, sff_out);
    return 0;
  }

  if (sfe->parsed()) {
    const LieAlgebra L = serialize::algebra_from_json(load_json(sfe_file));
    const auto vr = liealg::validate(L);
    if (!vr.ok) fail("ValidationFailure", "loaded tensor violates " + vr.violation);
    const auto [astar, bstar] = semifield::abelian_star_pair(L);
    const semifield::PreSemifield P = semifield::extract(L, astar, bstar);
    std::ostringstream os;
    os << "extracted pre-semifield: n=" << P.n << " over field of order " << P.field.card()
       << "\n";
    emit_artifact(serialize::semifield_to_json(P, std::nullopt), os.str(), sfe_format, sfe_out);
    return 0;
  }

  if (sfm->parsed()) {
    auto [P, identity] = serialize::semifield_from_json(load_json(sfm_file));
    const auto f3 = semifield::certify_f3(P);
    if (!f3.ok) fail("HypothesisFailure", "multiplication has zero divisors");
    semifield::Semifield S{P, Vec(P.n, 0)};
    bool normalized = false;
    if (identity) {
      Vec e(P.n, 0);
      for (int i = 0; i < P.n; ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        if (P.mul(*identity, e) != e || P.mul(e, *identity) != e)
          fail("BadParameter", "stored identity is not a two-sided identity");
      }
      S.identity = *identity;
    } else {
      S = semifield::normalize_to_semifield(P).first;
      normalized = true;
    }
    const auto mid = semifield::middle_nucleus(S, sfm_budget);
    ordered_json out;
    out["n"] = S.pre.n;
    out["normalized"] = normalized;
    out["size"] = mid.size;
    out["is_field"] = mid.is_field;
    out["basis"] = serialize::matrix_to_json(mid.mid.basis());
    out["version"] = serialize::kVersion;
    std::ostringstream os;
    os << "middle nucleus: " << mid.size << " elements, field: " << yesno(mid.is_field) << "\n";
    emit_report(out, os.str(), sfm_format, sfm_out);
    return 0;
  }

  if (sfi->parsed()) {
    auto [P, identity] = serialize::semifield_from_json(load_json(sfi_file));
    const auto f3 = semifield::certify_f3(P);
    if (!f3.ok) fail("HypothesisFailure", "multiplication has zero divisors");
    linalg::SplitMix64 rng{sfi_seed};
    int transported = 0;
    for (int i = 0; i < sfi_count; ++i) {
      const semifield::Isotopism iso{linalg::random_invertible(P.field, P.n, rng.next()),
                                     linalg::random_invertible(P.field, P.n, rng.next()),
                                     linalg::random_invertible(P.field, P.n, rng.next())};
      const semifield::PreSemifield P2 = semifield::apply_isotopism(P, iso);
      if (semifield::verify_isotopism(P, P2, iso) &&
          semifield::lie_iso_from_isotopism(P, P2, iso).verified)
        ++transported;
    }
    bool ok = transported == sfi_count;
    bool broken_rejected = false;
    ordered_json out;
    out["count"] = sfi_count;
    out["transported"] = transported;
    if (P.n >= 2) {
      // A deliberately corrupted transport must be rejected on both paths.
      const semifield::Isotopism iso{linalg::random_invertible(P.field, P.n, rng.next()),
                                     linalg::random_invertible(P.field, P.n, rng.next()),
                                     linalg::random_invertible(P.field, P.n, rng.next())};
      const semifield::PreSemifield P2 = semifield::apply_isotopism(P, iso);
      linalg::Mat crooked = iso.C;
      for (int c = 0; c < crooked.cols(); ++c) std::swap(crooked.at(0, c), crooked.at(1, c));
      const semifield::Isotopism broken{iso.A, iso.B, crooked};
      broken_rejected = !semifield::verify_isotopism(P, P2, broken);
      try {
        semifield::lie_iso_from_isotopism(P, P2, broken);
        broken_rejected = false;
      } catch (const Error& e) {
        if (e.kind() != "IsotopismInvalid") throw;
      }
      out["broken_rejected"] = broken_rejected;
      ok = ok && broken_rejected;
    } else {
      out["broken_rejected"] = nullptr;
    }
    out["version"] = serialize::kVersion;
    std::ostringstream os;
    os << transported << "/" << sfi_count << " isotopisms transported";
    if (P.n >= 2) os << "; broken isotopism rejected: " << yesno(broken_rejected);
    os << "\n";
    emit_report(out, os.str(), sfi_format, sfi_out);
    return ok ? 0 : 1;
  }

  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
