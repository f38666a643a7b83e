#pragma once

#include <string>
#include <vector>

#include "fflie/constructions.hpp"
#include "fflie/serialize.hpp"

/// Named verification suites: each one turns a family of algebraic claims
/// into an executable pass/fail report over chosen parameters (q, m).
namespace fflie::suites {

using gf::u32;
using gf::u64;
using serialize::ordered_json;

inline constexpr u64 kDefaultSeed = 1729;
inline constexpr u64 kDefaultBudget = 78125;  // 5^7 coset representatives

struct SuiteParams {
  u64 q = 3;
  u32 m = 1;
  u64 seed = kDefaultSeed;
  u64 budget = kDefaultBudget;
  int workers = 1;  // excluded from reports: results are worker-independent
};

struct Check {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string details;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<Check> checks;
  u64 elapsed_ms = 0;

  /// Overall verdict: every non-skipped check passed.
  bool all_passed() const;
  /// {"suite","params","checks","elapsed_ms","version"}; everything except
  /// elapsed_ms is byte-reproducible for fixed (params, seed).
  ordered_json to_json() const;
};

/// Registered suite names, registration order.
const std::vector<std::string>& suite_names();

/// Runs one suite; UnknownSuite for unregistered names. Checks whose
/// enumeration exceeds params.budget are reported as skipped, with reasons.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

/// Claim coverage table: every claim the library asserts maps to the suites
/// exercising it. Tests fail if a claim has no registered suite.
struct CoverageEntry {
  std::string claim;
  std::vector<std::string> suites;
};
const std::vector<CoverageEntry>& coverage();

}  // namespace fflie::suites
