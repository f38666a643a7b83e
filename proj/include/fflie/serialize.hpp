#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "fflie/gf.hpp"
#include "fflie/liealg.hpp"
#include "fflie/linalg.hpp"
#include "fflie/semifield.hpp"

/// JSON formats. Elements are nested coordinate arrays grounded in integers
/// mod p: a prime-level element is an int, an extension-level element is the
/// array of its coordinates over the level below. Polynomials are coefficient
/// arrays, constant term first. Parse failures raise ParseError.
namespace fflie::serialize {

using gf::Field;
using gf::FieldTower;
using gf::u64;
using liealg::LieAlgebra;
using linalg::Mat;
using linalg::Vec;
using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

ordered_json element_to_json(const Field& f, u64 x);
u64 element_from_json(const Field& f, const ordered_json& j);

/// {"p": int, "tower": [poly, ...]}; poly k defines level k over level k-1.
/// top_level < 0 serializes the whole tower, otherwise levels 1..top_level.
ordered_json tower_to_json(const FieldTower& t, int top_level = -1);
FieldTower tower_from_json(const ordered_json& j);

/// Nested arrays of element serializations, row-major.
ordered_json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Field& f, const ordered_json& j);

/// {"p", "tower", "dim", "labels", "brackets": [[i, j, [[k, coeff], ...]],
/// ...]} with i < j, 0-based, zero coefficients omitted; the tower is
/// truncated at the algebra's field level (the algebra lives on its top).
ordered_json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const ordered_json& j);

/// {"p", "tower", "n", "mult": n x n array of product coordinate arrays,
/// "identity": coordinate array or null}.
ordered_json semifield_to_json(const semifield::PreSemifield& P,
                               const std::optional<Vec>& identity);
std::pair<semifield::PreSemifield, std::optional<Vec>> semifield_from_json(
    const ordered_json& j);

ordered_json fingerprint_to_json(const liealg::Fingerprint& fp);

}  // namespace fflie::serialize
