#include "fflie/serialize.hpp"

#include <cstdint>

namespace fflie::serialize {

namespace {

[[noreturn]] void bad(const std::string& what) { fail("ParseError", what); }

const ordered_json& field_at(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

/// Accepts any non-negative integer; in-memory documents built from int-typed
/// values carry signed numbers even though the serialized text never does.
bool is_uint(const ordered_json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

u64 uint_at(const ordered_json& j, const char* key) {
  const ordered_json& v = field_at(j, key);
  if (!is_uint(v)) bad(std::string("'") + key + "' must be a non-negative integer");
  return v.get<u64>();
}

}  // namespace

ordered_json element_to_json(const Field& f, u64 x) {
  if (f.level() == 0) return ordered_json(x);
  const Field below = f.base();
  ordered_json arr = ordered_json::array();
  for (u64 c : f.coords(x)) arr.push_back(element_to_json(below, c));
  return arr;
}

u64 element_from_json(const Field& f, const ordered_json& j) {
  if (f.level() == 0) {
    if (!is_uint(j)) bad("prime-level element must be a non-negative integer");
    const u64 v = j.get<u64>();
    if (v >= f.card()) bad("element value out of range");
    return v;
  }
  if (!j.is_array() || j.size() != f.degree())
    bad("extension-level element must be an array of degree length");
  const Field below = f.base();
  std::vector<u64> coords;
  coords.reserve(j.size());
  for (const auto& c : j) coords.push_back(element_from_json(below, c));
  return f.from_coords(coords);
}

ordered_json tower_to_json(const FieldTower& t, int top_level) {
  const int top = top_level < 0 ? t.levels() - 1 : top_level;
  if (top < 0 || top >= t.levels()) fail("ShapeError", "tower level out of range");
  ordered_json out;
  out["p"] = t.characteristic();
  ordered_json polys = ordered_json::array();
  for (int k = 1; k <= top; ++k) {
    const Field coeff_field = t.level(k - 1);
    ordered_json poly = ordered_json::array();
    for (u64 c : t.modulus(k)) poly.push_back(element_to_json(coeff_field, c));
    polys.push_back(std::move(poly));
  }
  out["tower"] = std::move(polys);
  return out;
}

FieldTower tower_from_json(const ordered_json& j) {
  const u64 p = uint_at(j, "p");
  if (p < 2 || p > 0xffffffffULL) bad("invalid characteristic");
  FieldTower t = FieldTower::prime(static_cast<gf::u32>(p));
  const ordered_json& polys = field_at(j, "tower");
  if (!polys.is_array()) bad("'tower' must be an array of polynomials");
  for (const auto& poly : polys) {
    if (!poly.is_array() || poly.size() < 2) bad("modulus polynomial must have degree >= 1");
    const Field coeff_field = t.top();
    std::vector<u64> coeffs;
    coeffs.reserve(poly.size());
    for (const auto& c : poly) coeffs.push_back(element_from_json(coeff_field, c));
    t = t.extended(coeffs);
  }
  return t;
}

ordered_json matrix_to_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m.field(), m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Field& f, const ordered_json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) bad("matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().size());
  Mat m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) bad("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = element_from_json(f, j[r][c]);
  }
  return m;
}

ordered_json algebra_to_json(const LieAlgebra& L) {
  const Field& f = L.field();
  ordered_json out = tower_to_json(f.tower(), f.level());
  out["dim"] = L.dim();
  out["labels"] = L.labels();
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      ordered_json terms = ordered_json::array();
      for (int k = 0; k < L.dim(); ++k)
        if (L.c(i, j, k) != 0)
          terms.push_back(ordered_json::array({k, element_to_json(f, L.c(i, j, k))}));
      if (!terms.empty()) brackets.push_back(ordered_json::array({i, j, std::move(terms)}));
    }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const ordered_json& j) {
  const FieldTower t = tower_from_json(j);
  const Field f = t.top();
  const u64 dim64 = uint_at(j, "dim");
  if (dim64 > 4096) bad("dimension too large");
  const int dim = static_cast<int>(dim64);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const ordered_json& lj = j.at("labels");
    if (!lj.is_array() || static_cast<int>(lj.size()) != dim)
      bad("'labels' must be an array of dim strings");
    for (const auto& l : lj) {
      if (!l.is_string()) bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  LieAlgebra L(f, dim, std::move(labels));
  const ordered_json& brackets = field_at(j, "brackets");
  if (!brackets.is_array()) bad("'brackets' must be an array");
  Vec coeffs(dim);
  for (const auto& entry : brackets) {
    if (!entry.is_array() || entry.size() != 3) bad("bracket entry must be [i, j, terms]");
    if (!is_uint(entry[0]) || !is_uint(entry[1]))
      bad("bracket indices must be non-negative integers");
    const u64 i = entry[0].get<u64>(), jj = entry[1].get<u64>();
    if (i >= jj || jj >= static_cast<u64>(dim)) bad("bracket indices must satisfy i < j < dim");
    std::fill(coeffs.begin(), coeffs.end(), 0);
    if (!entry[2].is_array()) bad("bracket terms must be an array");
    for (const auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 2 || !is_uint(term[0]))
        bad("bracket term must be [k, coeff]");
      const u64 k = term[0].get<u64>();
      if (k >= static_cast<u64>(dim)) bad("bracket term index out of range");
      coeffs[k] = element_from_json(f, term[1]);
    }
    L.set_bracket(static_cast<int>(i), static_cast<int>(jj), coeffs);
  }
  return L;
}

ordered_json semifield_to_json(const semifield::PreSemifield& P,
                               const std::optional<Vec>& identity) {
  const Field& f = P.field;
  ordered_json out = tower_to_json(f.tower(), f.level());
  out["n"] = P.n;
  ordered_json mult = ordered_json::array();
  for (int i = 0; i < P.n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < P.n; ++j) {
      ordered_json prod = ordered_json::array();
      for (int k = 0; k < P.n; ++k) prod.push_back(element_to_json(f, P.t(i, j, k)));
      row.push_back(std::move(prod));
    }
    mult.push_back(std::move(row));
  }
  out["mult"] = std::move(mult);
  if (identity) {
    ordered_json id = ordered_json::array();
    for (u64 c : *identity) id.push_back(element_to_json(f, c));
    out["identity"] = std::move(id);
  } else {
    out["identity"] = nullptr;
  }
  return out;
}

std::pair<semifield::PreSemifield, std::optional<Vec>> semifield_from_json(
    const ordered_json& j) {
  const FieldTower t = tower_from_json(j);
  const Field f = t.top();
  const u64 n64 = uint_at(j, "n");
  if (n64 < 1 || n64 > 256) bad("invalid semifield dimension");
  const int n = static_cast<int>(n64);
  semifield::PreSemifield P(f, n);
  const ordered_json& mult = field_at(j, "mult");
  if (!mult.is_array() || static_cast<int>(mult.size()) != n) bad("'mult' must be an n x n array");
  for (int i = 0; i < n; ++i) {
    if (!mult[i].is_array() || static_cast<int>(mult[i].size()) != n) bad("ragged 'mult' rows");
    for (int jj = 0; jj < n; ++jj) {
      const ordered_json& prod = mult[i][jj];
      if (!prod.is_array() || static_cast<int>(prod.size()) != n)
        bad("'mult' products must be length-n coordinate arrays");
      for (int k = 0; k < n; ++k) P.t(i, jj, k) = element_from_json(f, prod[k]);
    }
  }
  std::optional<Vec> identity;
  if (j.contains("identity") && !j.at("identity").is_null()) {
    const ordered_json& id = j.at("identity");
    if (!id.is_array() || static_cast<int>(id.size()) != n)
      bad("'identity' must be null or a length-n coordinate array");
    Vec v;
    for (const auto& c : id) v.push_back(element_from_json(f, c));
    identity = std::move(v);
  }
  return {std::move(P), std::move(identity)};
}

ordered_json fingerprint_to_json(const liealg::Fingerprint& fp) {
  ordered_json out;
  out["dim"] = fp.dim;
  if (fp.nilpotency_class)
    out["nilpotency_class"] = *fp.nilpotency_class;
  else
    out["nilpotency_class"] = nullptr;
  out["gamma_dims"] = fp.gamma_dims;
  out["center_dim"] = fp.center_dim;
  out["derived_dim"] = fp.derived_dim;
  out["is_stem"] = fp.is_stem;
  ordered_json hist = ordered_json::array();
  for (const auto& [b, count] : fp.breadth_histogram)
    hist.push_back(ordered_json::array({b, count}));
  out["breadth_histogram"] = std::move(hist);
  out["type_set"] = fp.type_set;
  out["is_camina"] = fp.is_camina;
  out["all_noncentral_centralizers_abelian"] = fp.all_noncentral_centralizers_abelian;
  return out;
}

}  // namespace fflie::serialize
