#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fflie/linalg.hpp"

namespace fflie::liealg {

using gf::Field;
using gf::u64;
using linalg::Mat;
using linalg::Subspace;
using linalg::Vec;

/// A finite-dimensional algebra over one field level, given by its structure
/// constant tensor c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k. The
/// constructor stores the tensor as-is; validate() checks antisymmetry
/// ([x,x] = 0 on basis vectors and pairs) and the Jacobi identity. Builders
/// are expected to produce validated tensors; arbitrary loaded tensors are
/// validated explicitly.
class LieAlgebra {
public:
  LieAlgebra(Field f, int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const Field& field() const { return f_; }
  const std::vector<std::string>& labels() const { return labels_; }

  u64 c(int i, int j, int k) const {
    return tensor_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  /// Sets [e_i, e_j] = coeffs and [e_j, e_i] = -coeffs (i != j).
  void set_bracket(int i, int j, std::span<const u64> coeffs);
  const std::vector<u64>& tensor() const { return tensor_; }

  Vec bracket(std::span<const u64> u, std::span<const u64> v) const;
  /// Matrix of ad_x: column j is [x, e_j].
  Mat ad(std::span<const u64> x) const;
  /// b(x) = rank ad_x = dim - dim C_L(x).
  int breadth(std::span<const u64> x) const;
  /// C_L(x) = ker ad_x, canonical.
  Subspace centralizer(std::span<const u64> x) const;
  /// rank of ad_x restricted to I, i.e. dim [x, I].
  int relative_breadth(std::span<const u64> x, const Subspace& I) const;
  /// true iff [u, v] = 0 for all basis pairs of S.
  bool is_abelian_subspace(const Subspace& S) const;

  bool operator==(const LieAlgebra& o) const;

private:
  Field f_;
  int dim_;
  std::vector<u64> tensor_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // "antisymmetry" or "jacobi" when !ok
  int i = -1, j = -1, k = -1;
};
ValidationReport validate(const LieAlgebra& L);
/// Throws ValidationFailure unless validate(L).ok.
void ensure_valid(const LieAlgebra& L);

/// [U, V] as a subspace (span of brackets of basis pairs).
Subspace subspace_bracket(const LieAlgebra& L, const Subspace& U, const Subspace& V);
Subspace derived_subalgebra(const LieAlgebra& L);
/// Z(L) = intersection of the kernels of all basis ad maps.
Subspace center(const LieAlgebra& L);
/// Smallest subalgebra containing the given vectors.
Subspace generated(const LieAlgebra& L, const std::vector<Vec>& gens);

struct SeriesReport {
  std::vector<int> gamma_dims;          // dim gamma_1, gamma_2, ... until 0 or stable
  std::vector<Subspace> gammas;         // same indexing
  std::optional<int> nilpotency_class;  // nullopt if the series stabilizes above 0
  Subspace derived;                     // gamma_2
  Subspace center_space;
  int derived_dim = 0;
  int center_dim = 0;
  bool is_stem = false;  // Z(L) contained in L'
};
SeriesReport series(const LieAlgebra& L);

/// Enumeration controls for the coset scans. The scans enumerate one
/// representative per Z(L)-coset (zeros at the center's pivot coordinates);
/// ad is constant on each coset, so histogram counts are representative
/// counts times |Z|. The guard compares the representative count against
/// `budget`. scalar_orbits additionally walks only one representative per
/// scalar orbit (first nonzero coordinate = 1) with multiplier q-1; it is an
/// optimization that must not change any reported number.
struct EnumOptions {
  u64 budget = 78125;  // 5^7
  int workers = 1;
  bool scalar_orbits = false;
};

struct BreadthReport {
  std::vector<std::pair<int, u64>> histogram;  // (breadth, element count), breadth ascending
  std::vector<int> type_set;                   // distinct breadths, ascending
};
BreadthReport breadth_report(const LieAlgebra& L, const EnumOptions& opts = {});

struct CaminaReport {
  bool is_camina = false;
  bool degenerate = false;  // L' = 0 (the condition holds trivially)
  std::optional<Vec> witness;  // some x outside L' with [x, L] != L'
};
CaminaReport camina(const LieAlgebra& L, const EnumOptions& opts = {});

struct AbelianCentralizersReport {
  bool all_abelian = false;
  std::optional<Vec> witness_x;  // noncentral x with non-abelian centralizer
  std::optional<std::pair<Vec, Vec>> witness_pair;  // u, v in C(x) with [u,v] != 0
};
/// Checks every noncentral Z-coset representative.
AbelianCentralizersReport noncentral_centralizers_abelian(const LieAlgebra& L,
                                                          const EnumOptions& opts = {});

struct Fingerprint {
  int dim = 0;
  std::optional<int> nilpotency_class;
  std::vector<int> gamma_dims;
  int center_dim = 0;
  int derived_dim = 0;
  bool is_stem = false;
  std::vector<std::pair<int, u64>> breadth_histogram;
  std::vector<int> type_set;
  bool is_camina = false;
  bool all_noncentral_centralizers_abelian = false;
  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const LieAlgebra& L, const EnumOptions& opts = {});

struct QuotientResult {
  LieAlgebra algebra;
  /// Projection matrix (quotient dim x dim): coordinates with respect to the
  /// greedy standard-vector complement of the ideal.
  Mat projection;
};
/// L / I for an ideal I (NotAnIdeal otherwise).
QuotientResult quotient(const LieAlgebra& L, const Subspace& I);

/// A finite presentation with all non-listed brackets zero: generators g_0..,
/// relations [g_i, g_j] = sum_k rhs_k g_k for i < j.
struct Presentation {
  Field field;
  std::vector<std::string> generators;
  struct Relation {
    int i, j;
    Vec rhs;
  };
  std::vector<Relation> relations;

  /// rhs for the pair (i, j), zero when unlisted.
  Vec rhs_for(int i, int j) const;
};

struct HomReport {
  bool relations_hold = false;
  bool images_generate = false;
  bool dims_match = false;
  bool is_isomorphism_evidence = false;
  std::string detail;
};
/// Evaluates every generator pair of the presentation on the images
/// (non-listed pairs must bracket to zero), checks that the images generate
/// the target, and that dim(target) equals the generator count. All three
/// together certify an isomorphism from the presented algebra.
HomReport check_hom(const Presentation& pres, const LieAlgebra& target,
                    const std::vector<Vec>& images);

/// Coset representative enumeration used by the scans (exposed for tests).
struct CosetEnum {
  std::vector<int> free_positions;
  u64 card = 0;   // field cardinality
  u64 count = 0;  // number of representatives
  void decode(u64 index, Vec& out) const;  // out must be zero-filled, size ambient
};
CosetEnum coset_representatives(const LieAlgebra& L, const Subspace& Z,
                                const EnumOptions& opts);

}  // namespace fflie::liealg
