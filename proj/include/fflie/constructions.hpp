#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fflie/gf.hpp"
#include "fflie/liealg.hpp"
#include "fflie/semifield.hpp"

/// Builders for the algebra families the library studies: strictly upper
/// triangular matrix algebras by restriction of scalars, a 6m-dimensional
/// matrix family, its 5m-dimensional central quotient (built two independent
/// ways), and a presentation-defined algebra on generators (x, y, h, z).
namespace fflie::constructions {

using gf::Field;
using gf::FieldTower;
using gf::u32;
using gf::u64;
using liealg::LieAlgebra;
using liealg::Presentation;
using linalg::Mat;
using linalg::Vec;

/// Field data for parameters (q, m): the tower F_p <= F_q <= F_{q^m}.
struct FieldSetup {
  u32 p = 0;  // characteristic
  u32 s = 1;  // q = p^s
  u32 m = 1;  // top extension degree
  u64 q = 0;
  FieldTower tower;

  Field fp() const { return tower.level(0); }
  Field fq() const { return tower.level(s > 1 ? 1 : 0); }
  Field fqm() const { return tower.top(); }
  /// View of F_{q^m} over F_q (trivial when m == 1).
  gf::ExtView qm_view() const;

  /// Factors q = p^s and builds the tower with lexicographically smallest
  /// moduli. `top_poly` (constant-first, coefficients over the field below
  /// the top level) overrides the modulus of the last extension when given.
  static FieldSetup make(u64 q, u32 m,
                         const std::optional<std::vector<u64>>& top_poly = {});
};

/// Expansion coefficients kappa[i][j] of alpha^{i+j-2} over the F_q power
/// basis of F_{q^m} (i, j 1-based in the notation, 0-based accessors here).
/// Symmetric in (i, j); row 1 is the delta pattern.
struct KappaTensor {
  u32 m = 1;
  Field level;                  // F_q
  std::vector<Vec> kappa;       // m*m entries, each of length m
  std::vector<u64> alpha_poly;  // minimal polynomial of alpha over F_q, constant-first

  const Vec& at(u32 i, u32 j) const { return kappa[i * m + j]; }
};
KappaTensor kappa(const FieldSetup& fs);

/// Strictly upper triangular n x n matrices over F_{q^m}, viewed over F_q.
/// Basis: alpha^{t-1} E_{rs}, positions ordered by superdiagonal (s - r
/// ascending, then r ascending), powers t ascending within a position.
/// Only n in {3, 5} is supported.
LieAlgebra u_n_restricted(u32 n, const FieldSetup& fs);

/// The 6m-dimensional matrix family over F_q: six F_{q^m} slots
/// (a, b, c, d, e, f), bracket given by the closed 6-tuple commutator
/// formula and cross-checked against literal 5x5 matrix commutators.
/// Odd characteristic only.
LieAlgebra l_m_matrix_algebra(const FieldSetup& fs);

/// The 5m-dimensional family on slots (a, b, c, d, e) with
/// [(a,b,c,d,e),(x,y,z,u,v)] = (0, 0, ay-bx, ay-bx+2cx-2az, ay-bx+2bz-2cy),
/// expanded bilinearly over the F_q power basis. Odd characteristic only.
LieAlgebra g_m_direct(const FieldSetup& fs);

/// Same algebra obtained as l_m_matrix_algebra modulo its center; the
/// resulting tensor is checked to equal g_m_direct's exactly.
LieAlgebra g_m_quotient(const FieldSetup& fs);

/// Presentation-defined algebra on (x_1..x_m, y_1..y_m, h_1..h_m,
/// z_1..z_{2m}): [x_i,y_j] = sum_t kappa[i][j][t] h_t, [h_i,x_j] = sum_t
/// kappa[i][j][t] z_t, [h_i,y_j] = sum_t kappa[i][j][t] z_{m+t}, everything
/// else zero. For m == 1 the equivalent special presentation
/// <x1, x2, y, z1, z2 | [x1,x2]=y, [x1,y]=z1, [x2,y]=z2> is emitted instead.
std::pair<LieAlgebra, Presentation> v_presentation(const FieldSetup& fs);

/// Generator images in g_m_direct coordinates that satisfy the
/// v_presentation relations (content of the uniqueness argument); ordered
/// like the presentation's generators.
std::vector<Vec> v_standard_images(const FieldSetup& fs);

/// Abelian algebra of the given dimension (zero tensor).
LieAlgebra abelian(const Field& f, int dim);

/// The literal 5x5 strictly upper matrix carrying six slots
/// (a, b, c, d, e, f): entries (1,2)=a, (1,3)=c, (1,4)=d, (1,5)=f, (2,3)=b,
/// (2,4)=a+b-c, (2,5)=e, (3,4)=a, (3,5)=c, (4,5)=b. Exposed so tests can
/// compare matrix commutators against six_slot_bracket.
Mat six_slot_matrix(const Field& f, std::span<const u64> slots);

/// The closed commutator formula on six slots:
/// (0, 0, ay-bx, ay-bx+2cx-2az, ay-bx+2bz-2cy, av+dy-bu-ex).
std::array<u64, 6> six_slot_bracket(const Field& f, std::span<const u64> lhs,
                                    std::span<const u64> rhs);

struct CatalogEntry {
  std::string name;
  std::function<LieAlgebra()> build;
};

/// Named lazy builders over a small parameter grid for an odd prime q:
/// abelian, u3 (m = 1, 2), u5, the matrix family and its quotient family
/// (m = 1, 2), the presentation algebra (m = 1, 2), and the algebras of a
/// Dickson semifield over F_{q^2} and of the degree-2 field extension.
std::vector<CatalogEntry> catalog(u64 q);

}  // namespace fflie::constructions
