#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fflie/gf.hpp"

namespace fflie::linalg {

using gf::Field;
using gf::u64;

using Vec = std::vector<u64>;

/// Dense row-major matrix over one field level. Entries are canonical element
/// indices; all arithmetic is exact.
class Mat {
public:
  Mat(Field f, int rows, int cols);  // zero-filled
  static Mat identity(Field f, int n);
  static Mat from_rows(Field f, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  u64 at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  u64& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  std::span<const u64> row(int r) const {
    return {a_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }

  Mat transposed() const;
  Mat mul(const Mat& o) const;                 // ShapeError / FieldMismatch
  Vec mul_vec(std::span<const u64> v) const;   // ShapeError
  Mat stacked_below(const Mat& o) const;
  bool operator==(const Mat& o) const;

private:
  Field f_;
  int rows_, cols_;
  std::vector<u64> a_;
};

struct RrefResult {
  Mat rref;
  int rank;
  std::vector<int> pivots;  // pivot column per pivot row, ascending
};

/// Gauss-Jordan reduced row echelon form with deterministic pivoting:
/// leftmost nonzero column first, topmost candidate row within it.
RrefResult rref(const Mat& m);
int rank(const Mat& m);

/// A subspace of F^ambient in canonical form: the unique RREF basis, no zero
/// rows. Equality of subspaces is bit-equality of the canonical bases.
class Subspace {
public:
  static Subspace zero(Field f, int ambient);
  static Subspace full(Field f, int ambient);
  static Subspace span(Field f, int ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Mat& rows);

  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains_vec(std::span<const u64> v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  /// v reduced modulo this subspace: pivot coordinates eliminated.
  Vec reduce_vec(std::span<const u64> v) const;
  /// Coefficients of a member vector with respect to the RREF basis
  /// (= its values at the pivot columns); nullopt if not a member.
  std::optional<Vec> coordinates_of(std::span<const u64> v) const;
  /// Standard basis vector positions completing this subspace to the ambient
  /// space, in ascending order (the non-pivot columns).
  std::vector<int> complement_positions() const;

private:
  Subspace(Mat basis, std::vector<int> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Mat basis_;
  std::vector<int> pivots_;
};

/// Canonical basis of the null space {v : M v = 0}.
Subspace kernel(const Mat& m);

/// One solution of M x = b with all free variables set to zero;
/// nullopt when inconsistent. ShapeError on size mismatch.
std::optional<Vec> solve(const Mat& m, std::span<const u64> b);

/// Inverse of a square matrix; SingularMap if not invertible.
Mat inverse(const Mat& m);

/// Deterministic cross-platform seeded generator (splitmix64).
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform-ish value in [0, n); deterministic, bias negligible for small n.
  u64 below(u64 n) { return next() % n; }
};

/// Seeded random invertible n x n matrix (rejection sampling on rank).
Mat random_invertible(Field f, int n, u64 seed);

}  // namespace fflie::linalg
