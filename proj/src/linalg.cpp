#include "fflie/linalg.hpp"

#include <algorithm>

namespace fflie::linalg {

namespace {

void check_same_field(const Field& a, const Field& b) {
  if (!a.same(b)) fail("FieldMismatch", "operands live in different fields");
}

}  // namespace

Mat::Mat(Field f, int rows, int cols) : f_(std::move(f)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail("ShapeError", "negative matrix dimensions");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat Mat::identity(Field f, int n) {
  Mat m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<Vec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(std::move(f), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) fail("ShapeError", "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::transposed() const {
  Mat t(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::mul(const Mat& o) const {
  check_same_field(f_, o.f_);
  if (cols_ != o.rows_) fail("ShapeError", "matrix product shape mismatch");
  Mat r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const u64 v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) = f_.add(r.at(i, j), f_.mul(v, o.at(k, j)));
    }
  return r;
}

Vec Mat::mul_vec(std::span<const u64> v) const {
  if (static_cast<int>(v.size()) != cols_) fail("ShapeError", "matrix/vector shape mismatch");
  Vec r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    u64 s = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s = f_.add(s, f_.mul(at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

Mat Mat::stacked_below(const Mat& o) const {
  check_same_field(f_, o.f_);
  if (cols_ != o.cols_) fail("ShapeError", "stack width mismatch");
  Mat r(f_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return f_.same(o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RrefResult rref(const Mat& m) {
  Mat a = m;
  const Field& F = a.field();
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int sel = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    const u64 piv_inv = F.inv(a.at(r, col));
    for (int j = col; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), piv_inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const u64 c = a.at(i, col);
      if (c == 0) continue;
      for (int j = col; j < a.cols(); ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(r, j)));
    }
    pivots.push_back(col);
    ++r;
  }
  return RrefResult{std::move(a), r, std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank; }

Subspace Subspace::zero(Field f, int ambient) {
  return Subspace(Mat(std::move(f), 0, ambient), {});
}

Subspace Subspace::full(Field f, int ambient) {
  std::vector<int> piv(ambient);
  for (int i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Mat::identity(std::move(f), ambient), std::move(piv));
}

Subspace Subspace::row_space(const Mat& rows) {
  RrefResult r = rref(rows);
  Mat basis(rows.field(), r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.rref.at(i, j);
  return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::span(Field f, int ambient, const std::vector<Vec>& vectors) {
  Mat m(std::move(f), static_cast<int>(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient) fail("ShapeError", "bad vector length");
    for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
  }
  return row_space(m);
}

Vec Subspace::reduce_vec(std::span<const u64> v) const {
  if (static_cast<int>(v.size()) != ambient()) fail("ShapeError", "bad vector length");
  const Field& F = field();
  Vec r(v.begin(), v.end());
  for (int i = 0; i < dim(); ++i) {
    const u64 c = r[pivots_[i]];
    if (c == 0) continue;
    for (int j = 0; j < ambient(); ++j)
      if (basis_.at(i, j) != 0) r[j] = F.sub(r[j], F.mul(c, basis_.at(i, j)));
  }
  return r;
}

bool Subspace::contains_vec(std::span<const u64> v) const {
  Vec r = reduce_vec(v);
  return std::all_of(r.begin(), r.end(), [](u64 x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient() != other.ambient()) fail("ShapeError", "ambient mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains_vec(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates_of(std::span<const u64> v) const {
  if (!contains_vec(v)) return std::nullopt;
  Vec c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient() != other.ambient()) fail("ShapeError", "ambient mismatch");
  check_same_field(field(), other.field());
  return row_space(basis_.stacked_below(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient() != other.ambient()) fail("ShapeError", "ambient mismatch");
  check_same_field(field(), other.field());
  if (dim() == 0 || other.dim() == 0) return zero(field(), ambient());
  // pairs (a, b) with a^T * basis = b^T * other.basis: kernel of [basis^T | -other^T]
  const Field& F = field();
  Mat m(F, ambient(), dim() + other.dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient(); ++j) m.at(j, i) = basis_.at(i, j);
  for (int i = 0; i < other.dim(); ++i)
    for (int j = 0; j < ambient(); ++j) m.at(j, dim() + i) = F.neg(other.basis_.at(i, j));
  Subspace pairs = kernel(m);
  std::vector<Vec> vecs;
  vecs.reserve(pairs.dim());
  for (int i = 0; i < pairs.dim(); ++i) {
    Vec v(ambient(), 0);
    for (int k = 0; k < dim(); ++k) {
      const u64 c = pairs.basis().at(i, k);
      if (c == 0) continue;
      for (int j = 0; j < ambient(); ++j)
        if (basis_.at(k, j) != 0) v[j] = F.add(v[j], F.mul(c, basis_.at(k, j)));
    }
    vecs.push_back(std::move(v));
  }
  return span(F, ambient(), vecs);
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient() == other.ambient() && basis_ == other.basis_;
}

std::vector<int> Subspace::complement_positions() const {
  std::vector<int> out;
  size_t pi = 0;
  for (int j = 0; j < ambient(); ++j) {
    if (pi < pivots_.size() && pivots_[pi] == j) {
      ++pi;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Subspace kernel(const Mat& m) {
  RrefResult r = rref(m);
  const Field& F = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = F.neg(r.rref.at(i, f));
    basis.push_back(std::move(v));
  }
  return Subspace::span(F, m.cols(), basis);
}

std::optional<Vec> solve(const Mat& m, std::span<const u64> b) {
  if (static_cast<int>(b.size()) != m.rows()) fail("ShapeError", "rhs length mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  for (int i = 0; i < r.rank; ++i)
    if (r.pivots[i] == m.cols()) return std::nullopt;  // pivot in rhs column
  Vec x(m.cols(), 0);
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.rref.at(i, m.cols());
  return x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail("ShapeError", "inverse of non-square matrix");
  const int n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) fail("SingularMap", "matrix is not invertible");
  Mat inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.rref.at(i, n + j);
  return inv;
}

Mat random_invertible(Field f, int n, u64 seed) {
  if (n < 1) fail("BadParameter", "need n >= 1");
  SplitMix64 rng(seed);
  const u64 q = f.card();
  for (;;) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rng.below(q);
    if (rank(m) == n) return m;
  }
}

}  // namespace fflie::linalg
