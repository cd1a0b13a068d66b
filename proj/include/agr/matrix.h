#pragma once

#include <optional>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "agr/cancellation.h"
#include "agr/error.h"
#include "agr/skew.h"

namespace agr {

// Dense matrix over a field object F; entries are F::Elem and scalars act on
// the left throughout, so everything stays valid over skew fields.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), field_.zero()) {}

  static Matrix identity(const F& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<std::vector<Elem>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
        fail(ErrorCode::LatticeMismatch, "ragged matrix rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
  }

  const F& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int i, int j) { return data_[index(i, j)]; }
  const Elem& at(int i, int j) const { return data_[index(i, j)]; }

  bool is_zero() const {
    for (const Elem& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::LatticeMismatch, "inner dimensions differ");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Elem& aik = a.at(i, k);
        if (a.field_.is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Elem& bkj = b.at(k, j);
          if (a.field_.is_zero(bkj)) continue;
          r.at(i, j) = a.field_.add(r.at(i, j), a.field_.mul(aik, bkj));
        }
      }
    return r;
  }

  Matrix scaled_left(const Elem& s) const {
    Matrix r = *this;
    for (Elem& e : r.data_) e = field_.mul(s, e);
    return r;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (Elem& e : r.data_) e = a.field_.neg(e);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.data_.size(); ++k)
      if (!a.field_.eq(a.data_[k], b.data_[k])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix submatrix(int row0, int col0, int nrows, int ncols) const {
    Matrix r(field_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
    return r;
  }

  Matrix drop_column(int col) const {
    Matrix r(field_, rows_, cols_ - 1);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (j != col) r.at(i, j < col ? j : j - 1) = at(i, j);
    return r;
  }

  Matrix drop_row(int row) const {
    Matrix r(field_, rows_ - 1, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != row) r.at(i < row ? i : i - 1, j) = at(i, j);
    return r;
  }

  friend Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) fail(ErrorCode::LatticeMismatch, "row counts differ");
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  friend Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) fail(ErrorCode::LatticeMismatch, "column counts differ");
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
      for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
      for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
    }
    return r;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  // row_i <- s * row_i.
  void scale_row(int i, const Elem& s) {
    for (int c = 0; c < cols_; ++c) at(i, c) = field_.mul(s, at(i, c));
  }

  // row_i <- row_i + s * row_j.
  void add_left_multiple(int i, int j, const Elem& s) {
    for (int c = 0; c < cols_; ++c) at(i, c) = field_.add(at(i, c), field_.mul(s, at(j, c)));
  }

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::LatticeMismatch, "shapes differ");
  }

  F field_;
  int rows_, cols_;
  std::vector<Elem> data_;
};

// One elementary row operation; scalars multiply rows from the left.
template <class F>
struct RowOp {
  enum Kind { Swap, Scale, AddLeftMultiple } kind;
  int i, j;
  typename F::Elem s;
};

template <class F>
void apply_row_op(Matrix<F>& m, const RowOp<F>& op) {
  switch (op.kind) {
    case RowOp<F>::Swap: m.swap_rows(op.i, op.j); break;
    case RowOp<F>::Scale: m.scale_row(op.i, op.s); break;
    case RowOp<F>::AddLeftMultiple: m.add_left_multiple(op.i, op.j, op.s); break;
  }
}

template <class F>
struct RowReduction {
  Matrix<F> reduced;
  std::vector<RowOp<F>> ops;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form via left-acting elementary operations.  Pivots are
// chosen to minimise representation size, which keeps expression swell down
// over function and Ore fields.
template <class F>
RowReduction<F> row_reduce(const Matrix<F>& a) {
  const F& field = a.field();
  RowReduction<F> out{a, {}, {}, 0};
  Matrix<F>& m = out.reduced;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    check_cancelled();
    int pivot = -1;
    size_t best = 0;
    for (int i = r; i < m.rows(); ++i) {
      if (field.is_zero(m.at(i, col))) continue;
      size_t sz = field.size_hint(m.at(i, col));
      if (pivot < 0 || sz < best) {
        pivot = i;
        best = sz;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      m.swap_rows(pivot, r);
      out.ops.push_back({RowOp<F>::Swap, pivot, r, field.zero()});
    }
    if (!field.eq(m.at(r, col), field.one())) {
      typename F::Elem s = field.inv(m.at(r, col));
      m.scale_row(r, s);
      out.ops.push_back({RowOp<F>::Scale, r, r, s});
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m.at(i, col))) continue;
      typename F::Elem s = field.neg(m.at(i, col));
      m.add_left_multiple(i, r, s);
      out.ops.push_back({RowOp<F>::AddLeftMultiple, i, r, s});
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

template <class F>
int rank_of(const Matrix<F>& a) {
  return row_reduce(a).rank;
}

// Any X with A X = B, or none if the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve_columns(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::LatticeMismatch, "row counts differ");
  RowReduction<F> red = row_reduce(hstack(a, b));
  for (int c : red.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Matrix<F> x(a.field(), a.cols(), b.cols());
  for (size_t i = 0; i < red.pivot_cols.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(red.pivot_cols[i], j) = red.reduced.at(static_cast<int>(i), a.cols() + j);
  return x;
}

// B with A B = identity, or none when A has deficient row rank.
template <class F>
std::optional<Matrix<F>> solve_right_inverse(const Matrix<F>& a) {
  return solve_columns(a, Matrix<F>::identity(a.field(), a.rows()));
}

// Columns spanning the right kernel {x : A x = 0}.
template <class F>
Matrix<F> nullspace(const Matrix<F>& a) {
  RowReduction<F> red = row_reduce(a);
  const F& field = a.field();
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int c = 0; c < a.cols(); ++c) {
      if (p < red.pivot_cols.size() && red.pivot_cols[p] == c) ++p;
      else free_cols.push_back(c);
    }
  }
  Matrix<F> n(field, a.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    n.at(free_cols[k], static_cast<int>(k)) = field.one();
    for (size_t i = 0; i < red.pivot_cols.size(); ++i)
      n.at(red.pivot_cols[i], static_cast<int>(k)) =
          field.neg(red.reduced.at(static_cast<int>(i), free_cols[k]));
  }
  return n;
}

namespace detail {

// Inner step of the determinant recursion on a working copy.  `perm` tracks
// the row arrangement across consecutive swap steps; revisiting an
// arrangement means the recursion cycles, which only happens on singular
// matrices, so the guard verifies the rank and returns 0.
template <class F>
typename F::Elem det_rec(const F& field, Matrix<F> m, const Matrix<F>& original) {
  int n = m.rows();
  bool negative = false;
  for (;;) {
    check_cancelled();
    if (n == 1) {
      typename F::Elem v = m.at(0, 0);
      return negative ? field.neg(v) : v;
    }
    bool all_zero = true;
    for (int j = 0; j < n && all_zero; ++j)
      if (!field.is_zero(m.at(n - 1, j))) all_zero = false;
    if (all_zero) return field.zero();
    if (!field.is_zero(m.at(n - 1, n - 1))) {
      typename F::Elem piv_inv = field.inv(m.at(n - 1, n - 1));
      Matrix<F> next(field, n - 1, n - 1);
      for (int i = 0; i < n - 1; ++i) {
        const typename F::Elem& ain = m.at(i, n - 1);
        bool zi = field.is_zero(ain);
        for (int j = 0; j < n - 1; ++j) {
          next.at(i, j) = zi ? m.at(i, j)
                             : field.sub(m.at(i, j),
                                         field.mul(field.mul(ain, piv_inv), m.at(n - 1, j)));
        }
      }
      typename F::Elem inner = det_rec(field, std::move(next), original);
      typename F::Elem v = field.mul(inner, m.at(n - 1, n - 1));
      return negative ? field.neg(v) : v;
    }
    // Swap case: bring the rightmost nonzero of the last row up.
    std::set<std::vector<int>> seen;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    seen.insert(perm);
    for (;;) {
      int j = -1;
      for (int c = n - 2; c >= 0; --c)
        if (!field.is_zero(m.at(n - 1, c))) {
          j = c;
          break;
        }
      if (j < 0) return field.zero();  // last row became zero
      m.swap_rows(j, n - 1);
      std::swap(perm[static_cast<size_t>(j)], perm[static_cast<size_t>(n - 1)]);
      negative = !negative;
      if (!seen.insert(perm).second) {
        // Cycled through row arrangements: provably singular; cross-check.
        if (row_reduce(original).rank == original.rows()) {
          fail(ErrorCode::Internal, "determinant recursion cycled on a full-rank matrix");
        }
        return field.zero();
      }
      if (!field.is_zero(m.at(n - 1, n - 1))) break;
    }
  }
}

}  // namespace detail

// Canonical representative of the Dieudonné determinant: the four-case
// recursion (singleton, zero last row, eliminate against a_nn, row swap).
// Zero exactly on singular matrices.
template <class F>
typename F::Elem dieudonne_det_canonical(const Matrix<F>& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
  if (a.rows() == 0) return a.field().one();
  return detail::det_rec(a.field(), a, a);
}

namespace detail {

template <class F>
bool dets_agree(const F& field, const typename F::Elem& x, const typename F::Elem& y) {
  return field.eq(x, y);
}

// Twisted univariate fractions are compared through the degree interval: its
// endpoints are exactly the univariate polytope homomorphism and, in
// particular, the total degree map, both of which kill commutators.
inline bool dets_agree(const SkewField&, const SkewFraction& x, const SkewFraction& y) {
  return x.lo_degree() == y.lo_degree() && x.hi_degree() == y.hi_degree();
}

}  // namespace detail

// Compares det^c(AB) with det^c(A) det^c(B) under the implemented detecting
// homomorphisms: exact equality over commutative fields, the degree interval
// (the univariate polytope homomorphism together with the degree map) over
// twisted univariate fractions.
template <class F>
bool det_multiplicativity_probe(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    fail(ErrorCode::NotSquare, "probe needs square matrices of equal size");
  const F& field = a.field();
  typename F::Elem dab = dieudonne_det_canonical(a * b);
  typename F::Elem dd = field.mul(dieudonne_det_canonical(a), dieudonne_det_canonical(b));
  bool zab = field.is_zero(dab), zdd = field.is_zero(dd);
  if (zab || zdd) return zab == zdd;
  if (field.commutative()) return field.eq(dab, dd);
  return detail::dets_agree(field, dab, dd);
}

}  // namespace agr
