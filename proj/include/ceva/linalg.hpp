#pragma once

// Exact dense linear algebra over a generic field context.
//
// Elimination is fraction-free in the Bareiss style: the forward pass uses the
// two-by-two determinant update with exact division by the previous pivot, and
// pivots are always chosen as the first row with a nonzero entry, so the whole
// computation is deterministic.  A final normalization pass produces the
// reduced row echelon form with unit pivots, which doubles as a canonical form
// for subspaces (two row spans are equal iff their RREFs are identical).

#include <stdexcept>
#include <utility>
#include <vector>

#include "ceva/rational.hpp"

namespace ceva {

template <class F>
struct Mat {
  using Elem = typename F::Elem;

  F field;
  size_t rows = 0, cols = 0;
  std::vector<Elem> a;  // row-major

  Mat(F f, size_t r, size_t c)
      : field(std::move(f)), rows(r), cols(c), a(r * c, field.zero()) {}

  Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

template <class F>
Mat<F> mat_from_rows(const F& field, const std::vector<std::vector<typename F::Elem>>& rows) {
  size_t nc = rows.empty() ? 0 : rows[0].size();
  Mat<F> m(field, rows.size(), nc);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("mat_from_rows: ragged rows");
    for (size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

template <class F>
Mat<F> mat_from_columns(const F& field, const std::vector<std::vector<typename F::Elem>>& cols) {
  size_t nr = cols.empty() ? 0 : cols[0].size();
  Mat<F> m(field, nr, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nr) throw std::invalid_argument("mat_from_columns: ragged columns");
    for (size_t i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

template <class F>
struct Rref {
  Mat<F> mat;
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
};

template <class F>
Rref<F> rref(Mat<F> m) {
  const F& k = m.field;
  std::vector<size_t> pivots;
  typename F::Elem prev_piv = k.one();
  size_t prow = 0;
  for (size_t c = 0; c < m.cols && prow < m.rows; ++c) {
    // first-nonzero pivot: deterministic for canonical forms
    size_t sel = prow;
    while (sel < m.rows && k.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows) continue;
    if (sel != prow)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(prow, j), m.at(sel, j));
    const typename F::Elem piv = m.at(prow, c);
    for (size_t i = prow + 1; i < m.rows; ++i) {
      const typename F::Elem head = m.at(i, c);
      for (size_t j = 0; j < m.cols; ++j) {
        // Bareiss update: (piv*a[i][j] - head*a[p][j]) / prev_piv, exact
        m.at(i, j) = k.div(k.sub(k.mul(piv, m.at(i, j)), k.mul(head, m.at(prow, j))), prev_piv);
      }
    }
    prev_piv = piv;
    pivots.push_back(c);
    ++prow;
  }
  // normalize pivot rows and eliminate upwards
  for (size_t r = pivots.size(); r-- > 0;) {
    const size_t c = pivots[r];
    const typename F::Elem inv = k.inv(m.at(r, c));
    for (size_t j = 0; j < m.cols; ++j) m.at(r, j) = k.mul(m.at(r, j), inv);
    for (size_t i = 0; i < r; ++i) {
      const typename F::Elem f = m.at(i, c);
      if (k.is_zero(f)) continue;
      for (size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
  }
  Rref<F> out{std::move(m), std::move(pivots), 0};
  out.rank = out.pivot_cols.size();
  return out;
}

template <class F>
size_t rank(const Mat<F>& m) {
  return rref(m).rank;
}

// Basis of {x : Mx = 0}, one vector per free column, in column order.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const Mat<F>& m) {
  const F& k = m.field;
  Rref<F> r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Elem> v(m.cols, k.zero());
    v[f] = k.one();
    for (size_t row = 0; row < r.rank; ++row) v[r.pivot_cols[row]] = k.neg(r.mat.at(row, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-at-a-time reduced echelon accumulator.  Rows are reduced against the
// pivots seen so far; the row space after any prefix equals that of the rows
// fed in.  Useful for condition systems where the kernel is wanted but rank
// often saturates early.
template <class F>
class IncrementalRref {
 public:
  IncrementalRref(F field, size_t cols) : field_(std::move(field)), cols_(cols) {}

  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }

  // Returns true when the row added a new pivot.
  bool add_row(std::vector<typename F::Elem> row) {
    const F& k = field_;
    if (row.size() != cols_) throw std::invalid_argument("IncrementalRref: row length");
    reduce(row);
    size_t p = 0;
    while (p < cols_ && k.is_zero(row[p])) ++p;
    if (p == cols_) return false;
    const typename F::Elem inv = k.inv(row[p]);
    for (size_t j = 0; j < cols_; ++j) row[j] = k.mul(row[j], inv);
    // eliminate the new pivot from existing rows to keep full reduction
    for (auto& r : rows_) {
      const typename F::Elem f = r[p];
      if (k.is_zero(f)) continue;
      for (size_t j = 0; j < cols_; ++j) r[j] = k.sub(r[j], k.mul(f, row[j]));
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    pivots_.insert(pivots_.begin() + at, p);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
  }

  void reduce(std::vector<typename F::Elem>& v) const {
    const F& k = field_;
    for (size_t i = 0; i < rows_.size(); ++i) {
      const typename F::Elem f = v[pivots_[i]];
      if (k.is_zero(f)) continue;
      for (size_t j = 0; j < cols_; ++j) v[j] = k.sub(v[j], k.mul(f, rows_[i][j]));
    }
  }

  // Basis of the kernel of the accumulated row space, one vector per free
  // column, in column order.
  std::vector<std::vector<typename F::Elem>> kernel() const {
    const F& k = field_;
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots_) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<typename F::Elem> v(cols_, k.zero());
      v[f] = k.one();
      for (size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = k.neg(rows_[i][f]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  F field_;
  size_t cols_;
  std::vector<std::vector<typename F::Elem>> rows_;
  std::vector<size_t> pivots_;  // sorted ascending, aligned with rows_
};

// Witness for a span query "is target in the column space of A?".
//   member:     target == sum_j combo[j] * column_j(A)
//   non-member: functional . column_j(A) == 0 for all j, functional . target != 0
template <class F>
struct SpanCertificate {
  using Elem = typename F::Elem;
  bool member = false;
  std::vector<Elem> combo;
  std::vector<Elem> functional;
};

// Span query that also reports rank(A), read off the same elimination.
template <class F>
std::pair<SpanCertificate<F>, size_t> in_span_with_rank(
    const Mat<F>& A, const std::vector<typename F::Elem>& target) {
  const F& k = A.field;
  if (target.size() != A.rows) throw std::invalid_argument("in_span: target length mismatch");
  // eliminate on [A | target | I] so each row carries the functional producing it
  Mat<F> aug(k, A.rows, A.cols + 1 + A.rows);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = target[i];
    aug.at(i, A.cols + 1 + i) = k.one();
  }
  Rref<F> r = rref(std::move(aug));

  size_t rank_a = 0;
  for (size_t row = 0; row < r.rank; ++row)
    if (r.pivot_cols[row] < A.cols) ++rank_a;

  SpanCertificate<F> cert;
  for (size_t row = 0; row < r.rank; ++row) {
    const size_t pc = r.pivot_cols[row];
    if (pc < A.cols) continue;
    if (pc == A.cols) {
      // pivot landed in the target column: the identity block of this row is
      // a functional annihilating every column of A but not the target;
      // its pairing with the target is the normalized pivot, exactly 1
      cert.member = false;
      cert.functional.assign(A.rows, k.zero());
      for (size_t i = 0; i < A.rows; ++i) cert.functional[i] = r.mat.at(row, A.cols + 1 + i);
      return {cert, rank_a};
    }
    break;  // pivots beyond the target column only touch the identity block
  }
  cert.member = true;
  cert.combo.assign(A.cols, k.zero());
  for (size_t row = 0; row < r.rank; ++row) {
    const size_t pc = r.pivot_cols[row];
    if (pc < A.cols) cert.combo[pc] = r.mat.at(row, A.cols);
  }
  return {cert, rank_a};
}

template <class F>
SpanCertificate<F> in_span(const Mat<F>& A, const std::vector<typename F::Elem>& target) {
  return in_span_with_rank(A, target).first;
}

// Independent replay of a span certificate against the original data.
template <class F>
bool verify_span_certificate(const Mat<F>& A, const std::vector<typename F::Elem>& target,
                             const SpanCertificate<F>& cert) {
  const F& k = A.field;
  if (target.size() != A.rows) return false;
  if (cert.member) {
    if (cert.combo.size() != A.cols) return false;
    for (size_t i = 0; i < A.rows; ++i) {
      typename F::Elem acc = k.zero();
      for (size_t j = 0; j < A.cols; ++j) acc = k.add(acc, k.mul(A.at(i, j), cert.combo[j]));
      if (!k.eq(acc, target[i])) return false;
    }
    return true;
  }
  if (cert.functional.size() != A.rows) return false;
  for (size_t j = 0; j < A.cols; ++j) {
    typename F::Elem acc = k.zero();
    for (size_t i = 0; i < A.rows; ++i) acc = k.add(acc, k.mul(cert.functional[i], A.at(i, j)));
    if (!k.is_zero(acc)) return false;
  }
  typename F::Elem pair = k.zero();
  for (size_t i = 0; i < A.rows; ++i)
    pair = k.add(pair, k.mul(cert.functional[i], target[i]));
  return !k.is_zero(pair);
}

}  // namespace ceva
