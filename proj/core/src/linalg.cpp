#include "gradedq/linalg.hpp"

#include <cassert>

namespace gradedq {

Echelon reduced_row_echelon(QMatrix m) {
  Echelon e;
  const int rows = m.rows(), cols = m.cols();
  e.row_of_pivot.assign(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = c; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    }
    const Rational inv = 1 / m.at(r, c);
    for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    e.pivot_cols.push_back(c);
    e.row_of_pivot[c] = r;
    ++r;
  }
  e.rank = r;
  e.mat = std::move(m);
  return e;
}

int rank(const QMatrix& m) { return reduced_row_echelon(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& a) {
  const Echelon e = reduced_row_echelon(a);
  const int cols = a.cols();
  std::vector<QVector> basis;
  for (int c = 0; c < cols; ++c) {
    if (e.row_of_pivot[c] >= 0) continue;
    QVector v(cols, Rational(0));
    v[c] = 1;
    for (int r = 0; r < e.rank; ++r) {
      const int pc = e.pivot_cols[r];
      v[pc] = -e.mat.at(r, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  const int rows = a.rows(), cols = a.cols();
  QMatrix aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  const Echelon e = reduced_row_echelon(std::move(aug));
  for (int r = 0; r < e.rank; ++r) {
    if (e.pivot_cols[r] == cols) return std::nullopt;  // row (0 ... 0 | 1)
  }
  QVector x(cols, Rational(0));
  for (int r = 0; r < e.rank; ++r) x[e.pivot_cols[r]] = e.mat.at(r, cols);
  return x;
}

QVector RowSpan::reduce(QVector v) const {
  assert(static_cast<int>(v.size()) == dim_);
  for (size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    const QVector& row = rows_[k];
    for (int j = p; j < dim_; ++j) {
      if (row[j] != 0) v[j] -= f * row[j];
    }
  }
  return v;
}

bool RowSpan::contains(const QVector& v) const {
  QVector r = reduce(v);
  for (const Rational& c : r) {
    if (c != 0) return false;
  }
  return true;
}

bool RowSpan::insert(QVector v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;
  const Rational inv = 1 / v[p];
  for (int j = p; j < dim_; ++j) v[j] *= inv;
  // Back-substitute into existing rows so the span stays fully reduced.
  for (size_t k = 0; k < rows_.size(); ++k) {
    Rational f = rows_[k][p];
    if (f == 0) continue;
    for (int j = p; j < dim_; ++j) rows_[k][j] -= f * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

}  // namespace gradedq
