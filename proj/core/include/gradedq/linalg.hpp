// Dense exact linear algebra over the rationals: reduced row echelon form,
// rank, kernel bases, linear solves, and an incremental row-span reducer.
// Deterministic pivoting (leftmost nonzero column, first usable row) keeps
// every downstream choice of representatives reproducible.

#ifndef GRADEDQ_LINALG_HPP
#define GRADEDQ_LINALG_HPP

#include <optional>
#include <vector>

#include "gradedq/rational.hpp"

namespace gradedq {

using QVector = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0, cols_ = 0;
  QVector a_;
};

struct Echelon {
  QMatrix mat;                    // reduced row echelon form
  std::vector<int> pivot_cols;    // pivot column per nonzero row
  std::vector<int> row_of_pivot;  // for each column: its pivot row, or -1
  int rank = 0;
};

Echelon reduced_row_echelon(QMatrix m);
int rank(const QMatrix& m);

// Basis of the null space {x : A x = 0}, one vector per free column, in
// column order (each basis vector has a 1 in "its" free column).
std::vector<QVector> kernel_basis(const QMatrix& a);

// Particular solution of A x = b with all free variables set to zero (so the
// support sits on pivot columns, i.e. on the earliest usable coordinates).
// Returns nullopt when the system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Incrementally maintained row span in reduced echelon form. Supports
// membership tests, residual reduction and dimension queries; used for ideal
// spans, boundary spaces and quotient representatives.
class RowSpan {
 public:
  explicit RowSpan(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v modulo the span (subtracting pivot rows); the result has zero
  // entries at all current pivot positions.
  QVector reduce(QVector v) const;
  bool contains(const QVector& v) const;

  // Inserts v; returns true when the span grew.
  bool insert(QVector v);

  const std::vector<QVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int dim_;
  std::vector<QVector> rows_;  // reduced, pivot entries 1, sorted by pivot
  std::vector<int> pivots_;
};

}  // namespace gradedq

#endif
