#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilrig/rational.hpp"

namespace nilrig {

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Exact sparse matrix over Q, stored row-wise. Stored entries are always
/// nonzero and in range; equality compares shape and entries.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Rows must all have length `cols`.
  static RationalMatrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
  static RationalMatrix from_dense(const std::vector<Vector>& rows);
  static RationalMatrix from_rows(std::size_t cols, std::vector<SparseRow> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  const SparseRow& row(std::size_t r) const { return rows_.at(r); }
  Vector dense_row(std::size_t r) const;
  Vector column(std::size_t c) const;

  /// Appends a row; drops explicit zeros and sorts by column.
  void append_row(SparseRow row);

  Vector apply(const Vector& v) const;
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Incremental Gaussian elimination. Rows are streamed in one at a time and
/// reduced against the current pivot table; only independent rows are kept,
/// so memory is bounded by rank × cols however many rows arrive.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  /// Reduces `row` and keeps it as a new pivot row if it is independent.
  /// Returns true when the rank grew.
  bool insert(SparseRow row);
  bool in_span(SparseRow row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  /// Back-substitutes the pivot table into reduced row echelon form.
  RrefResult rref() const;

 private:
  SparseRow reduce(SparseRow row) const;

  std::size_t cols_;
  std::vector<SparseRow> pivots_;
  std::vector<std::ptrdiff_t> pivot_of_col_;
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}, returned in canonical form (the rows of the RREF of
/// the null space), so the result depends only on the null space itself.
std::vector<Vector> kernel_basis(const RationalMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// row := row - factor * other, both sorted sparse rows.
SparseRow sparse_axpy(const SparseRow& row, const Rational& factor, const SparseRow& other);
SparseRow to_sparse(const Vector& v);

}  // namespace nilrig
