#include "nilrig/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilrig {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged dense matrix");
    m.rows_.push_back(to_sparse(r));
  }
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<Vector>& rows) {
  return from_dense(rows, rows.empty() ? 0 : rows.front().size());
}

RationalMatrix RationalMatrix::from_rows(std::size_t cols, std::vector<SparseRow> rows) {
  RationalMatrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  const bool present = it != row.end() && it->first == c;
  if (sgn(v) == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    row.insert(it, {c, v});
  }
}

Vector RationalMatrix::dense_row(std::size_t r) const {
  Vector v = zero_vector(cols_);
  for (const auto& [c, x] : rows_.at(r)) v[c] = x;
  return v;
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v = zero_vector(rows());
  for (std::size_t r = 0; r < rows(); ++r) v[r] = get(r, c);
  return v;
}

void RationalMatrix::append_row(SparseRow row) {
  std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].first >= cols_) throw std::out_of_range("column index out of range");
    if (i > 0 && row[i].first == row[i - 1].first)
      throw std::invalid_argument("duplicate column in sparse row");
  }
  rows_.push_back(std::move(row));
}

Vector RationalMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Vector out = zero_vector(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, x] : rows_[r])
      if (sgn(v[c]) != 0) out[r] += x * v[c];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, x] : rows_[r]) t.rows_[c].emplace_back(r, x);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row(r).empty()) continue;
    Vector acc = zero_vector(b.cols());
    for (const auto& [k, x] : a.row(r))
      for (const auto& [c, y] : b.row(k)) acc[c] += x * y;
    out.rows_[r] = to_sparse(acc);
  }
  return out;
}

SparseRow to_sparse(const Vector& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) row.emplace_back(i, v[i]);
  return row;
}

SparseRow sparse_axpy(const SparseRow& row, const Rational& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational x = a->second - factor * b->second;
      if (sgn(x) != 0) out.emplace_back(a->first, std::move(x));
      ++a;
      ++b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(std::size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

SparseRow RowReducer::reduce(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    const auto p = pivot_of_col_[row[pos].first];
    if (p < 0) {
      ++pos;
      continue;
    }
    // Pivot rows are monic at their leading column and zero before it, so
    // this cancels row[pos] and touches only later columns.
    const Rational factor = row[pos].second;
    row = sparse_axpy(row, factor, pivots_[static_cast<std::size_t>(p)]);
  }
  return row;
}

bool RowReducer::insert(SparseRow row) {
  for (const auto& e : row)
    if (e.first >= cols_) throw std::out_of_range("column index out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  if (lead != 1)
    for (auto& e : row) e.second /= lead;
  pivot_of_col_[row.front().first] = static_cast<std::ptrdiff_t>(pivots_.size());
  pivots_.push_back(std::move(row));
  return true;
}

bool RowReducer::in_span(SparseRow row) const { return reduce(std::move(row)).empty(); }

RrefResult RowReducer::rref() const {
  std::vector<SparseRow> rows = pivots_;
  std::sort(rows.begin(), rows.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t pc = rows[i].front().first;
    for (std::size_t j = 0; j < i; ++j) {
      auto it = std::lower_bound(rows[j].begin(), rows[j].end(), pc,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it != rows[j].end() && it->first == pc) {
        const Rational factor = it->second;
        rows[j] = sparse_axpy(rows[j], factor, rows[i]);
      }
    }
  }
  RrefResult out;
  out.rank = rows.size();
  for (const auto& r : rows) out.pivot_cols.push_back(r.front().first);
  out.reduced = RationalMatrix::from_rows(cols_, std::move(rows));
  return out;
}

// ---------------------------------------------------------------------------

RrefResult rref(const RationalMatrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.insert(m.row(r));
  RrefResult res = reducer.rref();
  // Keep the original row count; zero rows go to the bottom.
  RationalMatrix padded(0, m.cols());
  for (std::size_t r = 0; r < res.reduced.rows(); ++r) padded.append_row(res.reduced.row(r));
  while (padded.rows() < m.rows()) padded.append_row({});
  res.reduced = std::move(padded);
  return res;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() <= m.cols()) {
    RowReducer reducer(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) reducer.insert(m.row(r));
    return reducer.rank();
  }
  const RationalMatrix t = m.transpose();
  RowReducer reducer(t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) reducer.insert(t.row(r));
  return reducer.rank();
}

namespace {

std::vector<Vector> canonical_rows(std::vector<Vector> basis, std::size_t cols) {
  RowReducer reducer(cols);
  for (const auto& v : basis) reducer.insert(to_sparse(v));
  const RrefResult r = reducer.rref();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.reduced.rows(); ++i) out.push_back(r.reduced.dense_row(i));
  return out;
}

// Wide or square: read the null space off the RREF free columns.
std::vector<Vector> kernel_from_rref(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Rational x = r.reduced.get(i, f);
      if (sgn(x) != 0) v[r.pivot_cols[i]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Tall: stream the columns of m, each tagged with a unit vector, into a pivot
// table of width rows + cols. Combinations whose m-part vanishes have their
// leading entry in the tag block and are exactly the null space.
std::vector<Vector> kernel_from_columns(const RationalMatrix& m) {
  const std::size_t R = m.rows();
  const RationalMatrix t = m.transpose();
  RowReducer reducer(R + m.cols());
  for (std::size_t c = 0; c < t.rows(); ++c) {
    SparseRow row = t.row(c);
    row.emplace_back(R + c, Rational(1));
    reducer.insert(std::move(row));
  }
  const RrefResult r = reducer.rref();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivot_cols[i] < R) continue;
    Vector v = zero_vector(m.cols());
    for (const auto& [c, x] : r.reduced.row(i)) v[c - R] = x;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  auto basis = m.rows() > 2 * m.cols() ? kernel_from_columns(m) : kernel_from_rref(m);
  return canonical_rows(std::move(basis), m.cols());
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(0, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseRow row = m.row(r);
    row.emplace_back(n + r, Rational(1));
    aug.append_row(std::move(row));
  }
  const RrefResult res = rref(aug);
  if (res.rank < n || (n > 0 && res.pivot_cols[n - 1] >= n)) return std::nullopt;
  RationalMatrix inv(0, n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseRow row;
    for (const auto& [c, x] : res.reduced.row(r))
      if (c >= n) row.emplace_back(c - n, x);
    inv.append_row(std::move(row));
  }
  return inv;
}

}  // namespace nilrig
