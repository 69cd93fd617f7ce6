#include "nilrig/lie_algebra.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "nilrig/cohomology.hpp"

namespace nilrig {

LieAlgebra::LieAlgebra(std::size_t dim) : n_(dim), table_(dim * dim, zero_vector(dim)) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= n_ || j >= n_) throw std::out_of_range("basis index out of range");
  if (value.size() != n_) throw std::invalid_argument("bracket value has wrong length");
  if (i == j) {
    if (!is_zero(value)) throw std::invalid_argument("[X_i, X_i] must vanish");
    return;
  }
  table_[i * n_ + j] = value;
  Vector neg = value;
  for (auto& x : neg) x = -x;
  table_[j * n_ + i] = std::move(neg);
}

void LieAlgebra::add_to_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("basis index out of range");
  if (i == j) throw std::invalid_argument("[X_i, X_i] must vanish");
  table_[i * n_ + j][k] += c;
  table_[j * n_ + i][k] -= c;
}

std::map<std::pair<std::size_t, std::size_t>, Vector> LieAlgebra::constants() const {
  std::map<std::pair<std::size_t, std::size_t>, Vector> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!is_zero(bracket_of(i, j))) out.emplace(std::pair{i, j}, bracket_of(i, j));
  return out;
}

std::size_t CharSeq::total() const {
  std::size_t s = 0;
  for (auto p : parts) s += p;
  return s;
}

std::string CharSeq::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("vector length does not match algebra dimension");
  Vector out = zero_vector(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (sgn(y[b]) == 0 || a == b) continue;
      axpy(out, x[a] * y[b], g.bracket_of(a, b));
    }
  }
  return out;
}

namespace {

// [v, X_j] for a coordinate vector v.
Vector bracket_with_basis(const LieAlgebra& g, const Vector& v, std::size_t j) {
  Vector out = zero_vector(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    if (sgn(v[a]) != 0) axpy(out, v[a], g.bracket_of(a, j));
  return out;
}

RationalMatrix span_basis(const std::vector<Vector>& vectors, std::size_t n) {
  RowReducer reducer(n);
  for (const auto& v : vectors) reducer.insert(to_sparse(v));
  return reducer.rref().reduced;
}

}  // namespace

DefectList jacobi_defect(const LieAlgebra& g) {
  DefectList out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = bracket_with_basis(g, g.bracket_of(i, j), k);
        const Vector t = bracket_with_basis(g, g.bracket_of(j, k), i);
        const Vector u = bracket_with_basis(g, g.bracket_of(k, i), j);
        axpy(s, 1, t);
        axpy(s, 1, u);
        if (!is_zero(s)) out.tuples.push_back({i, j, k});
      }
  return out;
}

SubspaceChain lower_central_series(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SubspaceChain chain;
  RationalMatrix current = RationalMatrix::identity(n);
  chain.dims.push_back(n);
  chain.bases.push_back(current);
  while (current.rows() > 0) {
    std::vector<Vector> spanning;
    for (std::size_t r = 0; r < current.rows(); ++r) {
      const Vector b = current.dense_row(r);
      for (std::size_t j = 0; j < n; ++j) spanning.push_back(bracket_with_basis(g, b, j));
    }
    RationalMatrix next = span_basis(spanning, n);
    if (next.rows() == current.rows()) break;  // stabilized at a nonzero ideal
    chain.dims.push_back(next.rows());
    chain.bases.push_back(next);
    current = std::move(next);
  }
  return chain;
}

std::size_t nilindex(const LieAlgebra& g) {
  const SubspaceChain chain = lower_central_series(g);
  if (!chain.reaches_zero()) throw std::domain_error("series stabilized at nonzero ideal");
  return chain.dims.size() - 1;
}

bool is_p_step(const LieAlgebra& g, std::size_t p) {
  const SubspaceChain chain = lower_central_series(g);
  return chain.reaches_zero() && chain.dims.size() - 1 == p;
}

bool is_at_most_p_step(const LieAlgebra& g, std::size_t p) {
  const SubspaceChain chain = lower_central_series(g);
  return chain.reaches_zero() && chain.dims.size() - 1 <= p;
}

DefectList two_step_defect(const LieAlgebra& g) {
  DefectList out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || is_zero(g.bracket_of(i, j))) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(bracket_with_basis(g, g.bracket_of(i, j), k))) out.tuples.push_back({i, j, k});
    }
  return out;
}

DefectList three_step_defect(const LieAlgebra& g) {
  DefectList out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || is_zero(g.bracket_of(i, j))) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ijk = bracket_with_basis(g, g.bracket_of(i, j), k);
        if (is_zero(ijk)) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (!is_zero(bracket_with_basis(g, ijk, l))) out.tuples.push_back({i, j, k, l});
      }
    }
  return out;
}

RationalMatrix ad_matrix(const LieAlgebra& g, const Vector& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw std::invalid_argument("vector length does not match algebra dimension");
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = bracket(g, x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(col[k]) != 0) m.set(k, j, col[k]);
  }
  return m;
}

CharSeq jordan_partition(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan_partition needs a square matrix");
  const std::size_t n = m.rows();
  // ranks[k] = rank(m^k); blocks of size >= k number ranks[k-1] - ranks[k].
  std::vector<std::size_t> ranks{n};
  RationalMatrix power = RationalMatrix::identity(n);
  while (ranks.back() > 0) {
    if (ranks.size() > n) throw std::invalid_argument("matrix is not nilpotent");
    power = power * m;
    const std::size_t r = rank(power);
    if (r == ranks.back()) throw std::invalid_argument("matrix is not nilpotent");
    ranks.push_back(r);
  }
  CharSeq out;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t b = 0; b < at_least_k - at_least_k1; ++b) out.parts.push_back(k);
  }
  return out;
}

CharSeq characteristic_sequence(const LieAlgebra& g, std::uint64_t seed, std::size_t samples) {
  const std::size_t n = g.dim();
  if (n == 0) return {};
  const SubspaceChain chain = lower_central_series(g);
  if (!chain.reaches_zero()) throw std::domain_error("series stabilized at nonzero ideal");
  if (chain.dims.size() < 2 || chain.dims[1] == n)
    throw std::domain_error("g equals its derived algebra");

  RowReducer derived(n);
  for (std::size_t r = 0; r < chain.bases[1].rows(); ++r) derived.insert(chain.bases[1].row(r));

  CharSeq best;
  auto consider = [&](const Vector& x) {
    if (derived.in_span(to_sparse(x))) return;
    CharSeq c = jordan_partition(ad_matrix(g, x));
    if (best.parts.empty() || c > best) best = std::move(c);
  };
  for (std::size_t i = 0; i < n; ++i) consider(unit_vector(n, i));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n);
    for (auto& c : x) c = coeff(rng);
    consider(x);
  }
  return best;
}

std::size_t center_dim(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Row (i, k), column j holds the X_k-coordinate of [X_i, X_j].
  RationalMatrix stacked(0, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      SparseRow row;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(g.constant(i, j, k)) != 0) row.emplace_back(j, g.constant(i, j, k));
      if (!row.empty()) stacked.append_row(std::move(row));
    }
  return n - rank(stacked);
}

std::size_t derived_dim(const LieAlgebra& g) {
  std::vector<Vector> spanning;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) spanning.push_back(g.bracket_of(i, j));
  return span_basis(spanning, g.dim()).rows();
}

std::size_t derivation_algebra_dim(const LieAlgebra& g) {
  const RationalMatrix d1 = chevalley_delta1_matrix(g);
  return d1.cols() - rank(d1);
}

LieAlgebra basis_change(const LieAlgebra& g, const RationalMatrix& f) {
  const std::size_t n = g.dim();
  if (f.rows() != n || f.cols() != n) throw std::invalid_argument("basis change matrix has wrong size");
  const auto finv = inverse(f);
  if (!finv) throw std::invalid_argument("basis change matrix is singular");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.column(i));
  LieAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = finv->apply(bracket(g, images[i], images[j]));
      if (!is_zero(v)) out.set_bracket(i, j, v);
    }
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  const std::size_t n1 = g1.dim();
  LieAlgebra out(n1 + g2.dim());
  for (const auto& [ij, v] : g1.constants())
    for (std::size_t k = 0; k < n1; ++k)
      if (sgn(v[k]) != 0) out.add_to_bracket(ij.first, ij.second, k, v[k]);
  for (const auto& [ij, v] : g2.constants())
    for (std::size_t k = 0; k < g2.dim(); ++k)
      if (sgn(v[k]) != 0) out.add_to_bracket(n1 + ij.first, n1 + ij.second, n1 + k, v[k]);
  return out;
}

LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

}  // namespace nilrig
