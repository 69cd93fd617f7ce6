#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nilrig/lie_algebra.hpp"
#include "nilrig/matrix.hpp"
#include "nilrig/rational.hpp"

namespace nilrig {

/// Ordered tuple of 0-based basis indices.
using Tuple = std::vector<std::size_t>;

/// k-linear map V^k -> V with no symmetry assumed: one value per basis
/// k-tuple. Missing tuples are zero; stored values are never zero vectors.
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim) {}

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  const std::map<Tuple, Vector>& entries() const { return entries_; }

  Vector value(const Tuple& t) const;
  /// value(t) += c * v
  void add(const Tuple& t, const Rational& c, const Vector& v);
  void add(const Tuple& t, std::size_t k, const Rational& c);

  bool is_zero() const { return entries_.empty(); }
  /// Smallest basis tuple with a nonzero value.
  std::optional<Tuple> first_nonzero() const;

  /// Evaluation on arbitrary vectors, by multilinearity.
  Vector eval(const std::vector<Vector>& args) const;

  MultiMap& operator+=(const MultiMap& other);
  MultiMap& operator-=(const MultiMap& other);
  MultiMap scaled(const Rational& c) const;
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  bool operator==(const MultiMap& other) const = default;

  /// Precomposition with a permutation of the arguments:
  /// result(x_1..x_k) = this(x_{sigma(1)}, .., x_{sigma(k)}), sigma 1-based
  /// in one-line notation.
  MultiMap permuted(const std::vector<std::size_t>& sigma) const;

  /// Flattened sparse coordinates: tuple and output index in base dim.
  SparseRow to_sparse_row(std::size_t offset = 0) const;

 private:
  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::map<Tuple, Vector> entries_;
};

/// Skew-symmetric k-linear map V^k -> V, stored on strictly increasing tuples.
/// Evaluation on a tuple with a repeated index is zero.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim) {}

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  const std::map<Tuple, Vector>& entries() const { return entries_; }

  /// Value on any tuple, with the sign of the sorting permutation.
  Vector value(const Tuple& t) const;
  /// Sets the value on t (any order; the stored value is sign-adjusted).
  /// Throws std::invalid_argument for a repeated index with nonzero value.
  void set(const Tuple& t, const Vector& v);
  void add(const Tuple& t, std::size_t k, const Rational& c);

  bool is_zero() const { return entries_.empty(); }
  Vector eval(const std::vector<Vector>& args) const { return to_multimap().eval(args); }
  MultiMap to_multimap() const;

  bool operator==(const Cochain& other) const = default;

 private:
  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::map<Tuple, Vector> entries_;
};

/// Coordinates of skew 2-cochains: the basis cochain with phi(X_i, X_j) = X_k
/// (i < j) sits at pair_index(i, j) * n + k.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
std::size_t cochain2_size(std::size_t n);
Vector to_coordinates(const Cochain& phi);
Cochain cochain_from_coordinates(std::size_t n, const Vector& coords);

/// The bracket as a 2-linear map.
MultiMap bracket_map(const LieAlgebra& g);
MultiMap identity_map(std::size_t n);
/// Lie algebra from a skew 2-cochain (no Jacobi check).
LieAlgebra algebra_from_cochain(const Cochain& phi);
Cochain cochain_from_algebra(const LieAlgebra& g);

/// (f o_1 h)(x_1, .., x_{a+b-1}) = f(h(x_1, .., x_b), x_{b+1}, ..).
MultiMap comp1(const MultiMap& f, const MultiMap& h);

}  // namespace nilrig
