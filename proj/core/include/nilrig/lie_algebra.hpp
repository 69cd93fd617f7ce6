#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <stdexcept>
#include <vector>

#include "nilrig/matrix.hpp"
#include "nilrig/rational.hpp"

namespace nilrig {

/// Default seed for every randomized routine.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Finite-dimensional algebra with a skew bracket given by structure
/// constants in the basis X_0..X_{n-1}: [X_i, X_j] = sum_k C_ij^k X_k.
///
/// Skew-symmetry is structural: setting [X_i, X_j] also sets [X_j, X_i] to the
/// negation, and [X_i, X_i] is always zero. The Jacobi identity is *not*
/// enforced, so deformed or perturbed brackets can be represented and then
/// checked with jacobi_defect().
///
/// Indices are 0-based in the API; files and printed output use the 1-based
/// X_1..X_n convention.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim);

  std::size_t dim() const { return n_; }

  /// [X_i, X_j] as a coordinate vector.
  const Vector& bracket_of(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("basis index out of range");
    return table_[i * n_ + j];
  }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_of(i, j).at(k);
  }

  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// [X_i, X_j] += c X_k (and the skew partner).
  void add_to_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& c);

  /// Nonzero brackets [X_i, X_j] with i < j.
  std::map<std::pair<std::size_t, std::size_t>, Vector> constants() const;

  bool operator==(const LieAlgebra& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vector> table_;
};

/// Index tuples that witness a failed identity.
struct DefectList {
  std::vector<std::vector<std::size_t>> tuples;
  bool clean() const { return tuples.empty(); }
};

/// Partition of dim g; parts are non-increasing. Compared lexicographically.
struct CharSeq {
  std::vector<std::size_t> parts;

  auto operator<=>(const CharSeq& other) const = default;
  std::size_t total() const;
  /// "(3,3,1)"
  std::string str() const;
};

/// g^0 = g ⊇ g^1 ⊇ ... with g^k = [g^{k-1}, g]. dims is strictly decreasing
/// and ends either at 0 or at the ideal where the series stabilized. Each
/// basis is the RREF of a spanning set, one basis vector per row, so equal
/// subspaces have equal basis matrices.
struct SubspaceChain {
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> bases;
  bool reaches_zero() const { return !dims.empty() && dims.back() == 0; }
};

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

/// Basis triples i<j<k where the Jacobiator is nonzero.
DefectList jacobi_defect(const LieAlgebra& g);

SubspaceChain lower_central_series(const LieAlgebra& g);

/// Smallest m with g^m = 0. Throws std::domain_error("series stabilized at
/// nonzero ideal") for non-nilpotent g.
std::size_t nilindex(const LieAlgebra& g);
bool is_p_step(const LieAlgebra& g, std::size_t p);
/// Nilpotent with nilindex <= p; membership in the variety pNilp_n.
bool is_at_most_p_step(const LieAlgebra& g, std::size_t p);

/// Basis tuples (i,j,k) with [[X_i,X_j],X_k] != 0.
DefectList two_step_defect(const LieAlgebra& g);
/// Basis tuples (i,j,k,l) with [[[X_i,X_j],X_k],X_l] != 0.
DefectList three_step_defect(const LieAlgebra& g);

/// Matrix of y -> [x, y]; column j is [x, X_j].
RationalMatrix ad_matrix(const LieAlgebra& g, const Vector& x);

/// Jordan block sizes of a nilpotent matrix, from the rank sequence of its
/// powers. Throws std::invalid_argument if the matrix is not nilpotent.
CharSeq jordan_partition(const RationalMatrix& m);

/// Lexicographic maximum of jordan_partition(ad x) over the basis vectors
/// outside g^1 and `samples` seeded random combinations (coefficients in
/// [-5, 5]) outside g^1.
///
/// The true invariant is attained on a Zariski-open set, so sampling finds it
/// with overwhelming probability but not with certainty; raise `samples` for
/// more confidence.
CharSeq characteristic_sequence(const LieAlgebra& g, std::uint64_t seed = kDefaultSeed,
                                std::size_t samples = 50);

std::size_t center_dim(const LieAlgebra& g);
std::size_t derived_dim(const LieAlgebra& g);
/// dim Der(g) = dim ker of the Chevalley coboundary on 1-cochains.
std::size_t derivation_algebra_dim(const LieAlgebra& g);

/// (f.mu)(x, y) = f^{-1} mu(f x, f y). Throws std::invalid_argument if f is
/// singular or of the wrong size.
LieAlgebra basis_change(const LieAlgebra& g, const RationalMatrix& f);

/// g1 ⊕ g2 with the basis of g1 first.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

LieAlgebra abelian(std::size_t dim);

}  // namespace nilrig
