#pragma once

#include <cstdint>
#include <random>

#include "nilrig/cochain.hpp"
#include "nilrig/lie_algebra.hpp"
#include "nilrig/matrix.hpp"

namespace nilrig {

/// Seeded source for every randomized fixture; identical seeds give identical
/// streams on every platform (mt19937_64 plus integer-only draws).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Uniform in [lo, hi] without 0.
  long nonzero(long lo, long hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Random nilpotent Lie algebra with nilindex <= max_step: sparse brackets
/// [X_i, X_j] in span{X_k : k > j}, redrawn until Jacobi holds.
LieAlgebra random_nilpotent(Rng& rng, std::size_t dim, std::size_t max_step);

/// Random integer matrix with integer inverse: a permutation times a few
/// elementary transvections.
RationalMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t transvections = 3);

/// Skew cochain with `terms` random basis entries, coefficients in [-3, 3].
Cochain random_cochain(Rng& rng, std::size_t dim, std::size_t arity, std::size_t terms);

/// f^{-1} m(f x, f y) for a bilinear map m.
MultiMap change_basis(const MultiMap& m, const RationalMatrix& f);

/// Random commutative associative algebra of dimension <= max_dim: a product
/// of truncated polynomial algebras K[x]/(x^a) (with or without unit) moved by
/// a random unimodular basis change.
MultiMap random_commutative_associative(Rng& rng, std::size_t max_dim);

/// Symmetrized matrix product a.b = (ab + ba)/2 on 2x2 matrices, basis
/// E11, E12, E21, E22.
MultiMap symmetrized_matrix_product();

}  // namespace nilrig
