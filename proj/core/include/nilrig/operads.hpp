#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "nilrig/series.hpp"

namespace nilrig {

/// dims[a-1] = dim P(a), a >= 1.
struct DimSequence {
  std::vector<mpz_class> dims;
};

/// sum_{a=1..order} dims[a-1] / a! x^a. Throws std::invalid_argument when
/// order exceeds the sequence length.
TruncatedSeries gen_function(const DimSequence& dims, std::size_t order);

/// Dimensions of the dual of 2Nilp (free operad on one commutative operation):
/// d_1 = d_2 = 1,
/// d_{2k+1} = sum_{i=1..k} C(2k+1, i) d_i d_{2k+1-i},
/// d_{2k}   = sum_{i=1..k-1} C(2k, i) d_i d_{2k-i} + C(2k, k) d_k^2 / 2.
DimSequence dual_dims_2nilp(std::size_t n);

/// The 2Nilp sequence (1, 1, 0, 0, ...) of length n.
DimSequence dims_2nilp(std::size_t n);

/// gP(-gDual(-x)) - x. Throws std::invalid_argument if either series has a
/// nonzero constant term.
TruncatedSeries koszul_check(const TruncatedSeries& gP, const TruncatedSeries& gDual);

struct OperadDim {
  std::string operad;
  std::size_t arity = 0;
  std::size_t dim = 0;
  std::string note;
};

/// Stated dimensions of small components (recorded data, not computed).
std::vector<OperadDim> static_dims_table();

}  // namespace nilrig
