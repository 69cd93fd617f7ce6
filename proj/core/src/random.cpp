#include "nilrig/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nilrig {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw exact and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

long Rng::nonzero(long lo, long hi) {
  long v;
  do v = uniform(lo, hi);
  while (v == 0);
  return v;
}

LieAlgebra random_nilpotent(Rng& rng, std::size_t dim, std::size_t max_step) {
  if (dim < 3) return LieAlgebra(dim);
  for (;;) {
    LieAlgebra g(dim);
    const std::size_t count = rng.index(dim + 2);
    for (std::size_t c = 0; c < count; ++c) {
      const std::size_t i = rng.index(dim - 2);
      const std::size_t j = i + 1 + rng.index(dim - i - 2);
      const std::size_t k = j + 1 + rng.index(dim - j - 1);
      g.add_to_bracket(i, j, k, Rational(rng.nonzero(-2, 2)));
    }
    if (jacobi_defect(g).clean() && is_at_most_p_step(g, max_step)) return g;
  }
}

RationalMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t transvections) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  RationalMatrix f(n, n);
  for (std::size_t i = 0; i < n; ++i) f.set(perm[i], i, 1);
  if (n < 2) return f;
  for (std::size_t t = 0; t < transvections; ++t) {
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    RationalMatrix e = RationalMatrix::identity(n);
    e.set(i, j, Rational(rng.nonzero(-2, 2)));
    f = f * e;
  }
  return f;
}

Cochain random_cochain(Rng& rng, std::size_t dim, std::size_t arity, std::size_t terms) {
  Cochain c(arity, dim);
  if (dim < arity) return c;
  for (std::size_t t = 0; t < terms; ++t) {
    Tuple idx;
    while (idx.size() < arity) {
      const std::size_t i = rng.index(dim);
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
    }
    c.add(idx, rng.index(dim), Rational(rng.nonzero(-3, 3)));
  }
  return c;
}

MultiMap change_basis(const MultiMap& m, const RationalMatrix& f) {
  if (m.arity() != 2) throw std::invalid_argument("change_basis needs a bilinear map");
  const std::size_t n = m.dim();
  const auto finv = inverse(f);
  if (!finv) throw std::invalid_argument("basis change matrix is singular");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.column(i));
  MultiMap out(2, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.add({i, j}, 1, finv->apply(m.eval({images[i], images[j]})));
  return out;
}

MultiMap random_commutative_associative(Rng& rng, std::size_t max_dim) {
  if (max_dim < 1) throw std::invalid_argument("max_dim must be positive");
  // Blocks: K[x]/(x^a) with unit (basis 1, x, .., x^{a-1}) or the nilpotent
  // part x K[x]/(x^{a+1}) (basis x, .., x^a).
  struct Block {
    std::size_t size;
    bool unital;
  };
  std::vector<Block> blocks;
  std::size_t total = 0;
  const std::size_t target = 1 + rng.index(max_dim);
  while (total < target) {
    const std::size_t a = 1 + rng.index(target - total);
    blocks.push_back({a, rng.uniform(0, 1) == 1});
    total += a;
  }
  MultiMap m(2, total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    // Local basis element r stands for x^{r + shift}.
    const std::size_t shift = b.unital ? 0 : 1;
    const std::size_t top = b.size + shift;  // x^top = 0
    for (std::size_t r = 0; r < b.size; ++r)
      for (std::size_t s = 0; s < b.size; ++s) {
        const std::size_t e = r + s + 2 * shift;
        if (e < top) m.add({off + r, off + s}, off + e - shift, 1);
      }
    off += b.size;
  }
  return change_basis(m, random_unimodular(rng, total));
}

MultiMap symmetrized_matrix_product() {
  // E_ab E_cd = [b == c] E_ad; index of E_ab is 2a + b.
  MultiMap m(2, 4);
  const Rational half(1, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          if (b == c) m.add({2 * a + b, 2 * c + d}, 2 * a + d, half);
          if (d == a) m.add({2 * a + b, 2 * c + d}, 2 * c + b, half);
        }
  return m;
}

}  // namespace nilrig
