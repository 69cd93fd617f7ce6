#include <algorithm>
#include <random>

#include "doctest.h"
#include "nilrig/matrix.hpp"
#include "nilrig/random.hpp"
#include "nilrig/series.hpp"
#include "oracle.hpp"

using namespace nilrig;

namespace {

RationalMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int density) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.uniform(0, 99) < density) m.set(i, j, Rational(rng.uniform(-4, 4)) / Rational(rng.uniform(1, 3)));
  return m;
}

oracle::Mat dense(const RationalMatrix& m) {
  oracle::Mat out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.dense_row(r));
  return out;
}

TruncatedSeries random_series(Rng& rng, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 1; k <= order; ++k) s[k] = Rational(rng.uniform(-3, 3)) / Rational(rng.uniform(1, 4));
  return s;
}

}  // namespace

TEST_SUITE("exactlin") {
  TEST_CASE("rationals parse and normalize") {
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK(to_string(parse_rational("6/3")) == "2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  }

  TEST_CASE("rref examples") {
    const RrefResult id = rref(RationalMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1, 2});

    const RrefResult z = rref(RationalMatrix(2, 5));
    CHECK(z.rank == 0);
    CHECK(z.pivot_cols.empty());

    const RrefResult r = rref(RationalMatrix::from_dense({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());

    const auto k = kernel_basis(RationalMatrix::from_dense({{1, 2}, {2, 4}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -2 * k[0][1]);
    CHECK(k[0][1] != 0);

    const auto z = kernel_basis(RationalMatrix(2, 3));
    CHECK(z.size() == 3);
    CHECK(rank(RationalMatrix::from_dense(z)) == 3);
  }

  TEST_CASE("rank agrees with a dense oracle and rank + nullity = cols") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = 1 + rng.index(9), c = 1 + rng.index(9);
      const RationalMatrix m = random_matrix(rng, r, c, static_cast<int>(rng.uniform(10, 80)));
      const std::size_t rk = rank(m);
      CHECK(rk == oracle::rank(dense(m)));
      const auto ker = kernel_basis(m);
      CHECK(rk + ker.size() == c);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    }
  }

  TEST_CASE("tall matrices: streamed kernel matches the RREF null space") {
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
      const std::size_t c = 2 + rng.index(6);
      // Tall and low rank: rows drawn from a few generators.
      RationalMatrix gens = random_matrix(rng, 1 + rng.index(c), c, 60);
      RationalMatrix m(0, c);
      for (std::size_t r = 0; r < 8 * c; ++r) {
        Vector row = zero_vector(c);
        for (std::size_t g = 0; g < gens.rows(); ++g) axpy(row, Rational(rng.uniform(-2, 2)), gens.dense_row(g));
        m.append_row(to_sparse(row));
      }
      const auto ker = kernel_basis(m);
      const oracle::Mat ref = oracle::nullspace(dense(m.rows() ? m : RationalMatrix(1, c)), c);
      REQUIRE(ker.size() == ref.size());
      // Same subspace: stacking does not raise the rank.
      oracle::Mat both = ref;
      for (const auto& v : ker) both.push_back(v);
      CHECK(oracle::rank(both) == ref.size());
      // Canonical form: the kernel is already in RREF.
      CHECK(rref(RationalMatrix::from_dense(ker, c)).reduced == RationalMatrix::from_dense(ker, c));
    }
  }

  TEST_CASE("rref is idempotent and independent of row order") {
    Rng rng(13);
    std::mt19937 shuffle(13);
    for (int t = 0; t < 30; ++t) {
      const RationalMatrix m = random_matrix(rng, 2 + rng.index(6), 2 + rng.index(6), 50);
      const RrefResult a = rref(m);
      const RrefResult b = rref(a.reduced);
      CHECK(a.pivot_cols == b.pivot_cols);
      CHECK(a.reduced == b.reduced);

      std::vector<SparseRow> rows;
      for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
      std::shuffle(rows.begin(), rows.end(), shuffle);
      const RrefResult c = rref(RationalMatrix::from_rows(m.cols(), rows));
      CHECK(c.reduced == a.reduced);
    }
  }

  TEST_CASE("row reducer streams rows") {
    RowReducer r(3);
    CHECK(r.insert(to_sparse({1, 2, 3})));
    CHECK_FALSE(r.insert(to_sparse({2, 4, 6})));
    CHECK(r.in_span(to_sparse({-1, -2, -3})));
    CHECK_FALSE(r.in_span(to_sparse({0, 0, 1})));
    CHECK(r.insert(to_sparse({0, 0, 1})));
    CHECK(r.rank() == 2);
    CHECK_FALSE(r.insert(SparseRow{}));
  }

  TEST_CASE("inverse and products") {
    Rng rng(14);
    for (int t = 0; t < 10; ++t) {
      const RationalMatrix f = random_unimodular(rng, 5);
      const auto inv = inverse(f);
      REQUIRE(inv.has_value());
      CHECK(f * *inv == RationalMatrix::identity(5));
    }
    CHECK_FALSE(inverse(RationalMatrix::from_dense({{1, 2}, {2, 4}})).has_value());
  }

  TEST_CASE("series examples") {
    const auto x = TruncatedSeries::x(6);
    CHECK(series_compose(x, x) == x);

    TruncatedSeries a(6);
    a[1] = 1;
    a[2] = Rational(1, 2);
    const TruncatedSeries p = a * x;
    CHECK(p[2] == 1);
    CHECK(p[3] == Rational(1, 2));
    for (std::size_t k : {0, 1, 4, 5, 6}) CHECK(p[k] == 0);

    TruncatedSeries shifted(3);
    shifted[0] = 1;
    CHECK_THROWS_AS(series_compose(a, shifted), std::invalid_argument);
    CHECK(series_negate_argument(a)[1] == -1);
    CHECK(series_negate_argument(a)[2] == Rational(1, 2));
  }

  TEST_CASE("compose matches term-by-term expansion") {
    // x + x^2/2 composed with the order-5 dual series.
    TruncatedSeries a(5), b(5);
    a[1] = 1;
    a[2] = Rational(1, 2);
    const int d[] = {1, 1, 3, 15, 105};
    mpz_class fact = 1;
    for (std::size_t k = 1; k <= 5; ++k) {
      fact *= static_cast<unsigned long>(k);
      b[k] = Rational(d[k - 1]) / Rational(fact);
    }
    CHECK(series_compose(a, b).coeffs() == oracle::compose_by_powers(a.coeffs(), b.coeffs()));

    Rng rng(15);
    for (int t = 0; t < 20; ++t) {
      const auto u = random_series(rng, 7), v = random_series(rng, 7);
      CHECK(series_compose(u, v).coeffs() == oracle::compose_by_powers(u.coeffs(), v.coeffs()));
    }
  }

  TEST_CASE("compose is associative") {
    Rng rng(16);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
      CHECK(series_compose(a, series_compose(b, c)) == series_compose(series_compose(a, b), c));
    }
  }

  TEST_CASE("binary operations truncate at the smaller order") {
    const auto a = TruncatedSeries::x(3), b = TruncatedSeries::x(5);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(b.truncated(2) == TruncatedSeries::x(2));
  }
}
