#include <gtest/gtest.h>

#include "hhres/exactlin/chain_complex.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/exactlin/rational_matrix.hpp"
#include "test_support.hpp"

using namespace hhres;
using hhres::testing::random_invertible;
using hhres::testing::random_matrix;
using hhres::testing::uniform;

TEST(Rational, ReducesAndNormalizesSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, -7).to_string(), "0");
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "5", "-5", "3/7", "-12/5"}) EXPECT_EQ(Rational::parse(s).to_string(), s);
  EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rational, OverflowPromotesToBigAndBack) {
  Rational big(std::int64_t{1} << 62);
  Rational x = big * big * big;
  EXPECT_EQ(x.numerator(), mpz_class(1) << 186);
  Rational back = x / (big * big);
  EXPECT_EQ(back, big);
  EXPECT_EQ((x - x).to_string(), "0");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(x, big);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  for (int k = 0; k < 500; ++k) {
    Rational a = hhres::testing::random_rational(1000), b = hhres::testing::random_rational(1000),
             c = hhres::testing::random_rational(1000);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RationalMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(RationalMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(RationalMatrix::from_dense({{1, 2}, {2, 4}})), 1u);
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(RationalMatrix(2, 2)).size(), 2u);
  const auto k = kernel_basis(RationalMatrix::from_dense({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_FALSE(k[0][0].is_zero());
}

TEST(RankNullity, RandomMatricesDenseAndSparsePaths) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, trial < 40 ? 12 : 90));
    const std::size_t c = static_cast<std::size_t>(uniform(1, trial < 40 ? 12 : 90));
    const RationalMatrix m = random_matrix(r, c, trial < 40 ? 0.5 : 0.05);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    // dense and sparse elimination agree
    EXPECT_EQ(detail::sparse_echelon(m, false).pivots.size(), rank(m));
    // independence: stacking the kernel vectors has full rank
    if (!ker.empty()) {
      EXPECT_EQ(rank(RationalMatrix::from_dense(ker)), ker.size());
    }
  }
}

TEST(Inverse, RandomInvertible) {
  for (int k = 0; k < 20; ++k) {
    const auto m = random_invertible(static_cast<std::size_t>(uniform(1, 6)));
    EXPECT_EQ(m * inverse(m), RationalMatrix::identity(m.rows()));
  }
  EXPECT_THROW(inverse(RationalMatrix::from_dense({{1, 2}, {2, 4}})), PreconditionError);
}

TEST(ChainComplex, SmallExamples) {
  EXPECT_EQ(ChainComplexData(0, {1}, {}).homology_dims().at(0), 1u);
  ChainComplexData id(0, {1, 1}, {{1, RationalMatrix::identity(1)}});
  EXPECT_EQ(id.homology_dims().at(0), 0u);
  EXPECT_EQ(id.homology_dims().at(1), 0u);
}

TEST(ChainComplex, RejectsNonComplexAndBadShapes) {
  EXPECT_THROW(ChainComplexData(0, {1, 1, 1}, {{1, RationalMatrix::identity(1)}, {2, RationalMatrix::identity(1)}}),
               ValidationError);
  EXPECT_THROW(ChainComplexData(0, {2, 1}, {{1, RationalMatrix::identity(1)}}), ValidationError);
}

// Koszul complex of x on Q[x], internal degree w: Q[x]_{w-1} e --(x)--> Q[x]_w.
TEST(ChainComplex, KoszulOfXGradedPieces) {
  for (int w = 0; w <= 3; ++w) {
    const std::size_t top = w >= 1 ? 1 : 0;
    RationalMatrix d(1, top);
    if (top) d.set(0, 0, Rational(1));
    ChainComplexData k(0, {1, top}, {{1, d}});
    const auto h = k.homology_dims();
    EXPECT_EQ(h.at(0), w == 0 ? 1u : 0u);
    EXPECT_EQ(h.at(1), 0u);
  }
}

TEST(ChainComplex, HomologyInvariantUnderBasisChange) {
  for (int trial = 0; trial < 20; ++trial) {
    // d2 = B A kills via a random factorization: C2 -> C1 -> C0 with d1 d2 = 0.
    const std::size_t n0 = uniform(1, 5), n1 = uniform(2, 7), n2 = uniform(1, 5);
    RationalMatrix d1 = random_matrix(n0, n1);
    const auto ker = kernel_basis(d1);
    RationalMatrix d2(n1, n2);
    for (std::size_t c = 0; c < n2 && !ker.empty(); ++c) {
      const auto& v = ker[static_cast<std::size_t>(uniform(0, static_cast<int>(ker.size()) - 1))];
      const Rational s = hhres::testing::random_rational(3);
      for (std::size_t r = 0; r < n1; ++r) d2.set(r, c, s * v[r]);
    }
    ChainComplexData c(0, {n0, n1, n2}, {{1, d1}, {2, d2}});
    const auto p0 = random_invertible(n0), p1 = random_invertible(n1), p2 = random_invertible(n2);
    ChainComplexData conj(0, {n0, n1, n2}, {{1, p0 * d1 * inverse(p1)}, {2, p1 * d2 * inverse(p2)}});
    EXPECT_EQ(c.homology_dims(), conj.homology_dims());
    long long chi_h = 0;
    for (const auto& [n, d] : c.homology_dims()) chi_h += (n % 2 ? -1 : 1) * static_cast<long long>(d);
    EXPECT_EQ(chi_h, c.euler_characteristic());
  }
}
