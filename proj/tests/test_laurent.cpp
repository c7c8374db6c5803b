#include <gtest/gtest.h>

#include "hhres/laurent/laurent_poly.hpp"
#include "hhres/laurent/residue_oracle.hpp"
#include "test_support.hpp"

using namespace hhres;
using hhres::testing::random_laurent;

namespace {

const VarOrder T({"t"});
const VarOrder T12({"t1", "t2"});

LaurentPoly t(int k = 1) { return LaurentPoly::variable(T, 0, k); }
LaurentPoly one(const VarOrder& o = T) { return LaurentPoly::constant(o, Rational(1)); }

}  // namespace

TEST(VarOrder, Validation) {
  EXPECT_THROW(VarOrder({"x", "x"}), ValidationError);
  EXPECT_THROW(VarOrder(std::vector<std::string>{""}), ValidationError);
  EXPECT_EQ(VarOrder::parse("t1, t2").names(), (std::vector<std::string>{"t1", "t2"}));
  EXPECT_THROW(T12.index_of("t3"), ValidationError);
}

TEST(LaurentPoly, Multiplication) {
  EXPECT_EQ(t(-1) * t(), one());
  EXPECT_EQ((one() + t()) * (one() - t()), one() - t(2));
  const auto t1 = LaurentPoly::variable(T12, 0), t2 = LaurentPoly::variable(T12, 1);
  EXPECT_EQ((t1.pow(-1) + t2) * t1, one(T12) + t1 * t2);
  EXPECT_THROW(t() * t1, ValidationError);
}

TEST(LaurentPoly, Derivative) {
  EXPECT_EQ(t(3).derivative(0), Rational(3) * t(2));
  EXPECT_EQ(t(-1).derivative("t"), Rational(-1) * t(-2));
  const auto t1 = LaurentPoly::variable(T12, 0), t2 = LaurentPoly::variable(T12, 1);
  EXPECT_EQ((t1 * t1 * t2).derivative("t1"), Rational(2) * t1 * t2);
  EXPECT_THROW(t().derivative("s"), ValidationError);
}

TEST(LaurentPoly, Coefficients) {
  EXPECT_EQ(t(-1).coeff(Exponents{-1}), Rational(1));
  EXPECT_EQ((Rational(3) * t(2) + Rational(5) * one()).coeff(Exponents{0}), Rational(5));
  EXPECT_EQ(((one() + t()) * (one() + t())).coeff(Exponents{1}), Rational(2));
  EXPECT_EQ(t().coeff(Exponents{7}), Rational(0));
  EXPECT_THROW(t().coeff(Exponents{0, 0}), ValidationError);
}

TEST(LaurentPoly, PrintAndCanonicalForm) {
  EXPECT_EQ((Rational(3, 2) * t(2) - t(-1)).to_string(), "-t^-1 + 3/2*t^2");
  EXPECT_EQ(LaurentPoly(T).to_string(), "0");
  EXPECT_TRUE((t() - t()).is_zero());
}

TEST(ResidueOracle, Examples) {
  EXPECT_EQ(residue_oracle_nd(t(-1), {t()}), Rational(1));
  EXPECT_EQ(residue_oracle_nd(one(), {t(2)}), Rational(0));
  const auto t1 = LaurentPoly::variable(T12, 0), t2 = LaurentPoly::variable(T12, 1);
  EXPECT_EQ(residue_oracle_nd(t1.pow(-1) * t2.pow(-1), {t1, t2}), Rational(1));
  EXPECT_THROW(residue_oracle_nd(t(), {t(), t()}), ValidationError);
}

TEST(ResidueOracle, ExactDerivativeHasNoResidue) {
  for (int k = 0; k < 200; ++k) {
    const auto f = random_laurent(T, 6, -6, 6);
    EXPECT_EQ(residue_oracle_nd(f.derivative(0), {t()}), Rational(0));
    EXPECT_EQ(residue_oracle_nd(one(), {f}), Rational(0));
  }
}

TEST(ResidueOracle, IntegrationByParts) {
  for (int k = 0; k < 200; ++k) {
    const auto f = random_laurent(T, 5, -6, 6), g = random_laurent(T, 5, -6, 6);
    EXPECT_EQ(residue_oracle_nd(f, {g}), -residue_oracle_nd(g, {f}));
  }
}

TEST(ResidueOracle, AntisymmetricInTheFunctions) {
  for (int k = 0; k < 100; ++k) {
    const auto f = random_laurent(T12, 4, -3, 3), g1 = random_laurent(T12, 3, -3, 3),
               g2 = random_laurent(T12, 3, -3, 3);
    EXPECT_EQ(residue_oracle_nd(f, {g1, g2}), -residue_oracle_nd(f, {g2, g1}));
    EXPECT_EQ(residue_oracle_nd(f, {g1, g1}), Rational(0));
  }
}
