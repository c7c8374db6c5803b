#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "hhres/laurent/residue_oracle.hpp"
#include "hhres/ressym/ce_check.hpp"
#include "hhres/ressym/symbol.hpp"
#include "hhres/ressym/tate.hpp"
#include "hhres/ressym/trace_json.hpp"
#include "test_support.hpp"

using namespace hhres;
using hhres::testing::random_laurent;
using hhres::testing::random_rational;
using hhres::testing::random_window;
using hhres::testing::uniform;

namespace {

const VarOrder T({"t"});
const VarOrder T2({"t1", "t2"});

LaurentPoly t(int k, const Rational& c = Rational(1)) { return LaurentPoly::monomial(T, {k}, c); }
LaurentPoly m2(int a, int b) { return LaurentPoly::monomial(T2, {a, b}); }

}  // namespace

TEST(TateResidue, Examples) {
  EXPECT_EQ(tate_residue_1d(t(-1), t(1)), Rational(1));
  EXPECT_EQ(tate_residue_1d(t(0), t(3) + t(-2, Rational(7))), Rational(0));
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b) EXPECT_EQ(tate_residue_1d(t(a), t(b)), Rational(a + b == 0 ? b : 0)) << a << " " << b;
  EXPECT_THROW(tate_residue_1d(m2(1, 0), m2(0, 1)), ValidationError);
}

TEST(TateResidue, MatchesOracleOnRandomPairs) {
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly f = random_laurent(T, 5, -6, 6), g = random_laurent(T, 5, -6, 6);
    EXPECT_EQ(tate_residue_1d(f, g), residue_oracle_nd(f, {g})) << f.to_string() << " | " << g.to_string();
  }
}

TEST(TateResidue, BilinearAntisymmetricAndAlternating) {
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly f = random_laurent(T, 4, -5, 5), g = random_laurent(T, 4, -5, 5), h = random_laurent(T, 4, -5, 5);
    const Rational s = random_rational(6);
    EXPECT_EQ(tate_residue_1d(f, f), Rational(0));
    EXPECT_EQ(tate_residue_1d(f, g) + tate_residue_1d(g, f), Rational(0));
    EXPECT_EQ(tate_residue_1d(f + s * h, g), tate_residue_1d(f, g) + s * tate_residue_1d(h, g));
    EXPECT_EQ(tate_residue_1d(f, g + s * h), tate_residue_1d(f, g) + s * tate_residue_1d(f, h));
  }
}

TEST(SymbolChain, OneVariableStep) {
  const CubicalContext ctx(T);
  const BandedOperator F = ctx.mult(t(-1)), G = ctx.mult(t(1));
  const OperatorChain c = OperatorChain::elementary({F, G});
  const OperatorChain out = symbol_chain_d(ctx, c, 1);
  ASSERT_EQ(out.degree(), 0);
  ASSERT_EQ(out.terms().size(), 1u);
  const BandedOperator expected = commutator(ctx.lambda_plus(F, 1), ctx.lambda_plus(G, 1));
  EXPECT_TRUE(operator_equal(out.terms()[0].coef * out.terms()[0].factors[0], expected));
  EXPECT_TRUE(operator_equal(expected, BandedOperator::matrix_unit(T, {0}, {0})));
  EXPECT_TRUE(symbol_chain_d(ctx, OperatorChain(1), 1).empty());
  EXPECT_THROW(symbol_chain_d(ctx, OperatorChain(0), 1), PreconditionError);
}

TEST(SymbolChain, TwoVariableFirstStepShape) {
  const CubicalContext ctx(T2);
  const OperatorChain seed = symbol_seed(ctx, m2(-1, -1), {m2(1, 0), m2(0, 1)});
  ASSERT_EQ(seed.terms().size(), 2u);
  SymbolStep step;
  const OperatorChain out = symbol_chain_d(ctx, seed, 1, &step);
  EXPECT_EQ(out.degree(), 1);
  EXPECT_EQ(step.boundary.terms().size(), 6u);
  EXPECT_EQ(out.terms().size(), 3u);
  for (const auto& term : out.terms()) {
    EXPECT_TRUE(ctx.ideal_membership(term.factors[0], 1, IdealSign::Zero));
    EXPECT_TRUE(ctx.ideal_membership(term.factors[1], 1, IdealSign::Zero));
  }
}

TEST(SymbolChain, NonCycleIsRejected) {
  const CubicalContext ctx(T2);
  const OperatorChain c = OperatorChain::elementary({ctx.mult(m2(-1, -1)), ctx.mult(m2(1, 0)), ctx.mult(m2(0, 1))});
  EXPECT_THROW(symbol_chain_d(ctx, c, 1), Error);
}

TEST(AbstractSymbol, OneVariableThreeWay) {
  const SymbolTrace tr = abstract_symbol({T, t(-1), {t(1)}});
  EXPECT_EQ(tr.value, Rational(1));
  EXPECT_EQ(*tr.tate, Rational(1));
  EXPECT_EQ(tr.oracle, Rational(1));
  EXPECT_TRUE(tr.agree);
  for (int k = 0; k < 60; ++k) {
    const LaurentPoly f = random_laurent(T, 4, -6, 6), g = random_laurent(T, 4, -6, 6);
    const SymbolTrace r = abstract_symbol({T, f, {g}});
    EXPECT_TRUE(r.agree) << f.to_string() << " | " << g.to_string();
    EXPECT_EQ(r.value, *r.tate);
  }
}

TEST(AbstractSymbol, TwoVariableExamples) {
  const SymbolTrace tr = abstract_symbol({T2, m2(-1, -1), {m2(1, 0), m2(0, 1)}});
  EXPECT_EQ(tr.oracle, Rational(1));
  EXPECT_EQ(tr.raw, Rational(kOrientationSign2));
  EXPECT_EQ(tr.value, Rational(1));
  EXPECT_TRUE(tr.agree);
  EXPECT_FALSE(tr.tate.has_value());
  EXPECT_EQ(tr.steps.size(), 2u);
  EXPECT_THROW(abstract_symbol({T2, m2(0, 0), {m2(1, 0)}}), ValidationError);
}

TEST(AbstractSymbol, TwoVariableSignIsConstant) {
  std::set<std::string> ratios;
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly f = m2(uniform(-3, 3), uniform(-3, 3));
    const LaurentPoly g1 = m2(uniform(-3, 3), uniform(-3, 3));
    LaurentPoly g2 = m2(uniform(-3, 3), uniform(-3, 3));
    if (k % 2 == 0) {
      // Balanced exponents: a + c + e = b + d + h = 0.
      const auto a = f.terms()[0].first, b = g1.terms()[0].first;
      g2 = m2(-a[0] - b[0], -a[1] - b[1]);
    }
    const SymbolTrace tr = abstract_symbol({T2, f, {g1, g2}});
    if (tr.oracle.is_zero()) {
      EXPECT_EQ(tr.raw, Rational(0));
    } else {
      ratios.insert((tr.raw / tr.oracle).to_string());
    }
  }
  EXPECT_EQ(ratios, std::set<std::string>{std::to_string(kOrientationSign2)});
}

TEST(AbstractSymbol, TwoVariableRandomLaurent) {
  for (int k = 0; k < 25; ++k) {
    const LaurentPoly f = random_laurent(T2, 3, -2, 2, 5), g1 = random_laurent(T2, 2, -2, 2, 5), g2 = random_laurent(T2, 2, -2, 2, 5);
    EXPECT_TRUE(abstract_symbol({T2, f, {g1, g2}}).agree) << f.to_string() << " | " << g1.to_string() << " | " << g2.to_string();
  }
}

TEST(AbstractSymbol, AntisymmetricAndAlternating) {
  for (int k = 0; k < 25; ++k) {
    const LaurentPoly f = random_laurent(T2, 2, -2, 2, 5), g1 = random_laurent(T2, 2, -2, 2, 5), g2 = random_laurent(T2, 2, -2, 2, 5);
    EXPECT_EQ(abstract_symbol({T2, f, {g1, g2}}).value, -abstract_symbol({T2, f, {g2, g1}}).value);
    EXPECT_EQ(abstract_symbol({T2, f, {g1, g1}}).value, Rational(0));
  }
}

TEST(AbstractSymbol, PolynomialFunctionGivesZero) {
  for (int k = 0; k < 20; ++k) {
    const LaurentPoly g1 = random_laurent(T2, 3, 0, 3, 5), g2 = random_laurent(T2, 3, 0, 3, 5);
    const SymbolTrace tr = abstract_symbol({T2, m2(0, 0), {g1, g2}});
    EXPECT_EQ(tr.value, Rational(0));
    EXPECT_TRUE(tr.agree);
  }
}

TEST(CeCheck, Examples) {
  const CubicalContext ctx(T2);
  std::vector<BandedOperator> ops;
  for (int k = 0; k < 3; ++k) ops.push_back(ctx.mult(random_laurent(T2, 3, -3, 3)));
  EXPECT_TRUE(ce_cycle_check(ops));
  EXPECT_EQ(ce_boundary_terms(ops).size(), 3u);
  EXPECT_TRUE(ce_cycle_check({BandedOperator::zero(T2), BandedOperator::zero(T2)}));
  ops.push_back(BandedOperator::matrix_unit(T2, {0, 0}, {1, 0}));
  EXPECT_THROW(ce_cycle_check(ops), PreconditionError);
}

TEST(TraceJson, ContainsEveryStepAndIsDeterministic) {
  const SymbolTrace tr = abstract_symbol({T2, m2(-1, -1), {m2(1, 0), m2(0, 1)}});
  const auto j = trace_to_json(tr);
  EXPECT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["value"], "1");
  EXPECT_EQ(j["raw_trace"], "-1");
  EXPECT_EQ(j["vars"][1], "t2");
  EXPECT_TRUE(j["tate"].is_null());
  EXPECT_EQ(j.dump(), trace_to_json(abstract_symbol({T2, m2(-1, -1), {m2(1, 0), m2(0, 1)}})).dump());
}
