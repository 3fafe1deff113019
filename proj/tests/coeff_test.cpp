#include "sfb/coeff.hpp"
#include "sfb/parse.hpp"
#include "sfb/random.hpp"

#include <gtest/gtest.h>

using namespace sfb;

namespace {

Coeff g(int n) { return cp(n); }

Coeff A(int j, const std::string& key, int n) { return Coeff::aug_symbol(AugSymbol{j, key, 2 * n + 2 * j}); }

}  // namespace

TEST(CoeffArithmetic, AdditiveInverseCancels) { EXPECT_TRUE((g(1) + (-g(1))).is_zero()); }

TEST(CoeffArithmetic, DoublingCollectsTerms) { EXPECT_EQ(g(1) + g(1), Coeff(2) * g(1)); }

TEST(CoeffArithmetic, ConstantsCancelAcrossTerms) {
  EXPECT_EQ((g(2) + Coeff(3)) + (g(1) * g(1) - Coeff(3)), g(2) + g(1).pow(2));
}

TEST(CoeffArithmetic, Products) {
  EXPECT_EQ(g(1) * g(1), g(1).pow(2));
  EXPECT_TRUE((Coeff(0) * g(5)).is_zero());
  EXPECT_EQ((g(1) + 1) * (g(1) - 1), g(1).pow(2) - 1);
}

TEST(CoeffArithmetic, NoStoredZeros) {
  Coeff c = g(1) + g(2) - g(1);
  ASSERT_EQ(c.terms().size(), 1u);
  for (const auto& [m, v] : c.terms()) EXPECT_NE(v, 0);
}

TEST(CoeffArithmetic, ArbitraryPrecision) {
  Coeff big = Coeff(Integer(1) << 200);
  EXPECT_EQ((big * big).constant_value(), Integer(1) << 400);
}

TEST(CpClasses, DesignatedValues) {
  EXPECT_EQ(cp(0), Coeff(1));
  EXPECT_EQ(cp(1).str(), "g1");
  EXPECT_EQ(cp(3).str(), "g3");
  EXPECT_THROW(cp(-1), ValidationError);
}

TEST(CoeffText, CanonicalOrderAndSigns) {
  Coeff c = Coeff(3) * g(1).pow(2) * g(2) - A(2, "Z(2,r)", 2);
  EXPECT_EQ(c.str(), "3*g1^2*g2 - A(2;Z(2,r))");
  EXPECT_EQ(Coeff().str(), "0");
  EXPECT_EQ((Coeff(-1) - g(1)).str(), "-1 - g1");
}

TEST(CoeffText, GeneratorOrdering) {
  EXPECT_LT(CoeffGen::cp(1), CoeffGen::cp(2));
  EXPECT_LT(CoeffGen::cp(9), CoeffGen::aug(AugSymbol{1, "Z(1,r)", 4}));
  EXPECT_LT(CoeffGen::aug(AugSymbol{1, "Z(1,r)", 4}), CoeffGen::aug(AugSymbol{1, "Z(2,r)", 6}));
}

TEST(CoeffText, ParsePrintRoundTrip) {
  for (const char* s : {"0", "7", "-g1", "3*g1^2*g2 - A(2;Z(2,r))", "g1*A(1;Z(1,r)) + 2"}) {
    Coeff c = parse_coeff(s);
    EXPECT_EQ(parse_coeff(c.str()), c) << s;
  }
}

TEST(CoeffDegree, MonomialDegrees) {
  Coeff c = g(1).pow(2) * g(3) * A(1, "Z(2,s)", 2);
  ASSERT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c.terms().begin()->first.degree(), 4 + 6 + 6);
}

TEST(AugSymbols, DeterministicNaming) {
  AugSymbol a{2, "Z(3,s)", 10};
  AugSymbol b{2, "Z(3,s)", 10};
  EXPECT_EQ(a.name(), b.name());
  EXPECT_EQ(Coeff::aug_symbol(a), Coeff::aug_symbol(b));
}

TEST(AugSubstitution, ReplacesSymbols) {
  Coeff x = g(1) * A(1, "Z(1,r)", 1) + A(1, "Z(1,r)", 1).pow(2);
  AugAssignments zero{{"A(1;Z(1,r))", Coeff(0)}};
  EXPECT_TRUE(substitute_aug(x, zero).is_zero());
  AugAssignments val{{"A(1;Z(1,r))", g(2)}};
  EXPECT_EQ(substitute_aug(x, val), g(1) * g(2) + g(2).pow(2));
}

TEST(AugSubstitution, EmptyAssignmentIsIdentity) {
  Coeff x = g(1) * A(1, "Z(1,r)", 1) - 4;
  EXPECT_EQ(substitute_aug(x, {}), x);
}

TEST(AugSubstitution, WrongDegreeRejected) {
  Coeff x = A(1, "Z(1,r)", 1);
  AugAssignments bad{{"A(1;Z(1,r))", g(1)}};
  EXPECT_THROW(substitute_aug(x, bad), ValidationError);
}

TEST(CoeffProperties, RingAxiomsOnRandomInputs) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Coeff a = random_coeff(rng, 3, true);
    Coeff b = random_coeff(rng, 3, true);
    Coeff c = random_coeff(rng, 3, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(CoeffProperties, ProductDegreesAdd) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Coeff a = random_coeff(rng, 1, true);
    Coeff b = random_coeff(rng, 1, true);
    if (a.is_zero() || b.is_zero()) continue;
    const auto& ma = a.terms().begin()->first;
    const auto& mb = b.terms().begin()->first;
    EXPECT_EQ((ma * mb).degree(), ma.degree() + mb.degree());
  }
}
