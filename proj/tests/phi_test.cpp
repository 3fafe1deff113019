#include "sfb/parse.hpp"
#include "sfb/phi.hpp"
#include "sfb/random.hpp"

#include <gtest/gtest.h>

using namespace sfb;

namespace {

PhiElement er(int k = 1) { return PhiElement::e(Flavor::r, k); }
PhiElement es(int k = 1) { return PhiElement::e(Flavor::s, k); }
PhiElement X(int n, Flavor f) { return PhiElement::gen(n, f); }

/// Random element of F: no positive Euler powers.
PhiElement random_f(Rng& rng) {
  PhiElement p;
  for (int t = 0; t < 3; ++t) {
    PhiElement m = er(-detail::uniform(rng, 0, 2)) * es(-detail::uniform(rng, 0, 2));
    if (detail::uniform(rng, 0, 1)) m *= X(detail::uniform(rng, 1, 3), Flavor::s);
    p += PhiElement(random_coeff(rng, 2)) * m;
  }
  return p;
}

}  // namespace

TEST(PhiArithmetic, LaurentUnit) { EXPECT_EQ(er(-1) * er(), PhiElement(1)); }

TEST(PhiArithmetic, SquareOfP) {
  PhiElement p = er(-1) + es(-1);
  EXPECT_EQ(p * p, er(-2) + PhiElement(2) * er(-1) * es(-1) + es(-2));
}

TEST(PhiArithmetic, MonomialStructure) {
  PhiElement m = X(1, Flavor::r) * er();
  ASSERT_EQ(m.terms().size(), 1u);
  const auto& mono = m.terms().begin()->first;
  EXPECT_EQ(mono.a, 1);
  EXPECT_EQ(mono.b, 0);
  ASSERT_EQ(mono.xs.size(), 1u);
  EXPECT_EQ(mono.xs[0].first, (GenIndex{1, Flavor::r}));
}

TEST(PhiText, GrammarRoundTrip) {
  PhiElement p = parse_phi("e_r^-2 * X(1,r) + 3*g1*e_s^-1");
  EXPECT_EQ(p, er(-2) * X(1, Flavor::r) + PhiElement(Coeff(3) * cp(1)) * es(-1));
  EXPECT_EQ(parse_phi(p.str()), p);
}

TEST(ZGenerators, ImagesOfProjectiveSpaces) {
  EXPECT_EQ(z_gen(1, Flavor::r), er(-1) + es(-1));
  EXPECT_EQ(z_gen(1, Flavor::s), er(-1) + es(-1));
  EXPECT_EQ(z_gen(2, Flavor::r), X(1, Flavor::r) + er(-2));
  EXPECT_EQ(z_gen(2, Flavor::s), X(1, Flavor::s) + es(-2));
  EXPECT_THROW(z_gen(0, Flavor::r), ValidationError);
}

TEST(ZGenerators, OppositeConvention) {
  auto opp = ZConvention::opposite_flavor;
  EXPECT_EQ(z_gen(1, Flavor::r, opp), er(-1) + es(-1));
  EXPECT_EQ(z_gen(2, Flavor::r, opp), X(1, Flavor::r) + es(-2));
  EXPECT_EQ(z_gen(3, Flavor::s, opp), X(2, Flavor::s) + er(-3));
}

TEST(ZGenerators, Degrees) {
  for (int n = 1; n <= 6; ++n)
    for (Flavor f : {Flavor::r, Flavor::s}) EXPECT_EQ(z_gen(n, f).degrees(), std::vector<int>{2 * n});
  EXPECT_EQ(er().degrees(), std::vector<int>{-2});
  EXPECT_EQ(es().degrees(), std::vector<int>{-2});
}

TEST(ZPresentation, RewritesXGenerators) {
  ZPresentation z = to_z_basis(X(1, Flavor::r));
  EXPECT_EQ(z, ZPresentation::gen(2, Flavor::r) - ZPresentation::e(Flavor::r, -2));
  EXPECT_EQ(to_z_basis(er(3)), ZPresentation::e(Flavor::r, 3));
}

TEST(ZPresentation, RoundTripOnRandomElements) {
  Rng rng(21);
  for (auto conv : {ZConvention::same_flavor, ZConvention::opposite_flavor}) {
    for (int trial = 0; trial < 200; ++trial) {
      PhiElement p = random_phi(rng);
      EXPECT_EQ(from_z_basis(to_z_basis(p, conv), conv), p);
    }
  }
}

TEST(ZPresentation, IsRingHomomorphism) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    PhiElement p = random_phi(rng, 3);
    PhiElement q = random_phi(rng, 3);
    EXPECT_EQ(to_z_basis(p * q), to_z_basis(p) * to_z_basis(q));
    EXPECT_EQ(to_z_basis(p + q), to_z_basis(p) + to_z_basis(q));
  }
}

TEST(FMembership, Examples) {
  EXPECT_TRUE((er(-1) + es(-1)).is_in_F());
  EXPECT_FALSE((er() * es(-1)).is_in_F());
  EXPECT_TRUE(PhiElement(1).is_in_F());
}

TEST(FMembership, ClosedUnderRingOperations) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    PhiElement p = random_f(rng);
    PhiElement q = random_f(rng);
    ASSERT_TRUE(p.is_in_F());
    EXPECT_TRUE((p + q).is_in_F());
    EXPECT_TRUE((p * q).is_in_F());
  }
}

TEST(ComplementProjection, Examples) {
  EXPECT_EQ((er() * es(-1) + es(-1)).project_C(), er() * es(-1));
  EXPECT_TRUE((er(-1) + es(-1)).project_C().is_zero());
  EXPECT_EQ((er() + es()).project_C(), er() + es());
}

TEST(ComplementProjection, VanishesExactlyOnF) {
  Rng rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    PhiElement p = random_phi(rng);
    EXPECT_EQ(p.project_C().is_zero(), p.is_in_F());
  }
}

TEST(HomogeneousParts, Examples) {
  auto h = homogeneous_component(er(-1) + er(-2), 2);
  EXPECT_EQ(h.part, er(-1));
  EXPECT_FALSE(h.odd_degree);
  EXPECT_EQ(homogeneous_component(z_gen(2, Flavor::r), 4).part, z_gen(2, Flavor::r));
  auto odd = homogeneous_component(z_gen(2, Flavor::r), 3);
  EXPECT_TRUE(odd.part.is_zero());
  EXPECT_TRUE(odd.odd_degree);
}

TEST(HomogeneousParts, CoefficientDegreeCounts) {
  PhiElement p = PhiElement(cp(1)) * er(-1) + er(-2);
  EXPECT_EQ(homogeneous_component(p, 4).part, p);
}

TEST(PhiJsonShapes, TermText) {
  EXPECT_EQ((er(-1) + es(-1)).str(), "e_r^-1 + e_s^-1");
  EXPECT_EQ(PhiElement().str(), "0");
  EXPECT_EQ((PhiElement(-2) * er(1) * es(-1)).str(), "-2*e_r*e_s^-1");
}
