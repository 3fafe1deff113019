#include "sfb/io.hpp"
#include "sfb/manifold.hpp"
#include "sfb/parse.hpp"

#include <gtest/gtest.h>

using namespace sfb;

namespace {

PhiElement er(int k = 1) { return PhiElement::e(Flavor::r, k); }
PhiElement es(int k = 1) { return PhiElement::e(Flavor::s, k); }

FixedPointSet points(std::initializer_list<FixedPoint> ps) { return FixedPointSet{ps}; }

class ManifoldTest : public ::testing::Test {
 protected:
  Engine eng;
  PhiElement lam(const char* s) const { return lambda_manifold(eng, parse_manifold(s)).lambda; }
  Tri cob(const char* a, const char* b) const { return check_cobordant(eng, parse_manifold(a), parse_manifold(b)); }
};

}  // namespace

TEST_F(ManifoldTest, LocalizationExamples) {
  EXPECT_EQ(lam("P(1,r)"), er(-1) + es(-1));
  EXPECT_TRUE(lam("gamma(pt)").is_zero());
  EXPECT_EQ(lam("P(1,r) x P(1,r)"), er(-2) + PhiElement(2) * er(-1) * es(-1) + es(-2));
  EXPECT_EQ(lambda_manifold(eng, parse_manifold("P(3,s)")).aug, cp(3));
}

TEST_F(ManifoldTest, GammaOfManifoldMatchesLocalizationFormula) {
  for (const char* s : {"P(2,r)", "P(1,s) x P(2,s)", "2*P(3,r) - pt", "gamma*(P(2,r))"}) {
    ManifoldExpr m = parse_manifold(s);
    auto [l, a] = lambda_manifold(eng, m);
    EXPECT_EQ(lambda_manifold(eng, ManifoldExpr::gamma(m)).lambda, er(-1) * (l - PhiElement(a))) << s;
    EXPECT_EQ(lambda_manifold(eng, ManifoldExpr::gamma_star(m)).lambda, es(-1) * (l - PhiElement(a))) << s;
  }
}

TEST(FixedData, Examples) {
  EXPECT_EQ(fixed_data(parse_manifold("P(1,r)")).points, (std::vector<FixedPoint>{{1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(fixed_data(parse_manifold("P(1,r) x P(1,r)")).points,
            (std::vector<FixedPoint>{{1, 0, 2}, {2, 1, 1}, {1, 2, 0}}));
  EXPECT_EQ(fixed_data(parse_manifold("pt")).points, (std::vector<FixedPoint>{{1, 0, 0}}));
  EXPECT_TRUE(fixed_data(parse_manifold("P(1,r) - P(1,s)")).points.empty());
}

TEST(FixedData, NonIsolatedRejected) {
  for (const char* s : {"P(2,r)", "gamma(pt)", "P(1,r) x gamma*(P(1,s))"}) {
    try {
      fixed_data(parse_manifold(s));
      FAIL() << s;
    } catch (const ValidationError& e) {
      EXPECT_NE(std::string(e.what()).find("non-isolated fixed set"), std::string::npos);
    }
  }
}

TEST(FixedData, LocalizationAgrees) {
  for (const char* s : {"P(1,r)", "P(1,s)^3", "2*P(1,r) x P(1,s) - pt"}) {
    ManifoldExpr m = parse_manifold(s);
    Engine eng;
    EXPECT_EQ(fixed_data(m).lambda(), eng.lambda(m.term())) << s;
  }
}

TEST(Realize, Examples) {
  Realization a = realize(points({{1, 1, 0}, {1, 0, 1}}));
  EXPECT_TRUE(a.realizable);
  EXPECT_EQ(a.decomposition, (std::vector<DecompositionTerm>{{1, 1}}));

  Realization b = realize(points({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}}));
  EXPECT_TRUE(b.realizable);
  EXPECT_EQ(b.decomposition, (std::vector<DecompositionTerm>{{1, 2}}));

  Realization c = realize(points({{1, 1, 1}}));
  EXPECT_FALSE(c.realizable);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, (Witness{2, 1, 0, 1}));

  Realization d = realize(points({}));
  EXPECT_TRUE(d.realizable);
  EXPECT_TRUE(d.decomposition.empty());
  EXPECT_EQ(d.manifold().str(), "empty");
}

TEST(Realize, DuplicatesMergeAndSignsAreAllowed) {
  Realization r = realize(points({{1, 1, 0}, {-3, 1, 0}, {-2, 0, 1}, {5, 0, 0}}));
  EXPECT_TRUE(r.realizable);
  EXPECT_EQ(r.decomposition, (std::vector<DecompositionTerm>{{5, 0}, {-2, 1}}));
  EXPECT_THROW(realize(points({{1, -1, 0}})), ValidationError);
}

TEST(Realize, IterativeAgreesOnExamples) {
  for (const auto& f : {points({{1, 1, 1}}), points({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}}), points({{2, 3, 0}})}) {
    Realization a = realize(f);
    Realization b = realize_iterative(f);
    EXPECT_EQ(a.realizable, b.realizable);
    EXPECT_EQ(a.decomposition, b.decomposition);
  }
}

TEST(Realize, RowsOfTheIteration) {
  EXPECT_EQ(detail::p1_row(4), (std::vector<Integer>{1, 4, 6, 4, 1}));
  for (int n = 0; n <= 8; ++n)
    for (int i = 0; i <= n; ++i) EXPECT_EQ(detail::p1_row(n)[static_cast<std::size_t>(i)], binomial(n, i));
}

TEST_F(ManifoldTest, CobordanceExamples) {
  EXPECT_EQ(cob("P(1,r)", "P(1,s)"), Tri::yes);
  EXPECT_EQ(cob("P(1,r)", "pt"), Tri::no);
  EXPECT_EQ(cob("gamma(pt)", "empty"), Tri::yes);
  EXPECT_EQ(cob("P(2,r)", "P(2,s)"), Tri::no);
}

TEST_F(ManifoldTest, CobordanceWithUnresolvedSymbols) {
  EXPECT_EQ(cob("gamma*(P(2,r))", "gamma*(P(2,r))"), Tri::yes);
  EXPECT_EQ(cob("gamma*(gamma*(P(2,r)))", "gamma*(gamma*(P(3,r)))"), Tri::no);
}

TEST_F(ManifoldTest, GammaFixedSetBookkeeping) {
  auto pt = gamma_fixed_semantics(eng, parse_manifold("pt"));
  EXPECT_TRUE(pt.total().is_zero());
  EXPECT_FALSE(pt.extra_line.is_zero());

  auto p = gamma_fixed_semantics(eng, parse_manifold("P(1,r)"));
  EXPECT_EQ(p.total(), er(-1) * (er(-1) + es(-1) - PhiElement(cp(1))));
  EXPECT_EQ(p.total(), lam("gamma(P(1,r))"));

  for (const char* s : {"P(2,s) x P(1,r)", "gamma(P(3,r))", "pt - 2*P(2,r)"})
    for (bool star : {false, true}) {
      ManifoldExpr m = parse_manifold(s);
      ManifoldExpr g = star ? ManifoldExpr::gamma_star(m) : ManifoldExpr::gamma(m);
      EXPECT_EQ(gamma_fixed_semantics(eng, m, star).total(), lambda_manifold(eng, g).lambda) << s;
    }
}

TEST(ManifoldJson, FixedPointShapes) {
  FixedPointSet f = fixed_points_from_json(Json::parse(R"({"points":[{"weight":2,"rho":1,"rho_star":0}]})"));
  EXPECT_EQ(f.points, (std::vector<FixedPoint>{{2, 1, 0}}));
  EXPECT_EQ(to_json(f).dump(), R"({"points":[{"weight":2,"rho":1,"rho_star":0}]})");
  EXPECT_THROW(fixed_points_from_json(Json::parse(R"({"pts":[]})")), ValidationError);
}

TEST(ManifoldJson, RealizationShapes) {
  EXPECT_EQ(to_json(realize(points({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}}))).dump(),
            R"({"realizable":true,"decomposition":[{"multiplicity":1,"power":2}]})");
  EXPECT_EQ(to_json(realize(points({{1, 1, 1}}))).dump(),
            R"({"realizable":false,"witness":{"degree":2,"index":1,"expected":0,"actual":1}})");
}
