#include "sfb/calculus.hpp"
#include "sfb/manifold.hpp"
#include "sfb/random.hpp"

#include <gtest/gtest.h>

using namespace sfb;

namespace {

ManifoldExpr random_manifold(Rng& rng, int depth) {
  int pick = detail::uniform(rng, 0, depth > 0 ? 5 : 2);
  switch (pick) {
    case 0: return ManifoldExpr::point();
    case 1:
    case 2: return ManifoldExpr::pc(detail::uniform(rng, 1, 4), detail::uniform(rng, 0, 1) ? Flavor::r : Flavor::s);
    case 3: return ManifoldExpr::product({random_manifold(rng, depth - 1), random_manifold(rng, depth - 1)});
    case 4:
      return ManifoldExpr::disjoint_union({{Integer(detail::uniform(rng, -2, 2)), random_manifold(rng, depth - 1)},
                                           {Integer(1), random_manifold(rng, depth - 1)}});
    default: {
      ManifoldExpr m = random_manifold(rng, depth - 1);
      return detail::uniform(rng, 0, 1) ? ManifoldExpr::gamma(m) : ManifoldExpr::gamma_star(m);
    }
  }
}

/// Every composition of powers with total at most `budget`, as sorted lists.
void power_lists(int budget, int min_power, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int p = min_power; p <= budget; ++p) {
    cur.push_back(p);
    power_lists(budget - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(NormalizeProperties, IdempotentOnRandomTerms) {
  Calculus calc;
  Rng rng(61);
  TermShape shape;
  for (int trial = 0; trial < 120; ++trial) {
    GammaTerm t = random_term(rng, shape);
    NormalForm once = calc.normalize(t);
    NormalForm twice = calc.normalize(once.term());
    EXPECT_EQ(once, twice) << t.str();
  }
}

TEST(NormalizeProperties, RandomRuleOrderAgrees) {
  Calculus calc;
  Rng rng(62);
  TermShape shape;
  for (int trial = 0; trial < 80; ++trial) {
    GammaTerm t = random_term(rng, shape);
    NormalForm det = calc.normalize(t);
    for (std::uint64_t seed : {1u, 2u}) {
      NormalizeOptions opts;
      opts.rewrite.strategy = Strategy::random;
      opts.rewrite.seed = seed + 100 * static_cast<std::uint64_t>(trial);
      EXPECT_EQ(calc.normalize(t, opts), det) << t.str();
    }
  }
}

TEST(NormalizeProperties, EvenDegrees) {
  Calculus calc;
  Rng rng(63);
  TermShape shape;
  for (int trial = 0; trial < 100; ++trial) {
    GammaTerm t = random_term(rng, shape);
    NormalForm n = calc.normalize(t);
    for (int d : n.degrees()) EXPECT_EQ(d % 2, 0);
    for (int d : n.lambda.degrees()) EXPECT_EQ(d % 2, 0);
  }
}

TEST(RealizeProperties, ProductsOfSpheresRoundTrip) {
  std::vector<int> cur;
  std::vector<std::vector<int>> lists;
  power_lists(8, 1, cur, lists);
  for (const auto& powers : lists) {
    std::vector<std::pair<Integer, ManifoldExpr>> parts;
    std::map<int, Integer> want;
    for (int p : powers) {
      parts.emplace_back(1, ManifoldExpr::p1_power(p));
      want[p] += 1;
    }
    Realization r = realize(fixed_data(ManifoldExpr::disjoint_union(parts)));
    ASSERT_TRUE(r.realizable);
    std::map<int, Integer> got;
    for (const auto& t : r.decomposition) got[t.power] = t.multiplicity;
    EXPECT_EQ(got, want);
  }
}

TEST(RealizeProperties, ClosedFormMatchesIterationExhaustively) {
  for (int n = 0; n <= 4; ++n) {
    std::vector<int> a(static_cast<std::size_t>(n) + 1, -3);
    while (true) {
      FixedPointSet f;
      for (int i = 0; i <= n; ++i) f.points.push_back({a[static_cast<std::size_t>(i)], n - i, i});
      Realization c = realize(f);
      Realization it = realize_iterative(f);
      ASSERT_EQ(c.realizable, it.realizable);
      EXPECT_EQ(c.decomposition, it.decomposition);
      std::size_t k = 0;
      while (k < a.size() && a[k] == 3) a[k++] = -3;
      if (k == a.size()) break;
      ++a[k];
    }
  }
}

TEST(RealizeProperties, DecompositionReproducesData) {
  Engine eng;
  Rng rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    FixedPointSet f;
    for (int n = 0; n <= 5; ++n) {
      int a0 = detail::uniform(rng, -3, 3);
      for (int i = 0; i <= n; ++i) f.points.push_back({a0 * binomial(n, i), n - i, i});
    }
    Realization r = realize(f);
    ASSERT_TRUE(r.realizable);
    EXPECT_EQ(eng.lambda(r.manifold().term()), f.lambda());
  }
}

TEST(ManifoldProperties, GammaStaysGeometric) {
  Engine eng;
  Rng rng(65);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    ManifoldExpr m = random_manifold(rng, 2);
    auto [l, a] = lambda_manifold(eng, m);
    if (a.has_aug()) continue;
    ++checked;
    EXPECT_TRUE(l.is_in_F()) << m.str();
    EXPECT_TRUE(lambda_manifold(eng, ManifoldExpr::gamma(m)).lambda.is_in_F()) << m.str();
    EXPECT_TRUE(lambda_manifold(eng, ManifoldExpr::gamma_star(m)).lambda.is_in_F()) << m.str();
  }
  EXPECT_GT(checked, 100);
}

TEST(ManifoldProperties, CobordanceIsAnEquivalence) {
  Engine eng;
  Rng rng(66);
  std::vector<ManifoldExpr> ms;
  while (ms.size() < 40) {
    ManifoldExpr m = random_manifold(rng, 2);
    if (!eng.lambda(m.term()).has_aug()) ms.push_back(m);
  }
  // Collapse pairs onto equal images so the relation has nontrivial classes.
  ms.push_back(ManifoldExpr::pc(1, Flavor::s));
  ms.push_back(ManifoldExpr::pc(1, Flavor::r));
  ms.push_back(ManifoldExpr::gamma(ManifoldExpr::point()));
  ms.push_back(ManifoldExpr::empty());
  const std::size_t n = ms.size();
  std::vector<std::vector<Tri>> rel(n, std::vector<Tri>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rel[i][j] = check_cobordant(eng, ms[i], ms[j]);
      ASSERT_NE(rel[i][j], Tri::unknown);
    }
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(rel[i][i], Tri::yes);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(rel[i][j], rel[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (rel[i][j] == Tri::yes && rel[j][k] == Tri::yes) {
          EXPECT_EQ(rel[i][k], Tri::yes);
        }
    }
  }
  EXPECT_EQ(rel[n - 4][n - 3], Tri::yes);
  EXPECT_EQ(rel[n - 2][n - 1], Tri::yes);
}
