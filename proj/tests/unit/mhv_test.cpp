#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "happy/errors.hpp"
#include "happy/generators.hpp"
#include "happy/mhv.hpp"
#include "oracle.hpp"

namespace {

using namespace happy;
using fixtures::coloring;

TEST(Greedy, PathTiesOnColorOne) {
  const auto inst = fixtures::path_abc();
  const Solution s = greedy_mhv(inst.graph, inst.spec);
  EXPECT_EQ(s.objective, Rational(1));
  EXPECT_EQ(s.coloring, coloring({1, 1, 2}));
  EXPECT_EQ(s.algorithm, "greedy");
}

TEST(Greedy, EmptyPrecoloringIsMonochromatic) {
  const Graph g = fixtures::graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  EXPECT_EQ(greedy_mhv(g, ColorSpec::uncolored(5, 3)).objective, Rational(5));
}

TEST(Greedy, StarCenterTakesColorOne) {
  const auto inst = fixtures::star_112();
  const Solution s = greedy_mhv(inst.graph, inst.spec);
  EXPECT_EQ(s.objective, Rational(2));
  EXPECT_EQ(s.coloring[4], 1);
}

TEST(Growth, StarCompletesFirstLeaf) {
  const auto inst = fixtures::star_112();
  const Solution s = growth_mhv(inst.graph, inst.spec);
  EXPECT_EQ(s.objective, Rational(2));
  EXPECT_EQ(s.coloring[4], 1);
  ASSERT_TRUE(s.growth);
  ASSERT_EQ(s.growth->steps.size(), 1u);
  EXPECT_EQ(s.growth->steps[0].kind, StepKind::P);
  EXPECT_EQ(s.growth->steps[0].vertex, 1);
  EXPECT_EQ(s.growth->h_org, 0);
  EXPECT_EQ(s.growth->h_new, 2);
}

TEST(Growth, PendantOnSecondColorIsLh) {
  // p(1) - q(2), r hangs off q.
  const Graph g = fixtures::graph(3, {{1, 2}, {2, 3}});
  const Solution s = growth_mhv(g, fixtures::spec(3, 2, {{1, 1}, {2, 2}}));
  ASSERT_EQ(s.growth->steps.size(), 1u);
  EXPECT_EQ(s.growth->steps[0].kind, StepKind::Lh);
  EXPECT_EQ(s.coloring[3], 2);
  EXPECT_EQ(s.objective, Rational(1));
}

TEST(Growth, TriangleLuTakesLowestColoredNeighbour) {
  const auto inst = fixtures::triangle_12r();
  const Solution s = growth_mhv(inst.graph, inst.spec);
  ASSERT_EQ(s.growth->steps.size(), 1u);
  EXPECT_EQ(s.growth->steps[0].kind, StepKind::Lu);
  EXPECT_EQ(s.coloring[3], 1);
  EXPECT_EQ(s.objective, Rational(0));
}

TEST(Growth, UncoloredComponentsAreFilled) {
  // Component {1,2} is precolored, {3,4,5} is not.
  const Graph g = fixtures::graph(5, {{1, 2}, {3, 4}, {4, 5}});
  const Solution s = growth_mhv(g, fixtures::spec(5, 3, {{1, 2}}));
  EXPECT_EQ(s.coloring, coloring({2, 2, 1, 1, 1}));
  EXPECT_EQ(s.objective, Rational(5));
  EXPECT_EQ(s.growth->fill_vertices, 3);
}

TEST(Growth, EmptyPrecoloringGivesN) {
  const auto inst = gen_random(12, 0.3, 3, 0.0, 4);
  EXPECT_EQ(growth_mhv(inst.graph, inst.spec).objective, Rational(12));
}

TEST(Growth, LedgerOnTwoColorPathWithNewLu) {
  // 1(1) - 2 - 3(2) - 4 - 5(1) - 6(2). Completing vertex 1 colors 2 with 1,
  // which turns vertex 3 into U and vertex 4 (until then Lp) into Lu.
  const Graph g = fixtures::graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  const ColorSpec spec = fixtures::spec(6, 2, {{1, 1}, {3, 2}, {5, 1}, {6, 2}});
  const Solution s = growth_mhv(g, spec);
  const GrowthLedger& l = *s.growth;
  EXPECT_EQ(l.max_degree, 2);
  EXPECT_EQ(l.h_org, 0);
  EXPECT_EQ(l.h_new, 1);
  EXPECT_EQ(l.l_org, 2);
  EXPECT_EQ(l.lu_org, 0);
  EXPECT_EQ(l.lu_new, 1);
  EXPECT_EQ(l.max_new_lu_p_step, 1);
  ASSERT_EQ(l.steps.size(), 2u);
  EXPECT_EQ(l.steps[0].kind, StepKind::P);
  EXPECT_EQ(l.steps[0].new_lu, 1);
  EXPECT_EQ(l.steps[1].kind, StepKind::Lu);
  EXPECT_EQ(l.steps[1].new_lu, 0);

  const GrowthLemmaReport r = check_growth_lemmas(s, 1);
  EXPECT_EQ(r.lu_new_total, false);  // 1 > 2 * 0 * 1
  EXPECT_EQ(r.per_step_caps, false);
  EXPECT_EQ(r.h_new_lower, true);
  EXPECT_EQ(r.opt_upper, true);
  EXPECT_EQ(r.ratio, true);
  EXPECT_EQ(oracle::opt_mhv(oracle::plain(g, spec), {}), 1);
}

TEST(Growth, LemmaChecksAreVacuousBelowDegreeTwo) {
  const Graph g = fixtures::graph(4, {{1, 2}, {3, 4}});
  const Solution s = growth_mhv(g, fixtures::spec(4, 2, {{1, 1}, {4, 2}}));
  const GrowthLemmaReport r = check_growth_lemmas(s, 4);
  EXPECT_FALSE(r.lu_new_total);
  EXPECT_FALSE(r.per_step_caps);
  EXPECT_FALSE(r.h_new_lower);
  EXPECT_FALSE(r.ratio);
  EXPECT_EQ(r.opt_upper, true);
}

TEST(Exact2, Examples) {
  const auto path = fixtures::path_abc();
  EXPECT_EQ(exact_2mhv(path.graph, path.spec).objective, Rational(1));

  const Graph g = fixtures::graph(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(exact_2mhv(g, fixtures::spec(4, 2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}})).objective,
            Rational(4));

  // Opposite corners 1 and 2: coloring both free vertices 1 makes the
  // corner colored 1 happy.
  const Graph cycle = fixtures::graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const ColorSpec corners = fixtures::spec(4, 2, {{1, 1}, {3, 2}});
  EXPECT_EQ(exact_2mhv(cycle, corners).objective, Rational(1));
  EXPECT_EQ(oracle::opt_mhv(oracle::plain(cycle, corners), {}), 1);

  EXPECT_EQ(exact_2mhv(cycle, ColorSpec::uncolored(4, 2)).objective, Rational(4));
}

TEST(Exact2, RequiresTwoColors) {
  const auto inst = fixtures::path_abc(3);
  try {
    exact_2mhv(inst.graph, inst.spec);
    FAIL();
  } catch (const ContractError& e) {
    EXPECT_STREQ(e.what(), "exact2 requires k=2");
  }
}

TEST(BruteForce, Examples) {
  const auto path = fixtures::path_abc();
  const Solution s = brute_force_mhv(path.graph, path.spec);
  EXPECT_EQ(s.objective, Rational(1));
  EXPECT_EQ(s.enumerated, 2u);
  EXPECT_EQ(s.coloring, coloring({1, 1, 2}));

  const auto tri = fixtures::triangle_12r();
  EXPECT_EQ(brute_force_mhv(tri.graph, tri.spec).objective, Rational(0));

  const Graph g = fixtures::graph(3, {{1, 2}, {2, 3}});
  const Solution fixed = brute_force_mhv(g, fixtures::spec(3, 2, {{1, 1}, {2, 1}, {3, 2}}));
  EXPECT_EQ(fixed.objective, Rational(1));
  EXPECT_EQ(fixed.enumerated, 1u);
}

TEST(BruteForce, PicksLexicographicallySmallestOptimum) {
  const Graph g = fixtures::graph(3, {{1, 2}});
  const Solution s = brute_force_mhv(g, ColorSpec::uncolored(3, 3));
  EXPECT_EQ(s.coloring, coloring({1, 1, 1}));
}

TEST(BruteForce, RefusesOverBudget) {
  const auto inst = gen_random(20, 0.2, 3, 0.0, 1);
  try {
    brute_force_mhv(inst.graph, inst.spec, {}, 1000);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_NEAR(static_cast<double>(e.required()), 3486784401.0, 1.0);
    EXPECT_NE(std::string(e.what()).find("3^20"), std::string::npos) << e.what();
  }
  EXPECT_EQ(enumeration_count(inst.spec), 3486784401u);
}

class MhvOracle : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MhvOracle, SolversAgainstIndependentEnumeration) {
  const std::uint64_t seed = GetParam();
  const int k = 2 + static_cast<int>(seed % 3);
  const double reveal = 0.25 * static_cast<double>(seed % 5);
  const auto inst = gen_random(3 + static_cast<int>(seed % 7), 0.4, k, reveal, seed);
  const auto p = oracle::plain(inst.graph, inst.spec);
  const long opt = oracle::opt_mhv(p, {});

  const Solution brute = brute_force_mhv(inst.graph, inst.spec);
  EXPECT_EQ(brute.objective, Rational(opt));
  EXPECT_NO_THROW(revalidate(inst.graph, inst.spec, brute));

  const Solution greedy = greedy_mhv(inst.graph, inst.spec);
  EXPECT_GE(greedy.objective * Rational(k), Rational(opt));
  EXPECT_NO_THROW(revalidate(inst.graph, inst.spec, greedy));

  const Solution growth = growth_mhv(inst.graph, inst.spec);
  EXPECT_NO_THROW(revalidate(inst.graph, inst.spec, growth));
  const GrowthLedger& l = *growth.growth;
  EXPECT_LE(opt, l.opt_upper_bound());
  int colored_in_steps = 0;
  for (const auto& step : l.steps) {
    EXPECT_GE(step.colored, 1);
    colored_in_steps += step.colored;
  }
  EXPECT_EQ(colored_in_steps, l.l_org);
  EXPECT_LE(static_cast<int>(l.steps.size()), inst.graph.vertex_count());

  if (k == 2) EXPECT_EQ(exact_2mhv(inst.graph, inst.spec).objective, Rational(opt));
}

INSTANTIATE_TEST_SUITE_P(Seeds, MhvOracle, ::testing::Range<std::uint64_t>(0, 150));

}  // namespace
