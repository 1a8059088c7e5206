#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "happy/errors.hpp"
#include "happy/generators.hpp"
#include "oracle.hpp"

namespace {

using namespace happy;
using fixtures::coloring;
using fixtures::graph;

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("2.5"), Rational(5, 2));
  EXPECT_EQ(parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_THROW(parse_rational("-1"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, FormatAndCeil) {
  EXPECT_EQ(format_rational(Rational(6, 2)), "3");
  EXPECT_EQ(format_rational(Rational(5, 2)), "5/2");
  EXPECT_EQ(ceil(Rational(3, 2)), 2);
  EXPECT_EQ(ceil(Rational(4, 2)), 2);
  EXPECT_EQ(ceil(Rational(0)), 0);
  EXPECT_EQ(ceil(Rational(-3, 2)), -1);
}

TEST(Graph, BuildsSortedSymmetricAdjacency) {
  const Graph g = graph(4, {{3, 1}, {2, 1}, {4, 3}});
  EXPECT_TRUE(g.check_invariants());
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.edges().front(), (Edge{1, 2, Rational(1)}));
  const auto n1 = g.neighbors(1);
  EXPECT_EQ(std::vector<VertexId>(n1.begin(), n1.end()), (std::vector<VertexId>{2, 3}));
  EXPECT_TRUE(g.has_edge(3, 4));
  EXPECT_TRUE(g.has_edge(4, 3));
  EXPECT_FALSE(g.has_edge(1, 4));
}

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(graph(3, {{1, 1}}), ContractError);
  EXPECT_THROW(graph(3, {{1, 2}, {2, 1}}), ContractError);
  EXPECT_THROW(graph(3, {{0, 2}}), ContractError);
  EXPECT_THROW(graph(3, {{1, 4}}), ContractError);
  EXPECT_THROW(Graph(2, {{1, 2, Rational(-1)}}), ContractError);
}

TEST(Graph, RandomGraphsKeepInvariants) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = gen_random(30, 0.2, 3, 0.5, seed, 4);
    EXPECT_TRUE(inst.graph.check_invariants());
    int max_deg = 0;
    for (VertexId v = 1; v <= 30; ++v) max_deg = std::max(max_deg, inst.graph.degree(v));
    EXPECT_EQ(inst.graph.max_degree(), max_deg);
  }
}

TEST(ColorSpec, ValidatesRange) {
  const Graph g = graph(2, {{1, 2}});
  EXPECT_NO_THROW(fixtures::spec(2, 2, {{1, 2}}).validate(g));
  EXPECT_THROW(fixtures::spec(2, 2, {{1, 3}}).validate(g), ContractError);
  EXPECT_THROW(ColorSpec::uncolored(3, 2).validate(g), ContractError);
  EXPECT_THROW(ColorSpec::uncolored(2, 0).validate(g), ContractError);
}

TEST(HappinessMode, Construction) {
  EXPECT_EQ(HappinessMode::soft(Rational(1)), HappinessMode::strict());
  EXPECT_THROW(HappinessMode::soft(Rational(0)), ContractError);
  EXPECT_THROW(HappinessMode::soft(Rational(3, 2)), ContractError);
  EXPECT_THROW(HappinessMode::hard(0), ContractError);
  EXPECT_EQ(HappinessMode::soft(Rational(1, 2)).required(3), 2);
  EXPECT_EQ(HappinessMode::soft(Rational(1, 2)).required(4), 2);
  EXPECT_EQ(HappinessMode::hard(2).required(7), 2);
  EXPECT_EQ(HappinessMode::strict().required(5), 5);
  EXPECT_THROW(HappinessMode::hard(3).validate(graph(3, {{1, 2}, {2, 3}})), Refusal);
  EXPECT_NO_THROW(HappinessMode::hard(2).validate(graph(3, {{1, 2}, {2, 3}})));
  EXPECT_EQ(HappinessMode::soft(Rational(2, 4)).to_string(), "soft 1/2");
}

TEST(CountHappy, MonochromaticMakesEveryVertexHappy) {
  const auto inst = gen_random(12, 0.4, 3, 0.0, 7);
  const Coloring all_one(13, 1);
  EXPECT_EQ(count_happy_vertices(inst.graph, all_one, HappinessMode::strict()), 12);
}

TEST(CountHappy, PathColored112HasOneHappyVertex) {
  const Graph g = graph(3, {{1, 2}, {2, 3}});
  const Coloring c = coloring({1, 1, 2});
  EXPECT_EQ(count_happy_vertices(g, c, HappinessMode::strict()), 1);
  EXPECT_TRUE(is_happy(g, c, HappinessMode::strict(), 1));
  EXPECT_EQ(oracle::count_happy(oracle::plain(g, ColorSpec::uncolored(3, 2)), c,
                                HappinessMode::strict()),
            1);
}

TEST(CountHappy, FourCycleSoftHalf) {
  const Graph g = graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  EXPECT_EQ(count_happy_vertices(g, coloring({1, 1, 2, 2}), HappinessMode::soft(Rational(1, 2))),
            4);
}

TEST(CountHappy, DegreeZeroVertices) {
  const Graph g(2, {});
  const Coloring c = coloring({1, 2});
  EXPECT_EQ(count_happy_vertices(g, c, HappinessMode::strict()), 2);
  EXPECT_EQ(count_happy_vertices(g, c, HappinessMode::soft(Rational(1, 3))), 2);
  EXPECT_EQ(count_happy_vertices(g, c, HappinessMode::hard(1)), 0);
}

TEST(HappyEdgeWeight, Examples) {
  const Graph path = graph(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(happy_edge_weight(path, coloring({1, 1, 2})), Rational(1));
  EXPECT_EQ(happy_edge_weight(path, coloring({2, 2, 2})), path.total_weight());
  const Graph tri(3, {{1, 2, Rational(2)}, {1, 3, Rational(3)}, {2, 3, Rational(5)}});
  EXPECT_EQ(happy_edge_weight(tri, coloring({1, 1, 2})), Rational(2));
}

TEST(CheckExtends, RejectsPartialAndConflicting) {
  const auto inst = fixtures::path_abc();
  EXPECT_NO_THROW(check_extends(inst.graph, inst.spec, coloring({1, 2, 2})));
  EXPECT_THROW(check_extends(inst.graph, inst.spec, coloring({1, 0, 2})), ContractError);
  EXPECT_THROW(check_extends(inst.graph, inst.spec, coloring({2, 1, 2})), ContractError);
  EXPECT_THROW(check_extends(inst.graph, inst.spec, coloring({1, 3, 2})), ContractError);
}

class RandomColorings : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomColorings, EvaluationProperties) {
  std::mt19937_64 rng(GetParam());
  const auto inst = gen_random(15, 0.3, 4, 0.0, GetParam(), 3);
  const Graph& g = inst.graph;
  Coloring c(16);
  for (VertexId v = 1; v <= 15; ++v) c[v] = 1 + static_cast<Color>(rng() % 4);
  const auto p = oracle::plain(g, inst.spec);

  // Strict happy count plus vertices with a differing neighbour is n.
  int differing = 0;
  for (VertexId v = 1; v <= 15; ++v) {
    bool d = false;
    for (VertexId u : g.neighbors(v)) d = d || c[u] != c[v];
    differing += d;
  }
  EXPECT_EQ(count_happy_vertices(g, c, HappinessMode::strict()) + differing, 15);

  for (const auto& mode : {HappinessMode::strict(), HappinessMode::soft(Rational(1, 3)),
                           HappinessMode::soft(Rational(3, 4)), HappinessMode::hard(1),
                           HappinessMode::hard(2)}) {
    EXPECT_EQ(count_happy_vertices(g, c, mode), oracle::count_happy(p, c, mode)) << mode.to_string();
  }
  EXPECT_EQ(happy_edge_weight(g, c), oracle::happy_weight(p, c));

  // Renaming colors leaves the happy weight unchanged.
  std::vector<Color> names = {0, 1, 2, 3, 4};
  std::shuffle(names.begin() + 1, names.end(), rng);
  Coloring renamed = c;
  for (VertexId v = 1; v <= 15; ++v) renamed[v] = names[c[v]];
  EXPECT_EQ(happy_edge_weight(g, renamed), happy_edge_weight(g, c));

  // Thresholds are monotone.
  for (int q = 1; q < 5; ++q) {
    EXPECT_GE(count_happy_vertices(g, c, HappinessMode::hard(q)),
              count_happy_vertices(g, c, HappinessMode::hard(q + 1)));
  }
  const Rational rhos[] = {Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                           Rational(9, 10), Rational(1)};
  for (std::size_t i = 0; i + 1 < std::size(rhos); ++i) {
    EXPECT_GE(count_happy_vertices(g, c, HappinessMode::soft(rhos[i])),
              count_happy_vertices(g, c, HappinessMode::soft(rhos[i + 1])));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomColorings, ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
