#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "happy/coloring_state.hpp"
#include "happy/errors.hpp"
#include "happy/generators.hpp"
#include "oracle.hpp"

namespace {

using namespace happy;
using T = VertexType;

std::string tag(const ColoringState& s, VertexId v) { return std::string(to_string(s.type(v))); }

TEST(Classify, HappyDegreeTwoVertex) {
  const Graph g = fixtures::graph(3, {{1, 2}, {2, 3}});
  const ColoringState s(g, fixtures::spec(3, 2, {{1, 1}, {2, 1}, {3, 1}}), {});
  EXPECT_EQ(s.type(2), T::H);
}

TEST(Classify, StarLeavesArePAndCenterIsLp) {
  const auto inst = fixtures::star_112();
  const ColoringState s(inst.graph, inst.spec, {});
  for (VertexId leaf : {1, 2, 3}) EXPECT_EQ(s.type(leaf), T::P) << leaf;
  EXPECT_EQ(s.type(4), T::Lp);
  const auto p = oracle::plain(inst.graph, inst.spec);
  for (VertexId v = 1; v <= 4; ++v) EXPECT_EQ(tag(s, v), oracle::classify(p, p.pre, {}, v));
}

TEST(Classify, TriangleWithTwoColorsHasUAndLu) {
  const auto inst = fixtures::triangle_12r();
  const ColoringState s(inst.graph, inst.spec, {});
  EXPECT_EQ(s.type(1), T::U);
  EXPECT_EQ(s.type(2), T::U);
  EXPECT_EQ(s.type(3), T::Lu);
}

TEST(Classify, NoColoredNeighbourIsLf) {
  const Graph g = fixtures::graph(3, {{1, 2}, {2, 3}});
  const ColoringState s(g, fixtures::spec(3, 2, {{1, 1}}), {});
  EXPECT_EQ(s.type(3), T::Lf);
  EXPECT_EQ(s.type(2), T::Lp);
}

TEST(Classify, HardModeLuWithoutColoredNeighbours) {
  // Vertex 4 has degree 1 < q = 2 and no colored neighbour.
  const Graph g = fixtures::graph(4, {{1, 2}, {2, 3}, {3, 4}});
  const ColoringState s(g, fixtures::spec(4, 2, {{1, 1}}), HappinessMode::hard(2));
  EXPECT_EQ(s.type(4), T::Lu);
  EXPECT_EQ(s.type(3), T::Lf);
  EXPECT_EQ(s.type(1), T::U);  // degree 1 can never reach 2
}

TEST(ApplyColor, StarCenterColoredOne) {
  const auto inst = fixtures::star_112();
  ColoringState s(inst.graph, inst.spec, {});
  const auto changed = s.apply_color(4, 1);
  EXPECT_EQ(s.type(1), T::H);
  EXPECT_EQ(s.type(2), T::H);
  EXPECT_EQ(s.type(3), T::U);
  EXPECT_EQ(s.type(4), T::U);
  EXPECT_EQ(std::set<VertexId>(changed.begin(), changed.end()), (std::set<VertexId>{1, 2, 3, 4}));
  EXPECT_TRUE(s.counters_consistent());
}

TEST(ApplyColor, IsolatedVertexBecomesHappy) {
  const Graph g = fixtures::graph(3, {{1, 2}});
  ColoringState s(g, fixtures::spec(3, 2, {{1, 1}}), {});
  const auto changed = s.apply_color(3, 2);
  EXPECT_EQ(changed, std::vector<VertexId>{3});
  EXPECT_EQ(s.type(3), T::H);
}

TEST(ApplyColor, TriangleNoVertexBecomesHappy) {
  const auto inst = fixtures::triangle_12r();
  ColoringState s(inst.graph, inst.spec, {});
  s.apply_color(3, 1);
  for (VertexId v = 1; v <= 3; ++v) EXPECT_NE(s.type(v), T::H);
}

TEST(ApplyColor, RejectsRecoloringAndBadColors) {
  const auto inst = fixtures::path_abc();
  ColoringState s(inst.graph, inst.spec, {});
  EXPECT_THROW(s.apply_color(1, 2), ContractError);
  EXPECT_THROW(s.apply_color(2, 3), ContractError);
  EXPECT_THROW(s.apply_color(2, 0), ContractError);
  EXPECT_THROW(s.apply_color(4, 1), ContractError);
}

TEST(ApplyColor, TrackedSetsFollowTags) {
  const auto inst = gen_random(20, 0.2, 3, 0.3, 11);
  ColoringState s(inst.graph, inst.spec, {});
  for (VertexId v = 1; v <= 20; ++v) {
    if (!s.is_colored(v)) s.apply_color(v, 1 + v % 3);
    for (T t : {T::P, T::Lh, T::Lu}) {
      for (VertexId x = 1; x <= 20; ++x) {
        EXPECT_EQ(s.tracked(t).count(x) == 1, s.type(x) == t);
      }
    }
  }
}

// Colors random vertices one at a time and compares every tag with the
// textbook classification after every step.
class IncrementalAudit : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(IncrementalAudit, TagsMatchFullRecomputation) {
  std::mt19937_64 rng(GetParam());
  const int n = 6 + static_cast<int>(rng() % 20);
  const int k = 2 + static_cast<int>(rng() % 3);
  const auto inst = gen_random(n, 0.1 + 0.05 * (rng() % 8), k, 0.25, GetParam());
  const HappinessMode modes[] = {HappinessMode::strict(), HappinessMode::soft(Rational(1, 2)),
                                 HappinessMode::soft(Rational(2, 3)),
                                 HappinessMode::hard(1 + static_cast<int>(rng() % 3))};
  const HappinessMode mode = modes[GetParam() % 4];
  ColoringState s(inst.graph, inst.spec, mode);
  const auto p = oracle::plain(inst.graph, inst.spec);

  std::vector<VertexId> order;
  for (VertexId v = 1; v <= n; ++v) {
    if (!s.is_colored(v)) order.push_back(v);
  }
  std::shuffle(order.begin(), order.end(), rng);
  auto audit = [&] {
    ASSERT_TRUE(s.counters_consistent());
    std::vector<int> histogram(7, 0);
    for (VertexId v = 1; v <= n; ++v) {
      ASSERT_EQ(tag(s, v), oracle::classify(p, s.coloring(), mode, v))
          << "vertex " << v << " mode " << mode.to_string();
      ASSERT_EQ(s.type(v), classify_vertex(s, v));
      ++histogram[static_cast<int>(s.type(v))];
      if (mode.kind() == HappinessMode::Kind::Strict && s.type(v) == T::H) {
        EXPECT_EQ(s.diff_neighbors(v), 0);
        EXPECT_EQ(s.uncolored_neighbors(v), 0);
      }
    }
    EXPECT_EQ(histogram, s.type_histogram());
  };
  audit();
  for (VertexId v : order) {
    s.apply_color(v, 1 + static_cast<Color>(rng() % k));
    audit();
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IncrementalAudit, ::testing::Range<std::uint64_t>(0, 120));

}  // namespace
