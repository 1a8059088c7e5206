#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "happy/errors.hpp"
#include "happy/flow.hpp"
#include "happy/generators.hpp"
#include "oracle.hpp"

namespace {

using namespace happy;

void expect_certificate(const FlowNetwork& net, const CutResult& cut) {
  EXPECT_EQ(cut.cut_capacity(net), cut.value);
  EXPECT_TRUE(cut.source_side[net.source()]);
  EXPECT_FALSE(cut.source_side[net.sink()]);
  EXPECT_FALSE(cut.cuts_infinite_arc(net));
  std::vector<Capacity> balance(net.node_count(), 0);
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    const auto& arc = net.arcs()[a];
    EXPECT_GE(cut.arc_flow[a], 0);
    EXPECT_LE(cut.arc_flow[a], net.capacity(static_cast<int>(a)));
    balance[arc.from] -= cut.arc_flow[a];
    balance[arc.to] += cut.arc_flow[a];
  }
  for (int x = 0; x < net.node_count(); ++x) {
    if (x != net.source() && x != net.sink()) EXPECT_EQ(balance[x], 0) << "node " << x;
  }
  EXPECT_EQ(balance[net.sink()], cut.value);
}

TEST(MaxFlow, SingleArc) {
  FlowNetwork net(2, 0, 1);
  net.add_arc(0, 1, 5);
  const CutResult cut = max_flow(net);
  EXPECT_EQ(cut.value, 5);
  EXPECT_EQ(cut.source_side, (std::vector<bool>{true, false}));
}

TEST(MaxFlow, Bottleneck) {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 3);
  net.add_arc(1, 2, 2);
  const CutResult cut = max_flow(net);
  EXPECT_EQ(cut.value, 2);
  expect_certificate(net, cut);
}

TEST(MaxFlow, RejectsMalformedNetworks) {
  EXPECT_THROW(FlowNetwork(2, 0, 0), ContractError);
  FlowNetwork net(2, 0, 1);
  EXPECT_THROW(net.add_arc(0, 1, -1), ContractError);
  EXPECT_THROW(net.add_arc(0, 2, 1), ContractError);
  // An uncuttable source-sink path.
  net.add_infinite_arc(0, 1);
  EXPECT_THROW(max_flow(net), std::logic_error);
}

TEST(MaxFlow, MatchesEdmondsKarpOnRandomNetworks) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int nodes = 2 + static_cast<int>(rng() % 12);
    FlowNetwork net(nodes, 0, nodes - 1);
    std::vector<std::tuple<int, int, std::int64_t>> arcs;
    const int m = static_cast<int>(rng() % 40);
    for (int i = 0; i < m; ++i) {
      const int a = static_cast<int>(rng() % nodes);
      const int b = static_cast<int>(rng() % nodes);
      if (a == b) continue;
      const std::int64_t c = static_cast<std::int64_t>(rng() % 10);
      net.add_arc(a, b, c);
      arcs.emplace_back(a, b, c);
    }
    const CutResult cut = max_flow(net);
    EXPECT_EQ(cut.value, oracle::max_flow(nodes, 0, nodes - 1, arcs));
    expect_certificate(net, cut);
  }
}

TEST(ContractionNetwork, PathMergesColorClasses) {
  const auto inst = fixtures::path_abc();
  const ContractionNetwork net = build_2mhe_network(inst.graph, inst.spec);
  EXPECT_FALSE(net.degenerate);
  EXPECT_EQ(net.net.node_count(), 3);
  EXPECT_EQ(net.node_of_vertex[1], 0);
  EXPECT_EQ(net.node_of_vertex[3], 1);
  EXPECT_EQ(net.node_of_vertex[2], 2);
  ASSERT_EQ(net.net.arcs().size(), 4u);
  for (const auto& arc : net.net.arcs()) EXPECT_EQ(arc.capacity, 1);
  EXPECT_EQ(max_flow(net.net).value, 1);
}

TEST(ContractionNetwork, ConflictingEdgeIsAlwaysCut) {
  const Graph g(2, {{1, 2, Rational(3)}});
  const ContractionNetwork net = build_2mhe_network(g, fixtures::spec(2, 2, {{1, 1}, {2, 2}}));
  ASSERT_EQ(net.net.arcs().size(), 2u);
  EXPECT_EQ(net.net.arcs()[0].from, 0);
  EXPECT_EQ(net.net.arcs()[0].to, 1);
  EXPECT_EQ(max_flow(net.net).value, 3);
}

TEST(ContractionNetwork, MonochromaticTriangleIsDegenerate) {
  const Graph g = fixtures::graph(3, {{1, 2}, {2, 3}, {1, 3}});
  const ContractionNetwork net =
      build_2mhe_network(g, fixtures::spec(3, 2, {{1, 1}, {2, 1}, {3, 1}}));
  EXPECT_TRUE(net.degenerate);
  EXPECT_TRUE(net.net.arcs().empty());
}

TEST(ContractionNetwork, ScalesRationalWeightsAndSumsParallelArcs) {
  // Vertices 1 and 2 both colored 1 and both adjacent to 3: two arcs merge.
  const Graph g(4, {{1, 3, Rational(1, 2)}, {2, 3, Rational(1, 3)}, {3, 4, Rational(1)}});
  const ContractionNetwork net = build_2mhe_network(g, fixtures::spec(4, 2, {{1, 1}, {2, 1}, {4, 2}}));
  EXPECT_EQ(net.scale, 6);
  ASSERT_EQ(net.net.arcs().size(), 4u);
  EXPECT_EQ(net.net.arcs()[0].capacity, 5);  // (1/2 + 1/3) * 6
  EXPECT_EQ(max_flow(net.net).value, 5);
}

TEST(VertexGadget, PathCutValue) {
  const auto inst = fixtures::path_abc();
  const auto gadget = build_2mhv_gadget(inst.graph, inst.spec);
  const CutResult cut = max_flow(gadget.net);
  EXPECT_EQ(cut.value, 5);
  EXPECT_EQ(2 * 3 - cut.value, 1);
  expect_certificate(gadget.net, cut);
}

TEST(VertexGadget, AllPrecoloredOne) {
  const Graph g = fixtures::graph(4, {{1, 2}, {2, 3}, {3, 4}});
  const auto gadget = build_2mhv_gadget(g, fixtures::spec(4, 2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  EXPECT_EQ(max_flow(gadget.net).value, 4);
}

TEST(VertexGadget, TriangleCutValue) {
  const auto inst = fixtures::triangle_12r();
  EXPECT_EQ(max_flow(build_2mhv_gadget(inst.graph, inst.spec).net).value, 6);
}

TEST(VertexGadget, RequiresTwoColors) {
  const auto inst = fixtures::path_abc(3);
  EXPECT_THROW(build_2mhv_gadget(inst.graph, inst.spec), ContractError);
  EXPECT_THROW(build_2mhe_network(inst.graph, inst.spec), ContractError);
}

TEST(VertexGadget, CutMatchesOracleOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = gen_random(2 + static_cast<int>(seed % 9), 0.35, 2, 0.4, seed);
    const auto gadget = build_2mhv_gadget(inst.graph, inst.spec);
    const CutResult cut = max_flow(gadget.net);
    expect_certificate(gadget.net, cut);
    const auto p = oracle::plain(inst.graph, inst.spec);
    EXPECT_EQ(2 * inst.graph.vertex_count() - cut.value, oracle::opt_mhv(p, {})) << seed;
  }
}

}  // namespace
