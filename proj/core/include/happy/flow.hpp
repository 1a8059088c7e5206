#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

using Capacity = std::int64_t;

// Directed capacitated network. Each added arc gets an implicit reverse
// residual arc of capacity 0. Arcs marked infinite are given capacity
// 1 + (sum of finite capacities) when the flow is computed.
class FlowNetwork {
 public:
  struct Arc {
    int from;
    int to;
    Capacity capacity;
    bool infinite;
  };

  FlowNetwork(int node_count, int source, int sink);

  int node_count() const { return node_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Returns the arc id.
  int add_arc(int from, int to, Capacity capacity);
  int add_infinite_arc(int from, int to);

  Capacity finite_capacity_sum() const { return finite_sum_; }
  Capacity infinite_value() const { return finite_sum_ + 1; }
  Capacity capacity(int arc) const {
    return arcs_[arc].infinite ? infinite_value() : arcs_[arc].capacity;
  }

 private:
  int node_count_;
  int source_;
  int sink_;
  Capacity finite_sum_ = 0;
  std::vector<Arc> arcs_;
};

struct CutResult {
  Capacity value = 0;
  // Membership mask over nodes: reachable from the source in the final
  // residual network.
  std::vector<bool> source_side;
  // Flow on each added arc, indexed by arc id.
  std::vector<Capacity> arc_flow;

  // Total capacity of arcs leaving the source side.
  Capacity cut_capacity(const FlowNetwork& net) const;
  // True if some infinite arc crosses from the source side to the sink side.
  bool cuts_infinite_arc(const FlowNetwork& net) const;
};

// Dinic's algorithm. Throws std::logic_error if the flow reaches the
// infinite sentinel, which only happens for a malformed gadget.
CutResult max_flow(const FlowNetwork& net);

// Contraction network for two-color happy edges: all color-1 vertices merged
// into the source, all color-2 vertices into the sink, one node per
// uncolored vertex. Capacities are edge weights scaled by the least common
// denominator.
struct ContractionNetwork {
  FlowNetwork net{2, 0, 1};
  std::vector<int> node_of_vertex;  // indexed by vertex id
  Capacity scale = 1;
  // Both color classes must be nonempty for the cut to mean anything; when
  // one is empty the optimum colors everything with the other color.
  bool degenerate = false;
};

ContractionNetwork build_2mhe_network(const Graph& graph, const ColorSpec& spec);

// Cut gadget for two-color happy vertices. Nodes: 0 = source, 1 = sink,
// 1 + v for vertex v, then one "any color 1 in N[v]" node and one
// "any color 2 in N[v]" node per vertex. Every vertex pays 1 per color
// present in its closed neighbourhood, so the minimum cut equals
// n + (minimum number of unhappy vertices). Source side decodes to color 1.
struct HappyVertexGadget {
  FlowNetwork net{2, 0, 1};
  std::vector<int> node_of_vertex;
};

HappyVertexGadget build_2mhv_gadget(const Graph& graph, const ColorSpec& spec);

}  // namespace happy
