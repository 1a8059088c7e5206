#include "happy/flow.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "happy/errors.hpp"

namespace happy {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (source == sink) throw ContractError("flow network source equals sink");
  if (source < 0 || source >= node_count || sink < 0 || sink >= node_count) {
    throw ContractError("flow network terminal out of range");
  }
}

int FlowNetwork::add_arc(int from, int to, Capacity capacity) {
  if (capacity < 0) throw ContractError("negative arc capacity");
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_) {
    throw ContractError("arc endpoint out of range");
  }
  arcs_.push_back({from, to, capacity, false});
  finite_sum_ += capacity;
  return static_cast<int>(arcs_.size()) - 1;
}

int FlowNetwork::add_infinite_arc(int from, int to) {
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_) {
    throw ContractError("arc endpoint out of range");
  }
  arcs_.push_back({from, to, 0, true});
  return static_cast<int>(arcs_.size()) - 1;
}

Capacity CutResult::cut_capacity(const FlowNetwork& net) const {
  Capacity total = 0;
  for (int a = 0; a < static_cast<int>(net.arcs().size()); ++a) {
    const auto& arc = net.arcs()[a];
    if (source_side[arc.from] && !source_side[arc.to]) total += net.capacity(a);
  }
  return total;
}

bool CutResult::cuts_infinite_arc(const FlowNetwork& net) const {
  return std::any_of(net.arcs().begin(), net.arcs().end(), [&](const auto& arc) {
    return arc.infinite && source_side[arc.from] && !source_side[arc.to];
  });
}

CutResult max_flow(const FlowNetwork& net) {
  const int n = net.node_count();
  const auto& arcs = net.arcs();
  const int residual_count = static_cast<int>(arcs.size()) * 2;

  // Residual edge 2a is arc a, 2a + 1 its reverse.
  std::vector<int> head(residual_count);
  std::vector<Capacity> residual(residual_count, 0);
  std::vector<int> start(n + 1, 0);
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    head[2 * a] = arcs[a].to;
    head[2 * a + 1] = arcs[a].from;
    residual[2 * a] = net.capacity(a);
    ++start[arcs[a].from + 1];
    ++start[arcs[a].to + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<int> adjacency(residual_count);
  {
    std::vector<int> cursor(start.begin(), start.end() - 1);
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
      adjacency[cursor[arcs[a].from]++] = 2 * a;
      adjacency[cursor[arcs[a].to]++] = 2 * a + 1;
    }
  }

  const int s = net.source();
  const int t = net.sink();
  std::vector<int> level(n);
  std::vector<int> queue(n);
  std::vector<int> next_edge(n);
  std::vector<int> path;
  Capacity total = 0;

  auto build_levels = [&]() {
    std::fill(level.begin(), level.end(), -1);
    int front = 0;
    int back = 0;
    level[s] = 0;
    queue[back++] = s;
    while (front < back) {
      const int u = queue[front++];
      for (int i = start[u]; i < start[u + 1]; ++i) {
        const int e = adjacency[i];
        if (residual[e] > 0 && level[head[e]] < 0) {
          level[head[e]] = level[u] + 1;
          queue[back++] = head[e];
        }
      }
    }
    return level[t] >= 0;
  };

  while (build_levels()) {
    std::copy(start.begin(), start.end() - 1, next_edge.begin());
    path.clear();
    int u = s;
    while (true) {
      if (u == t) {
        Capacity pushed = residual[path.front()];
        for (int e : path) pushed = std::min(pushed, residual[e]);
        for (int e : path) {
          residual[e] -= pushed;
          residual[e ^ 1] += pushed;
        }
        total += pushed;
        std::size_t keep = 0;
        while (residual[path[keep]] > 0) ++keep;
        path.resize(keep);
        u = keep == 0 ? s : head[path.back()];
        continue;
      }
      bool advanced = false;
      for (; next_edge[u] < start[u + 1]; ++next_edge[u]) {
        const int e = adjacency[next_edge[u]];
        if (residual[e] > 0 && level[head[e]] == level[u] + 1) {
          path.push_back(e);
          u = head[e];
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (u == s) break;
      level[u] = -1;
      const int e = path.back();
      path.pop_back();
      u = head[e ^ 1];
      ++next_edge[u];
    }
  }

  if (total >= net.infinite_value()) {
    throw std::logic_error("max flow reached the infinite sentinel; malformed network");
  }

  CutResult result;
  result.value = total;
  result.source_side.assign(n, false);
  {
    int front = 0;
    int back = 0;
    result.source_side[s] = true;
    queue[back++] = s;
    while (front < back) {
      const int x = queue[front++];
      for (int i = start[x]; i < start[x + 1]; ++i) {
        const int e = adjacency[i];
        if (residual[e] > 0 && !result.source_side[head[e]]) {
          result.source_side[head[e]] = true;
          queue[back++] = head[e];
        }
      }
    }
  }
  result.arc_flow.resize(arcs.size());
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    result.arc_flow[a] = net.capacity(a) - residual[2 * a];
  }
  return result;
}

namespace {

void require_two_colors(const Graph& graph, const ColorSpec& spec) {
  spec.validate(graph);
  if (spec.k != 2) throw ContractError("two-color network requires k = 2");
}

}  // namespace

ContractionNetwork build_2mhe_network(const Graph& graph, const ColorSpec& spec) {
  require_two_colors(graph, spec);
  const int n = graph.vertex_count();

  ContractionNetwork out;
  out.node_of_vertex.assign(n + 1, -1);
  int nodes = 2;
  bool has_color[3] = {false, false, false};
  for (VertexId v = 1; v <= n; ++v) {
    const Color c = spec.precolor[v];
    has_color[c] = true;
    out.node_of_vertex[v] = c == 1 ? 0 : c == 2 ? 1 : nodes++;
  }
  out.degenerate = !has_color[1] || !has_color[2];

  std::int64_t scale = 1;
  for (const Edge& e : graph.edges()) scale = std::lcm(scale, e.weight.denominator());
  out.scale = scale;

  std::vector<std::tuple<int, int, Capacity>> pairs;
  pairs.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    int a = out.node_of_vertex[e.u];
    int b = out.node_of_vertex[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const Rational scaled = e.weight * Rational(scale);
    pairs.emplace_back(a, b, scaled.numerator());
  }
  std::sort(pairs.begin(), pairs.end());

  out.net = FlowNetwork(nodes, 0, 1);
  for (std::size_t i = 0; i < pairs.size();) {
    const auto [a, b, cap] = pairs[i];
    Capacity sum = 0;
    std::size_t j = i;
    for (; j < pairs.size() && std::get<0>(pairs[j]) == a && std::get<1>(pairs[j]) == b; ++j) {
      sum += std::get<2>(pairs[j]);
    }
    out.net.add_arc(a, b, sum);
    out.net.add_arc(b, a, sum);
    i = j;
  }
  return out;
}

HappyVertexGadget build_2mhv_gadget(const Graph& graph, const ColorSpec& spec) {
  require_two_colors(graph, spec);
  const int n = graph.vertex_count();

  HappyVertexGadget out;
  out.node_of_vertex.assign(n + 1, -1);
  for (VertexId v = 1; v <= n; ++v) out.node_of_vertex[v] = 1 + v;
  out.net = FlowNetwork(3 * n + 2, 0, 1);
  const int s = 0;
  const int t = 1;

  for (VertexId v = 1; v <= n; ++v) {
    const int any_first = n + 1 + v;
    const int any_second = 2 * n + 1 + v;
    // any_first sits on the source side iff some closed neighbour has color 1,
    // any_second on the sink side iff some closed neighbour has color 2.
    out.net.add_arc(any_first, t, 1);
    out.net.add_arc(s, any_second, 1);
    out.net.add_infinite_arc(out.node_of_vertex[v], any_first);
    out.net.add_infinite_arc(any_second, out.node_of_vertex[v]);
    for (VertexId u : graph.neighbors(v)) {
      out.net.add_infinite_arc(out.node_of_vertex[u], any_first);
      out.net.add_infinite_arc(any_second, out.node_of_vertex[u]);
    }
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (spec.precolor[v] == 1) out.net.add_infinite_arc(s, out.node_of_vertex[v]);
    if (spec.precolor[v] == 2) out.net.add_infinite_arc(out.node_of_vertex[v], t);
  }
  return out;
}

}  // namespace happy
