#include "happy/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "happy/errors.hpp"

namespace happy {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ContractError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw ContractError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                          ") references a vertex outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw ContractError("self-loop at vertex " + std::to_string(e.u));
    if (e.weight < 0) throw ContractError("negative edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw ContractError("parallel edge (" + std::to_string(edges_[i].u) + ", " +
                          std::to_string(edges_[i].v) + ")");
    }
  }

  std::vector<int> degree(n + 2, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 2, 0);
  for (int v = 1; v <= n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> cursor(offsets_.begin(), offsets_.end());
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (int v = 1; v <= n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    max_degree_ = std::max(max_degree_, degree[v]);
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Rational Graph::total_weight() const {
  Rational total(0);
  for (const Edge& e : edges_) total += e.weight;
  return total;
}

bool Graph::weighted() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight != Rational(1); });
}

bool Graph::check_invariants() const {
  int delta = 0;
  for (VertexId v = 1; v <= n_; ++v) {
    auto nbrs = neighbors(v);
    delta = std::max(delta, static_cast<int>(nbrs.size()));
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == v) return false;
      if (i > 0 && nbrs[i] <= nbrs[i - 1]) return false;
      if (!has_edge(nbrs[i], v)) return false;
    }
  }
  return delta == max_degree_ && adjacency_.size() == 2 * edges_.size();
}

ColorSpec ColorSpec::uncolored(int n, int k) {
  return ColorSpec{k, Coloring(static_cast<std::size_t>(n) + 1, kUncolored)};
}

int ColorSpec::precolored_count() const {
  return static_cast<int>(std::count_if(precolor.begin() + (precolor.empty() ? 0 : 1),
                                        precolor.end(),
                                        [](Color c) { return c != kUncolored; }));
}

void ColorSpec::validate(const Graph& graph) const {
  if (k < 1) throw ContractError("color count k must be at least 1");
  if (precolor.size() != static_cast<std::size_t>(graph.vertex_count()) + 1) {
    throw ContractError("precoloring size does not match the graph");
  }
  for (VertexId v = 1; v <= graph.vertex_count(); ++v) {
    if (precolor[v] < 0 || precolor[v] > k) {
      throw ContractError("precolor of vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(k));
    }
  }
}

HappinessMode HappinessMode::soft(Rational rho) {
  if (rho <= 0 || rho > 1) {
    throw ContractError("soft threshold must lie in (0, 1], got " + format_rational(rho));
  }
  if (rho == Rational(1)) return strict();
  HappinessMode mode;
  mode.kind_ = Kind::Soft;
  mode.rho_ = rho;
  return mode;
}

HappinessMode HappinessMode::hard(int q) {
  if (q < 1) throw ContractError("hard threshold q must be positive");
  HappinessMode mode;
  mode.kind_ = Kind::Hard;
  mode.q_ = q;
  return mode;
}

std::int64_t HappinessMode::required(int degree) const {
  switch (kind_) {
    case Kind::Strict:
      return degree;
    case Kind::Soft:
      return ceil(rho_ * Rational(degree));
    case Kind::Hard:
      return q_;
  }
  return degree;
}

void HappinessMode::validate(const Graph& graph) const {
  if (kind_ == Kind::Hard && q_ > graph.max_degree()) {
    throw Refusal("hard threshold q = " + std::to_string(q_) + " exceeds the maximum degree " +
                  std::to_string(graph.max_degree()) + "; no vertex can be happy");
  }
}

std::string HappinessMode::to_string() const {
  switch (kind_) {
    case Kind::Strict:
      return "strict";
    case Kind::Soft:
      return "soft " + std::to_string(rho_.numerator()) + "/" +
             std::to_string(rho_.denominator());
    case Kind::Hard:
      return "hard " + std::to_string(q_);
  }
  return "strict";
}

void check_extends(const Graph& graph, const ColorSpec& spec, const Coloring& coloring) {
  if (coloring.size() != static_cast<std::size_t>(graph.vertex_count()) + 1) {
    throw ContractError("coloring size does not match the graph");
  }
  for (VertexId v = 1; v <= graph.vertex_count(); ++v) {
    if (coloring[v] < 1 || coloring[v] > spec.k) {
      throw ContractError("vertex " + std::to_string(v) + " is not colored in 1..k");
    }
    if (spec.is_precolored(v) && spec.precolor[v] != coloring[v]) {
      throw ContractError("vertex " + std::to_string(v) + " changes its precolor");
    }
  }
}

bool is_happy(const Graph& graph, const Coloring& coloring, const HappinessMode& mode,
              VertexId v) {
  if (coloring[v] == kUncolored) return false;
  std::int64_t same = 0;
  for (VertexId u : graph.neighbors(v)) {
    if (coloring[u] == coloring[v]) ++same;
  }
  return mode.satisfied(same, graph.degree(v));
}

std::int64_t count_happy_vertices(const Graph& graph, const Coloring& coloring,
                                  const HappinessMode& mode) {
  std::int64_t happy = 0;
  for (VertexId v = 1; v <= graph.vertex_count(); ++v) {
    if (is_happy(graph, coloring, mode, v)) ++happy;
  }
  return happy;
}

Rational happy_edge_weight(const Graph& graph, const Coloring& coloring) {
  Rational total(0);
  for (const Edge& e : graph.edges()) {
    if (coloring[e.u] != kUncolored && coloring[e.u] == coloring[e.v]) total += e.weight;
  }
  return total;
}

}  // namespace happy
