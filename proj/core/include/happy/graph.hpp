#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "happy/rational.hpp"

namespace happy {

// Vertices are 1..n and colors are 1..k. Per-vertex arrays are sized n + 1
// with slot 0 unused; color 0 means "uncolored".
using VertexId = int;
using Color = int;
inline constexpr Color kUncolored = 0;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational weight{1};

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph with nonnegative rational edge weights.
class Graph {
 public:
  Graph() = default;

  // Validates ids, rejects self-loops, parallel edges and negative weights.
  // Edges are stored normalized (u < v) and sorted lexicographically.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const { return max_degree_; }

  bool has_edge(VertexId u, VertexId v) const;
  Rational total_weight() const;
  // True when some edge weight differs from 1.
  bool weighted() const;

  // Recomputes every structural invariant; used by tests.
  bool check_invariants() const;

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_ = {0, 0};
  std::vector<VertexId> adjacency_;
};

// A (partial or total) coloring, indexed by vertex id.
using Coloring = std::vector<Color>;

struct ColorSpec {
  int k = 1;
  Coloring precolor;  // size n + 1

  static ColorSpec uncolored(int n, int k);

  bool is_precolored(VertexId v) const { return precolor[v] != kUncolored; }
  int precolored_count() const;
  // Throws ContractError when k < 1, the size mismatches the graph or a
  // precolor lies outside 1..k.
  void validate(const Graph& graph) const;
};

class HappinessMode {
 public:
  enum class Kind { Strict, Soft, Hard };

  HappinessMode() = default;

  static HappinessMode strict() { return {}; }
  // rho must lie in (0, 1]; rho == 1 is the strict mode.
  static HappinessMode soft(Rational rho);
  // q must be positive; the bound q <= max degree is checked by validate().
  static HappinessMode hard(int q);

  Kind kind() const { return kind_; }
  const Rational& rho() const { return rho_; }
  int q() const { return q_; }

  // Same-colored neighbours needed by a vertex of this degree.
  std::int64_t required(int degree) const;
  bool satisfied(std::int64_t same, int degree) const {
    return same >= required(degree);
  }

  // Hard mode requires q <= max degree of the graph.
  void validate(const Graph& graph) const;

  std::string to_string() const;

  friend bool operator==(const HappinessMode&, const HappinessMode&) = default;

 private:
  Kind kind_ = Kind::Strict;
  Rational rho_{1};
  int q_ = 0;
};

struct HappyInstance {
  Graph graph;
  ColorSpec spec;
  HappinessMode mode;
};

// Throws ContractError if coloring is not total, not in 1..k, or does not
// extend the precoloring.
void check_extends(const Graph& graph, const ColorSpec& spec, const Coloring& coloring);

bool is_happy(const Graph& graph, const Coloring& coloring, const HappinessMode& mode,
              VertexId v);
std::int64_t count_happy_vertices(const Graph& graph, const Coloring& coloring,
                                  const HappinessMode& mode);
Rational happy_edge_weight(const Graph& graph, const Coloring& coloring);

}  // namespace happy
