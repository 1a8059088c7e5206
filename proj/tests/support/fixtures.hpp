#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "happy/graph.hpp"

namespace fixtures {

using happy::Color;
using happy::VertexId;

inline happy::Graph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<happy::Edge> list;
  for (const auto& [u, v] : edges) list.push_back({u, v, happy::Rational(1)});
  return happy::Graph(n, std::move(list));
}

inline happy::ColorSpec spec(int n, int k, std::initializer_list<std::pair<VertexId, Color>> pre) {
  happy::ColorSpec s = happy::ColorSpec::uncolored(n, k);
  for (const auto& [v, c] : pre) s.precolor[v] = c;
  return s;
}

// a(1) - b - c(2)
inline happy::HappyInstance path_abc(int k = 2) {
  return {graph(3, {{1, 2}, {2, 3}}), spec(3, k, {{1, 1}, {3, 2}}), {}};
}

// Leaves 1, 2, 3 colored 1, 1, 2 around the uncolored center 4.
inline happy::HappyInstance star_112(int k = 2) {
  return {graph(4, {{1, 4}, {2, 4}, {3, 4}}), spec(4, k, {{1, 1}, {2, 1}, {3, 2}}), {}};
}

// p(1), p'(2), r uncolored, all adjacent.
inline happy::HappyInstance triangle_12r(int k = 2) {
  return {graph(3, {{1, 2}, {1, 3}, {2, 3}}), spec(3, k, {{1, 1}, {2, 2}}), {}};
}

inline happy::Coloring coloring(std::initializer_list<Color> colors) {
  happy::Coloring c = {happy::kUncolored};
  c.insert(c.end(), colors);
  return c;
}

}  // namespace fixtures
