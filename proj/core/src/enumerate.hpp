#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "happy/errors.hpp"
#include "happy/graph.hpp"

namespace happy::detail {

// Visits every extension of the precoloring in lexicographic order of the
// coloring vector. Returns the number of colorings visited.
template <typename Visit>
std::uint64_t for_each_extension(const ColorSpec& spec, std::uint64_t budget, Visit&& visit) {
  std::vector<VertexId> free;
  for (VertexId v = 1; v < static_cast<VertexId>(spec.precolor.size()); ++v) {
    if (!spec.is_precolored(v)) free.push_back(v);
  }
  long double required = 1;
  for (std::size_t i = 0; i < free.size(); ++i) required *= spec.k;
  if (required > static_cast<long double>(budget)) {
    throw BudgetExceeded("brute force needs " + std::to_string(spec.k) + "^" +
                             std::to_string(free.size()) + " = " +
                             std::to_string(static_cast<double>(required)) +
                             " enumerations, budget is " + std::to_string(budget),
                         required);
  }
  Coloring coloring = spec.precolor;
  for (VertexId v : free) coloring[v] = 1;
  std::uint64_t visited = 0;
  while (true) {
    visit(static_cast<const Coloring&>(coloring));
    ++visited;
    std::size_t pos = free.size();
    while (pos > 0 && coloring[free[pos - 1]] == spec.k) {
      coloring[free[pos - 1]] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++coloring[free[pos - 1]];
  }
  return visited;
}

}  // namespace happy::detail
