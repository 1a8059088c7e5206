#pragma once

#include <cstdint>

#include "happy/graph.hpp"
#include "happy/mhv.hpp"
#include "happy/solution.hpp"

namespace happy {

// 1/2-approximation for weighted happy edges. SOL1 colors each uncolored
// vertex with an edge to a colored vertex by the best color of its star, then
// everything else with color 1; SOL2 colors every uncolored vertex 1. The
// better one wins, SOL1 on ties.
Solution division_mhe(const Graph& graph, const ColorSpec& spec);

// Optimal for k = 2: contract the color classes and take a minimum s-t cut.
Solution exact_2mhe(const Graph& graph, const ColorSpec& spec);

Solution brute_force_mhe(const Graph& graph, const ColorSpec& spec,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace happy
