#include "happy/mhe.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "enumerate.hpp"
#include "happy/errors.hpp"
#include "happy/flow.hpp"

namespace happy {
namespace {

Coloring monochromatic_extension(const ColorSpec& spec, Color fill) {
  Coloring coloring = spec.precolor;
  for (std::size_t v = 1; v < coloring.size(); ++v) {
    if (coloring[v] == kUncolored) coloring[v] = fill;
  }
  return coloring;
}

}  // namespace

Solution division_mhe(const Graph& graph, const ColorSpec& spec) {
  spec.validate(graph);
  const int n = graph.vertex_count();
  const Coloring& c = spec.precolor;
  DivisionLedger ledger;

  // Star weights: for each uncolored vertex, weight towards each colored color.
  std::vector<std::map<Color, Rational>> star(n + 1);
  for (const Edge& e : graph.edges()) {
    const bool u_colored = c[e.u] != kUncolored;
    const bool v_colored = c[e.v] != kUncolored;
    if (u_colored && v_colored) {
      if (c[e.u] == c[e.v]) ledger.w_org += e.weight;
    } else if (u_colored) {
      star[e.v][c[e.u]] += e.weight;
    } else if (v_colored) {
      star[e.u][c[e.v]] += e.weight;
    } else {
      ledger.w_double_prime += e.weight;
    }
  }

  Coloring sol1 = spec.precolor;
  for (VertexId v = 1; v <= n; ++v) {
    if (c[v] != kUncolored || star[v].empty()) continue;
    // map iteration is by ascending color, so the first maximum is the smallest.
    auto best = star[v].begin();
    for (auto it = star[v].begin(); it != star[v].end(); ++it) {
      if (it->second > best->second) best = it;
    }
    sol1[v] = best->first;
    ledger.w_prime += best->second;
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (sol1[v] == kUncolored) sol1[v] = 1;
  }
  Coloring sol2 = monochromatic_extension(spec, 1);

  ledger.sol1 = happy_edge_weight(graph, sol1);
  ledger.sol2 = happy_edge_weight(graph, sol2);

  Solution out;
  out.problem = Problem::MHE;
  out.algorithm = "division";
  if (ledger.sol1 >= ledger.sol2) {
    out.coloring = std::move(sol1);
    out.objective = ledger.sol1;
  } else {
    out.coloring = std::move(sol2);
    out.objective = ledger.sol2;
  }
  out.division = ledger;
  return out;
}

Solution exact_2mhe(const Graph& graph, const ColorSpec& spec) {
  spec.validate(graph);
  if (spec.k != 2) throw ContractError("exact2 requires k=2");
  const int n = graph.vertex_count();
  Solution out;
  out.problem = Problem::MHE;
  out.algorithm = "exact2";

  const ContractionNetwork network = build_2mhe_network(graph, spec);
  if (network.degenerate) {
    bool has_first = false;
    for (VertexId v = 1; v <= n; ++v) has_first = has_first || spec.precolor[v] == 1;
    out.coloring = monochromatic_extension(spec, has_first ? 1 : 2);
    // With no precolor at all the default is color 1.
    if (spec.precolored_count() == 0) out.coloring = monochromatic_extension(spec, 1);
    out.objective = happy_edge_weight(graph, out.coloring);
    return out;
  }

  const CutResult cut = max_flow(network.net);
  out.coloring = spec.precolor;
  for (VertexId v = 1; v <= n; ++v) {
    if (out.coloring[v] == kUncolored) {
      out.coloring[v] = cut.source_side[network.node_of_vertex[v]] ? 1 : 2;
    }
  }
  out.objective = graph.total_weight() - Rational(cut.value, network.scale);
  revalidate(graph, spec, out);
  return out;
}

Solution brute_force_mhe(const Graph& graph, const ColorSpec& spec, std::uint64_t budget) {
  spec.validate(graph);
  Solution out;
  out.problem = Problem::MHE;
  out.algorithm = "brute";
  // Integer weights over a common denominator keep the inner loop cheap.
  std::int64_t scale = 1;
  for (const Edge& e : graph.edges()) scale = std::lcm(scale, e.weight.denominator());
  std::vector<std::int64_t> scaled;
  scaled.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) scaled.push_back((e.weight * Rational(scale)).numerator());

  std::int64_t best = -1;
  out.enumerated = detail::for_each_extension(spec, budget, [&](const Coloring& coloring) {
    std::int64_t weight = 0;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      const Edge& e = graph.edges()[i];
      if (coloring[e.u] == coloring[e.v]) weight += scaled[i];
    }
    if (weight > best) {
      best = weight;
      out.coloring = coloring;
    }
  });
  out.objective = Rational(best, scale);
  return out;
}

}  // namespace happy
