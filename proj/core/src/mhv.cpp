#include "happy/mhv.hpp"

#include <limits>
#include <stdexcept>

#include "enumerate.hpp"
#include "happy/errors.hpp"
#include "happy/flow.hpp"

namespace happy {

std::string_view to_string(Problem problem) {
  switch (problem) {
    case Problem::MHV: return "MHV";
    case Problem::MHE: return "MHE";
    case Problem::SoftMHV: return "SoftMHV";
    case Problem::HardMHV: return "HardMHV";
  }
  return "?";
}

Problem vertex_problem(const HappinessMode& mode) {
  switch (mode.kind()) {
    case HappinessMode::Kind::Strict: return Problem::MHV;
    case HappinessMode::Kind::Soft: return Problem::SoftMHV;
    case HappinessMode::Kind::Hard: return Problem::HardMHV;
  }
  return Problem::MHV;
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Fill: return "fill";
    case StepKind::P: return "P";
    case StepKind::Lh: return "Lh";
    case StepKind::Lu: return "Lu";
  }
  return "?";
}

void revalidate(const Graph& graph, const ColorSpec& spec, const Solution& solution) {
  check_extends(graph, spec, solution.coloring);
  const Rational actual = solution.problem == Problem::MHE
                              ? happy_edge_weight(graph, solution.coloring)
                              : Rational(count_happy_vertices(graph, solution.coloring,
                                                              solution.mode));
  if (actual != solution.objective) {
    throw std::logic_error(solution.algorithm + " reported objective " +
                           format_rational(solution.objective) + " but the coloring scores " +
                           format_rational(actual));
  }
}

std::uint64_t enumeration_count(const ColorSpec& spec) {
  std::uint64_t total = 1;
  const std::uint64_t k = static_cast<std::uint64_t>(spec.k);
  for (VertexId v = 1; v < static_cast<VertexId>(spec.precolor.size()); ++v) {
    if (spec.is_precolored(v)) continue;
    if (total > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= k;
  }
  return total;
}

Solution greedy_mhv(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode) {
  spec.validate(graph);
  Solution best;
  best.problem = vertex_problem(mode);
  best.mode = mode;
  best.algorithm = "greedy";
  std::int64_t best_happy = -1;
  Coloring candidate = spec.precolor;
  for (Color i = 1; i <= spec.k; ++i) {
    for (VertexId v = 1; v <= graph.vertex_count(); ++v) {
      candidate[v] = spec.is_precolored(v) ? spec.precolor[v] : i;
    }
    const std::int64_t happy = count_happy_vertices(graph, candidate, mode);
    if (happy > best_happy) {
      best_happy = happy;
      best.coloring = candidate;
    }
  }
  best.objective = Rational(best_happy);
  return best;
}

Solution exact_2mhv(const Graph& graph, const ColorSpec& spec) {
  spec.validate(graph);
  if (spec.k != 2) throw ContractError("exact2 requires k=2");
  const int n = graph.vertex_count();
  Solution out;
  out.problem = Problem::MHV;
  out.algorithm = "exact2";
  if (spec.precolored_count() == 0) {
    out.coloring.assign(n + 1, 1);
    out.coloring[0] = kUncolored;
    out.objective = Rational(n);
    return out;
  }
  const HappyVertexGadget gadget = build_2mhv_gadget(graph, spec);
  const CutResult cut = max_flow(gadget.net);
  out.coloring.assign(n + 1, kUncolored);
  for (VertexId v = 1; v <= n; ++v) {
    out.coloring[v] = cut.source_side[gadget.node_of_vertex[v]] ? 1 : 2;
  }
  out.objective = Rational(2 * static_cast<std::int64_t>(n) - cut.value);
  revalidate(graph, spec, out);
  return out;
}

Solution brute_force_mhv(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode,
                         std::uint64_t budget) {
  spec.validate(graph);
  Solution out;
  out.problem = vertex_problem(mode);
  out.mode = mode;
  out.algorithm = "brute";
  std::int64_t best = -1;
  out.enumerated = detail::for_each_extension(spec, budget, [&](const Coloring& coloring) {
    const std::int64_t happy = count_happy_vertices(graph, coloring, mode);
    if (happy > best) {
      best = happy;
      out.coloring = coloring;
    }
  });
  out.objective = Rational(best);
  return out;
}

bool GrowthLemmaReport::all_hold() const {
  for (const auto& check : {lu_new_total, per_step_caps, h_new_lower, opt_upper, ratio}) {
    if (check.has_value() && !*check) return false;
  }
  return true;
}

GrowthLemmaReport check_growth_lemmas(const Solution& growth, std::optional<std::int64_t> opt) {
  if (!growth.growth) throw ContractError("solution carries no growth ledger");
  const GrowthLedger& g = *growth.growth;
  const std::int64_t d = g.max_degree;
  GrowthLemmaReport report;
  if (opt) report.opt_upper = *opt <= g.opt_upper_bound();
  if (d < 2) return report;
  report.lu_new_total = g.lu_new <= d * (d - 2) * g.h_new;
  report.per_step_caps = g.max_new_lu_p_step <= d * (d - 2) &&
                         g.max_new_lu_lh_step <= (d - 1) * (d - 2) &&
                         g.max_new_lu_lu_step == 0;
  report.h_new_lower = g.h_new * d * (d - 1) >= g.l_org - g.lu_org;
  if (opt) report.ratio = growth.objective * Rational(d * (d - 1) * (d + 1)) >= Rational(*opt);
  return report;
}

}  // namespace happy
