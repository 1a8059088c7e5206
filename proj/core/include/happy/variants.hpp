#pragma once

#include <cstdint>
#include <optional>

#include "happy/graph.hpp"
#include "happy/solution.hpp"

namespace happy {

// Subset growth for the soft threshold rho in (0, 1). P and Lh steps color
// only the deficit ceil(rho * deg(v)) - |same| of uncolored neighbours,
// smallest ids first; an Lh vertex joins the color most common around it.
Solution growth_soft_mhv(const Graph& graph, const ColorSpec& spec, const Rational& rho);

// Subset growth for the hard threshold q. Refuses (Refusal) when q exceeds
// the maximum degree unless force is set.
Solution growth_hard_mhv(const Graph& graph, const ColorSpec& spec, int q, bool force = false);

// Dispatches to growth_mhv / growth_soft_mhv / growth_hard_mhv.
Solution growth_for_mode(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode,
                         bool force = false);

// The greedy k-candidate sweep evaluated under a threshold mode.
Solution greedy_variant(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode);

// max(greedy_variant, growth), which keeps the 1/k guarantee.
Solution best_of_variant(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode,
                         bool force = false);

// Per-step caps for the threshold variants with t = ceil(rho D) (soft) or q
// (hard): P-step t(D-1) + D, Lh-step (t-1)(D-1) + D, Lu-step 0.
struct VariantLemmaReport {
  std::optional<bool> per_step_caps;
  std::optional<bool> opt_upper;  // OPT <= H^org + (D+1)(L^org - L_u^org)
  // L_u^new / (D^2 H^new); nullopt when H^new = 0 or D = 0.
  std::optional<Rational> measured_constant;

  bool all_hold() const;
};

VariantLemmaReport check_variant_lemmas(const Solution& growth,
                                        std::optional<std::int64_t> opt = std::nullopt);

}  // namespace happy
