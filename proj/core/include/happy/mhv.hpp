#pragma once

#include <cstdint>
#include <optional>

#include "happy/graph.hpp"
#include "happy/solution.hpp"

namespace happy {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

// Colors every uncolored vertex with one color, for each of the k colors, and
// keeps the candidate with the most happy vertices (smallest color on ties).
// A 1/k-approximation in every happiness mode.
Solution greedy_mhv(const Graph& graph, const ColorSpec& spec,
                    const HappinessMode& mode = HappinessMode::strict());

// Subset-growth algorithm for strict happiness. Repeatedly:
//  - completes the smallest-id P vertex by giving all its uncolored
//    neighbours its color;
//  - otherwise colors the smallest-id Lh vertex and all its uncolored
//    neighbours with the single color around it;
//  - otherwise colors the smallest-id Lu vertex with the color of its
//    smallest-id colored neighbour (color 1 if none).
// Components without any precolored vertex are colored 1 up front. The
// returned Solution carries a GrowthLedger.
Solution growth_mhv(const Graph& graph, const ColorSpec& spec);

// Optimal for k = 2 through one max-flow call on build_2mhv_gadget.
Solution exact_2mhv(const Graph& graph, const ColorSpec& spec);

// Enumerates every extension of the precoloring. Deterministic: the
// lexicographically smallest optimal coloring wins. Throws BudgetExceeded when
// k^(uncolored) > budget.
Solution brute_force_mhv(const Graph& graph, const ColorSpec& spec,
                         const HappinessMode& mode = HappinessMode::strict(),
                         std::uint64_t budget = kDefaultBudget);

// k^(uncolored vertices), saturating at UINT64_MAX.
std::uint64_t enumeration_count(const ColorSpec& spec);

// Checks of the growth ledger against the strict-mode bounds. Each field is
// nullopt when the check does not apply (max degree below 2, or no oracle
// optimum supplied).
struct GrowthLemmaReport {
  std::optional<bool> lu_new_total;   // L_u^new <= D(D-2) H^new
  std::optional<bool> per_step_caps;  // P: D(D-2), Lh: (D-1)(D-2), Lu: 0
  std::optional<bool> h_new_lower;    // H^new D(D-1) >= L^org - L_u^org
  std::optional<bool> opt_upper;      // OPT <= H^org + (D+1)(L^org - L_u^org)
  std::optional<bool> ratio;          // SOL D(D-1)(D+1) >= OPT

  bool all_hold() const;
};

GrowthLemmaReport check_growth_lemmas(const Solution& growth,
                                      std::optional<std::int64_t> opt = std::nullopt);

}  // namespace happy
