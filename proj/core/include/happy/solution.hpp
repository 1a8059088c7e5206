#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

enum class Problem { MHV, MHE, SoftMHV, HardMHV };

std::string_view to_string(Problem problem);
// MHV under the given mode: Strict -> MHV, Soft -> SoftMHV, Hard -> HardMHV.
Problem vertex_problem(const HappinessMode& mode);

enum class StepKind : std::uint8_t { Fill, P, Lh, Lu };

std::string_view to_string(StepKind kind);

struct GrowthStep {
  StepKind kind;
  VertexId vertex;  // the processed vertex; first vertex of the component for Fill
  Color color;
  int colored;  // vertices colored during the step
  int new_lu;   // vertices tagged Lu for the first time by the end of the step
};

// Counters kept by the subset-growth algorithms. "org" values describe the
// input precoloring, "new" values what the run generated.
struct GrowthLedger {
  int max_degree = 0;
  std::int64_t h_org = 0;
  std::int64_t h_new = 0;
  std::int64_t l_org = 0;
  std::int64_t lp_org = 0;
  std::int64_t lu_org = 0;
  std::int64_t lu_new = 0;
  int p_steps = 0;
  int lh_steps = 0;
  int lu_steps = 0;
  int fill_vertices = 0;
  int max_new_lu_p_step = 0;
  int max_new_lu_lh_step = 0;
  int max_new_lu_lu_step = 0;
  std::vector<GrowthStep> steps;

  // H^org + (max_degree + 1)(L^org - L_u^org)
  std::int64_t opt_upper_bound() const {
    return h_org + static_cast<std::int64_t>(max_degree + 1) * (l_org - lu_org);
  }
};

// Division-MHE weights: already happy, best achievable on the one-colored-end
// subgraph, and the weight between uncolored vertices.
struct DivisionLedger {
  Rational w_org{0};
  Rational w_prime{0};
  Rational w_double_prime{0};
  Rational sol1{0};
  Rational sol2{0};

  Rational opt_upper_bound() const { return w_org + w_prime + w_double_prime; }
};

struct Solution {
  Coloring coloring;
  Rational objective{0};
  Problem problem = Problem::MHV;
  HappinessMode mode;
  std::string algorithm;
  std::optional<GrowthLedger> growth;
  std::optional<DivisionLedger> division;
  // Number of colorings enumerated; set by the brute-force oracles.
  std::optional<std::uint64_t> enumerated;
};

// Re-evaluates the objective from scratch and checks the coloring extends the
// precoloring. Throws std::logic_error on mismatch.
void revalidate(const Graph& graph, const ColorSpec& spec, const Solution& solution);

}  // namespace happy
