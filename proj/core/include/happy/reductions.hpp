#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "happy/graph.hpp"
#include "happy/mhv.hpp"
#include "happy/solution.hpp"

namespace happy {

// Unit-cost Multiway Cut: remove the fewest edges so that no two terminals
// stay connected.
struct MultiwayCutInstance {
  Graph graph;
  std::vector<VertexId> terminals;

  // Throws ContractError unless terminals are valid, distinct and at least two.
  void validate() const;
};

// OPT_target = a * OPT_source + b
struct AffineValueMap {
  std::int64_t a = 1;
  std::int64_t b = 0;
};

// For the soft-threshold gadget: m* >= m0  <=>  n* >= offset + m0, where
// offset = max_degree * n + (h + 1) * m. Holding for every m0 is equivalent to
// n* = offset + m*.
struct SoftIffRelation {
  std::int64_t max_degree = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t h = 0;
  std::int64_t k = 0;

  std::int64_t offset() const { return max_degree * n + (h + 1) * m; }
};

struct GadgetParams {
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> max_degree;
};

enum class ReductionKind { MultiwayCutTo3MHE, Pad3MHEToKMHE, MHEToMHV, MHEToHardMHV, MHEToSoftMHV };

std::string_view to_string(ReductionKind kind);

struct ReductionOutput {
  ReductionKind kind;
  std::variant<MultiwayCutInstance, HappyInstance> source;
  HappyInstance target;
  Problem target_problem = Problem::MHE;
  std::variant<AffineValueMap, SoftIffRelation> value_map;
  GadgetParams params;
};

// Terminal s_i receives color i; the graph is unchanged. OPT_MHE = m - OPT_cut.
ReductionOutput multiway_cut_to_3mhe(const MultiwayCutInstance& instance);

// Adds pad edges (x_i, y_i) colored i for 4 <= i <= k, each x_i also joined to
// the smallest-id color-1 vertex. OPT grows by k - 3.
ReductionOutput pad_3mhe_to_kmhe(const HappyInstance& source, int k);

// Joins k apex vertices (x_i colored i) to every original vertex and
// subdivides every edge with a degree-2 vertex. OPT_MHV = OPT_MHE when the
// precoloring uses at least two colors; with a single precolor color j the
// apex x_j can also be made happy and the map carries b = 1.
ReductionOutput mhe_to_mhv(const HappyInstance& source);

// Subdivides each edge with x_uv and hangs max_degree - 1 uncolored
// satellites on it; q = max_degree + 1. OPT_Hard = OPT_MHE.
ReductionOutput mhe_to_hardmhv(const HappyInstance& source);

struct SoftParams {
  std::int64_t k;
  std::int64_t h;
};

// Smallest k >= max{4/rho - 3, 2/rho, 3} and the smallest integer h with
// h + 3 >= rho (h + k + 2) and h + 2 < rho (h + k + 2). rho in (0, 1).
SoftParams soft_params(const Rational& rho);

// Soft-threshold gadget over a 3-color MHE source: per edge one x vertex,
// h y vertices and k z vertices (z_i colored i); per original vertex
// max_degree * k w vertices (w_{i,j} colored i). A graph without edges is
// treated as max_degree 1 so that its vertices still get w vertices.
ReductionOutput mhe_to_softmhv(const HappyInstance& source, const Rational& rho);

// Minimum multiway cut by labelling every non-terminal with a terminal.
// Throws BudgetExceeded when t^(n - t) > budget.
std::int64_t brute_force_multiway_cut(const MultiwayCutInstance& instance,
                                      std::uint64_t budget = kDefaultBudget);

struct ReductionVerdict {
  enum class Status { Holds, Fails, Skipped };
  Status status = Status::Skipped;
  std::optional<Rational> source_opt;
  std::optional<Rational> target_opt;
  std::string detail;

  bool holds() const { return status == Status::Holds; }
};

std::string_view to_string(ReductionVerdict::Status status);

// Solves both sides with the brute-force oracles and checks the value map
// exactly. Skipped (with the reason in detail) when either side exceeds the
// budget.
ReductionVerdict verify_reduction(const ReductionOutput& output,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace happy
