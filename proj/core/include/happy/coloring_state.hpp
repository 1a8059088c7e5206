#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

// Live classification used by the growth algorithms.
//   H  colored and happy
//   U  colored and destined to stay unhappy
//   P  colored, not yet happy, still completable
//   Lp uncolored, adjacent to a P vertex
//   Lh uncolored, no P neighbour, adjacent to a colored vertex, can become happy
//   Lu uncolored, no P neighbour, destined to stay unhappy
//   Lf uncolored, no colored neighbour
// In hard mode Lu also covers uncolored vertices without colored neighbours
// whose degree is below q, and Lf requires that the vertex can become happy.
enum class VertexType : std::uint8_t { H, U, P, Lp, Lh, Lu, Lf };

std::string_view to_string(VertexType type);
inline bool is_colored_type(VertexType t) {
  return t == VertexType::H || t == VertexType::U || t == VertexType::P;
}

// Mutable overlay of a partial coloring with per-vertex neighbour counters
// and incrementally maintained type tags. The graph must outlive the state.
class ColoringState {
 public:
  ColoringState(const Graph& graph, const ColorSpec& spec, HappinessMode mode);

  const Graph& graph() const { return *graph_; }
  const HappinessMode& mode() const { return mode_; }
  int k() const { return k_; }

  Color color(VertexId v) const { return color_[v]; }
  bool is_colored(VertexId v) const { return color_[v] != kUncolored; }
  const Coloring& coloring() const { return color_; }
  int uncolored_total() const { return uncolored_total_; }

  VertexType type(VertexId v) const { return type_[v]; }

  int uncolored_neighbors(VertexId v) const { return n_uncolored_[v]; }
  int colored_neighbors(VertexId v) const { return graph_->degree(v) - n_uncolored_[v]; }
  // |N_i(v)|
  int color_count(VertexId v, Color i) const {
    return per_color_[static_cast<std::size_t>(v) * k_ + (i - 1)];
  }
  int max_color_count(VertexId v) const { return max_color_[v]; }
  // Smallest color attaining max_color_count; kUncolored if v has no colored neighbour.
  Color majority_color(VertexId v) const;
  // |N^s(v)| and |N^d(v)|; both zero while v is uncolored.
  int same_neighbors(VertexId v) const;
  int diff_neighbors(VertexId v) const;
  int p_neighbors(VertexId v) const { return p_neighbors_[v]; }

  // Ordered by vertex id. Only P, Lh and Lu are tracked.
  const std::set<VertexId>& tracked(VertexType type) const;

  // Colors an uncolored vertex and refreshes the tags of v, N(v) and N^2(v).
  // Returns the vertices whose tag changed (v included), without duplicates.
  // Throws ContractError if v is already colored or i is outside 1..k.
  std::vector<VertexId> apply_color(VertexId v, Color i);

  // Number of vertices currently carrying each tag, indexed by VertexType.
  std::vector<int> type_histogram() const;

  // Recomputes every counter from the coloring and compares; test support.
  bool counters_consistent() const;

 private:
  VertexType compute_type(VertexId v) const;
  void set_type(VertexId v, VertexType t);
  std::set<VertexId>* tracked_set(VertexType t);

  const Graph* graph_;
  HappinessMode mode_;
  int k_;
  Coloring color_;
  std::vector<int> n_uncolored_;
  std::vector<int> per_color_;
  std::vector<int> max_color_;
  std::vector<int> p_neighbors_;
  std::vector<VertexType> type_;
  std::set<VertexId> p_set_;
  std::set<VertexId> lh_set_;
  std::set<VertexId> lu_set_;
  int uncolored_total_ = 0;

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// Classifies v directly from the state's colors, ignoring its cached counters
// and tags. This is the reference the incremental tags are audited against.
VertexType classify_vertex(const ColoringState& state, VertexId v);

// Same classification over a bare partial coloring.
VertexType classify_vertex(const Graph& graph, const Coloring& coloring, int k,
                           const HappinessMode& mode, VertexId v);

}  // namespace happy
