#include "happy/coloring_state.hpp"

#include <algorithm>

#include "happy/errors.hpp"

namespace happy {
namespace {

VertexType colored_type(const HappinessMode& mode, int degree, int same, int uncolored) {
  if (mode.satisfied(same, degree)) return VertexType::H;
  if (!mode.satisfied(same + uncolored, degree)) return VertexType::U;
  return VertexType::P;
}

VertexType uncolored_type(const HappinessMode& mode, int degree, int uncolored,
                          int max_color, bool has_p_neighbor) {
  if (has_p_neighbor) return VertexType::Lp;
  const bool can_become_happy = mode.satisfied(uncolored + max_color, degree);
  const bool has_colored_neighbor = uncolored < degree;
  if (mode.kind() == HappinessMode::Kind::Hard) {
    if (!can_become_happy) return VertexType::Lu;
    return has_colored_neighbor ? VertexType::Lh : VertexType::Lf;
  }
  if (!has_colored_neighbor) return VertexType::Lf;
  return can_become_happy ? VertexType::Lh : VertexType::Lu;
}

}  // namespace

std::string_view to_string(VertexType type) {
  switch (type) {
    case VertexType::H: return "H";
    case VertexType::U: return "U";
    case VertexType::P: return "P";
    case VertexType::Lp: return "Lp";
    case VertexType::Lh: return "Lh";
    case VertexType::Lu: return "Lu";
    case VertexType::Lf: return "Lf";
  }
  return "?";
}

ColoringState::ColoringState(const Graph& graph, const ColorSpec& spec, HappinessMode mode)
    : graph_(&graph), mode_(mode), k_(spec.k) {
  spec.validate(graph);
  const int n = graph.vertex_count();
  color_ = spec.precolor;
  n_uncolored_.assign(n + 1, 0);
  per_color_.assign(static_cast<std::size_t>(n + 1) * k_, 0);
  max_color_.assign(n + 1, 0);
  p_neighbors_.assign(n + 1, 0);
  type_.assign(n + 1, VertexType::Lf);
  stamp_.assign(n + 1, 0);

  for (VertexId v = 1; v <= n; ++v) {
    if (color_[v] == kUncolored) ++uncolored_total_;
    for (VertexId u : graph.neighbors(v)) {
      if (color_[u] == kUncolored) {
        ++n_uncolored_[v];
      } else {
        int& count = per_color_[static_cast<std::size_t>(v) * k_ + (color_[u] - 1)];
        ++count;
        max_color_[v] = std::max(max_color_[v], count);
      }
    }
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (color_[v] != kUncolored) set_type(v, compute_type(v));
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (type_[v] != VertexType::P) continue;
    for (VertexId u : graph.neighbors(v)) ++p_neighbors_[u];
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (color_[v] == kUncolored) set_type(v, compute_type(v));
  }
}

Color ColoringState::majority_color(VertexId v) const {
  if (max_color_[v] == 0) return kUncolored;
  for (Color i = 1; i <= k_; ++i) {
    if (color_count(v, i) == max_color_[v]) return i;
  }
  return kUncolored;
}

int ColoringState::same_neighbors(VertexId v) const {
  return is_colored(v) ? color_count(v, color_[v]) : 0;
}

int ColoringState::diff_neighbors(VertexId v) const {
  return is_colored(v) ? colored_neighbors(v) - same_neighbors(v) : 0;
}

const std::set<VertexId>& ColoringState::tracked(VertexType type) const {
  switch (type) {
    case VertexType::P: return p_set_;
    case VertexType::Lh: return lh_set_;
    case VertexType::Lu: return lu_set_;
    default: throw ContractError("only P, Lh and Lu vertex sets are tracked");
  }
}

std::set<VertexId>* ColoringState::tracked_set(VertexType t) {
  switch (t) {
    case VertexType::P: return &p_set_;
    case VertexType::Lh: return &lh_set_;
    case VertexType::Lu: return &lu_set_;
    default: return nullptr;
  }
}

void ColoringState::set_type(VertexId v, VertexType t) {
  if (auto* old_set = tracked_set(type_[v])) old_set->erase(v);
  type_[v] = t;
  if (auto* new_set = tracked_set(t)) new_set->insert(v);
}

VertexType ColoringState::compute_type(VertexId v) const {
  const int degree = graph_->degree(v);
  if (is_colored(v)) return colored_type(mode_, degree, same_neighbors(v), n_uncolored_[v]);
  return uncolored_type(mode_, degree, n_uncolored_[v], max_color_[v], p_neighbors_[v] > 0);
}

std::vector<VertexId> ColoringState::apply_color(VertexId v, Color i) {
  if (v < 1 || v > graph_->vertex_count()) {
    throw ContractError("vertex " + std::to_string(v) + " does not exist");
  }
  if (is_colored(v)) {
    throw ContractError("vertex " + std::to_string(v) + " is already colored");
  }
  if (i < 1 || i > k_) throw ContractError("color " + std::to_string(i) + " outside 1..k");

  color_[v] = i;
  --uncolored_total_;
  for (VertexId u : graph_->neighbors(v)) {
    --n_uncolored_[u];
    int& count = per_color_[static_cast<std::size_t>(u) * k_ + (i - 1)];
    ++count;
    max_color_[u] = std::max(max_color_[u], count);
  }

  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  std::vector<VertexId> changed;
  std::vector<VertexId> dirty;
  auto mark = [&](VertexId x) {
    if (stamp_[x] != epoch_) {
      stamp_[x] = epoch_;
      dirty.push_back(x);
    }
  };

  // Colored tags depend only on the vertex's own counters, so they settle
  // first; a change in P-membership then dirties the neighbours.
  auto refresh_colored = [&](VertexId x) {
    const VertexType before = type_[x];
    const VertexType after = compute_type(x);
    if (before == after) return;
    set_type(x, after);
    changed.push_back(x);
    const bool was_p = before == VertexType::P;
    const bool is_p = after == VertexType::P;
    if (was_p == is_p) return;
    for (VertexId y : graph_->neighbors(x)) {
      p_neighbors_[y] += is_p ? 1 : -1;
      mark(y);
    }
  };
  refresh_colored(v);
  for (VertexId u : graph_->neighbors(v)) {
    if (is_colored(u)) refresh_colored(u);
  }
  for (VertexId u : graph_->neighbors(v)) mark(u);

  for (VertexId x : dirty) {
    if (is_colored(x)) continue;
    const VertexType after = compute_type(x);
    if (after != type_[x]) {
      set_type(x, after);
      changed.push_back(x);
    }
  }
  return changed;
}

std::vector<int> ColoringState::type_histogram() const {
  std::vector<int> histogram(7, 0);
  for (VertexId v = 1; v <= graph_->vertex_count(); ++v) {
    ++histogram[static_cast<std::size_t>(type_[v])];
  }
  return histogram;
}

bool ColoringState::counters_consistent() const {
  const int n = graph_->vertex_count();
  int uncolored_total = 0;
  for (VertexId v = 1; v <= n; ++v) {
    if (!is_colored(v)) ++uncolored_total;
    int uncolored = 0;
    int p_count = 0;
    std::vector<int> counts(k_ + 1, 0);
    for (VertexId u : graph_->neighbors(v)) {
      if (!is_colored(u)) {
        ++uncolored;
      } else {
        ++counts[color_[u]];
      }
      if (type_[u] == VertexType::P) ++p_count;
    }
    if (uncolored != n_uncolored_[v] || p_count != p_neighbors_[v]) return false;
    int max_count = 0;
    int colored_sum = 0;
    for (Color i = 1; i <= k_; ++i) {
      if (counts[i] != color_count(v, i)) return false;
      max_count = std::max(max_count, counts[i]);
      colored_sum += counts[i];
    }
    if (max_count != max_color_[v]) return false;
    if (is_colored(v) &&
        same_neighbors(v) + diff_neighbors(v) + uncolored != graph_->degree(v)) {
      return false;
    }
    if (colored_sum + uncolored != graph_->degree(v)) return false;
    const auto* set = [&]() -> const std::set<VertexId>* {
      switch (type_[v]) {
        case VertexType::P: return &p_set_;
        case VertexType::Lh: return &lh_set_;
        case VertexType::Lu: return &lu_set_;
        default: return nullptr;
      }
    }();
    if (set != nullptr && !set->contains(v)) return false;
  }
  const std::size_t tracked_total = p_set_.size() + lh_set_.size() + lu_set_.size();
  auto histogram = type_histogram();
  const std::size_t expected = static_cast<std::size_t>(
      histogram[static_cast<int>(VertexType::P)] + histogram[static_cast<int>(VertexType::Lh)] +
      histogram[static_cast<int>(VertexType::Lu)]);
  return uncolored_total == uncolored_total_ && tracked_total == expected;
}

VertexType classify_vertex(const Graph& graph, const Coloring& coloring, int k,
                           const HappinessMode& mode, VertexId v) {
  auto colored_type_of = [&](VertexId x) {
    int same = 0;
    int uncolored = 0;
    for (VertexId u : graph.neighbors(x)) {
      if (coloring[u] == kUncolored) {
        ++uncolored;
      } else if (coloring[u] == coloring[x]) {
        ++same;
      }
    }
    return colored_type(mode, graph.degree(x), same, uncolored);
  };

  if (coloring[v] != kUncolored) return colored_type_of(v);

  std::vector<int> counts(k + 1, 0);
  int uncolored = 0;
  bool has_p_neighbor = false;
  for (VertexId u : graph.neighbors(v)) {
    if (coloring[u] == kUncolored) {
      ++uncolored;
      continue;
    }
    ++counts[coloring[u]];
    if (colored_type_of(u) == VertexType::P) has_p_neighbor = true;
  }
  const int max_color = *std::max_element(counts.begin(), counts.end());
  return uncolored_type(mode, graph.degree(v), uncolored, max_color, has_p_neighbor);
}

VertexType classify_vertex(const ColoringState& state, VertexId v) {
  return classify_vertex(state.graph(), state.coloring(), state.k(), state.mode(), v);
}

}  // namespace happy
