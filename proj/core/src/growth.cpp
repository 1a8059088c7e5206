#include <algorithm>
#include <stdexcept>
#include <string>

#include "happy/coloring_state.hpp"
#include "happy/errors.hpp"
#include "happy/mhv.hpp"
#include "happy/variants.hpp"

namespace happy {
namespace {

class GrowthRun {
 public:
  GrowthRun(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode)
      : graph_(graph), spec_(spec), state_(graph, spec, mode), ever_lu_(graph.vertex_count() + 1, 0) {
    const auto histogram = state_.type_histogram();
    ledger_.max_degree = graph.max_degree();
    ledger_.h_org = histogram[static_cast<int>(VertexType::H)];
    ledger_.lp_org = histogram[static_cast<int>(VertexType::Lp)];
    ledger_.lu_org = histogram[static_cast<int>(VertexType::Lu)];
    ledger_.l_org = state_.uncolored_total();
    for (VertexId v : state_.tracked(VertexType::Lu)) ever_lu_[v] = 1;
  }

  Solution run(std::string algorithm) {
    fill_uncolored_components();
    while (state_.uncolored_total() > 0) {
      if (const auto& p = state_.tracked(VertexType::P); !p.empty()) {
        process_p(*p.begin());
      } else if (const auto& lh = state_.tracked(VertexType::Lh); !lh.empty()) {
        process_lh(*lh.begin());
      } else if (const auto& lu = state_.tracked(VertexType::Lu); !lu.empty()) {
        process_lu(*lu.begin());
      } else {
        throw std::logic_error("growth: uncolored vertices remain but none is P, Lh or Lu");
      }
    }

    Solution out;
    out.coloring = state_.coloring();
    out.mode = state_.mode();
    out.problem = vertex_problem(out.mode);
    out.algorithm = std::move(algorithm);
    const std::int64_t happy = state_.type_histogram()[static_cast<int>(VertexType::H)];
    out.objective = Rational(happy);
    ledger_.h_new = happy - ledger_.h_org;
    out.growth = std::move(ledger_);
    revalidate(graph_, spec_, out);
    return out;
  }

 private:
  // Components with no precolored vertex become monochromatic in color 1.
  void fill_uncolored_components() {
    const int n = graph_.vertex_count();
    std::vector<char> seen(n + 1, 0);
    std::vector<VertexId> component;
    for (VertexId root = 1; root <= n; ++root) {
      if (seen[root]) continue;
      component.clear();
      component.push_back(root);
      seen[root] = 1;
      bool precolored = false;
      for (std::size_t i = 0; i < component.size(); ++i) {
        const VertexId x = component[i];
        precolored = precolored || spec_.is_precolored(x);
        for (VertexId y : graph_.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = 1;
            component.push_back(y);
          }
        }
      }
      if (precolored) continue;
      std::sort(component.begin(), component.end());
      begin_step();
      for (VertexId x : component) color(x, 1);
      ledger_.fill_vertices += static_cast<int>(component.size());
      end_step(StepKind::Fill, root, 1);
    }
  }

  void process_p(VertexId v) {
    const Color i = state_.color(v);
    const std::int64_t deficit =
        state_.mode().required(graph_.degree(v)) - state_.same_neighbors(v);
    const auto targets = uncolored_neighbors(v, deficit);
    if (targets.empty() || static_cast<std::int64_t>(targets.size()) < deficit) {
      throw std::logic_error("growth: P vertex " + std::to_string(v) + " cannot be completed");
    }
    begin_step();
    for (VertexId u : targets) color(u, i);
    end_step(StepKind::P, v, i);
  }

  void process_lh(VertexId v) {
    const Color i = state_.majority_color(v);
    const std::int64_t deficit =
        state_.mode().required(graph_.degree(v)) - state_.color_count(v, i);
    const auto targets = uncolored_neighbors(v, std::max<std::int64_t>(deficit, 0));
    begin_step();
    color(v, i);
    for (VertexId u : targets) color(u, i);
    end_step(StepKind::Lh, v, i);
  }

  void process_lu(VertexId v) {
    Color i = 1;
    for (VertexId u : graph_.neighbors(v)) {
      if (state_.is_colored(u)) {
        i = state_.color(u);
        break;
      }
    }
    begin_step();
    color(v, i);
    end_step(StepKind::Lu, v, i);
  }

  std::vector<VertexId> uncolored_neighbors(VertexId v, std::int64_t limit) const {
    std::vector<VertexId> out;
    for (VertexId u : graph_.neighbors(v)) {
      if (static_cast<std::int64_t>(out.size()) >= limit) break;
      if (!state_.is_colored(u)) out.push_back(u);
    }
    return out;
  }

  void begin_step() {
    touched_.clear();
    colored_in_step_ = 0;
  }

  void color(VertexId v, Color i) {
    auto changed = state_.apply_color(v, i);
    touched_.insert(touched_.end(), changed.begin(), changed.end());
    ++colored_in_step_;
  }

  void end_step(StepKind kind, VertexId v, Color i) {
    int new_lu = 0;
    for (VertexId x : touched_) {
      if (state_.type(x) == VertexType::Lu && !ever_lu_[x]) {
        ever_lu_[x] = 1;
        ++new_lu;
      }
    }
    ledger_.lu_new += new_lu;
    switch (kind) {
      case StepKind::P:
        ++ledger_.p_steps;
        ledger_.max_new_lu_p_step = std::max(ledger_.max_new_lu_p_step, new_lu);
        break;
      case StepKind::Lh:
        ++ledger_.lh_steps;
        ledger_.max_new_lu_lh_step = std::max(ledger_.max_new_lu_lh_step, new_lu);
        break;
      case StepKind::Lu:
        ++ledger_.lu_steps;
        ledger_.max_new_lu_lu_step = std::max(ledger_.max_new_lu_lu_step, new_lu);
        break;
      case StepKind::Fill:
        break;
    }
    ledger_.steps.push_back({kind, v, i, colored_in_step_, new_lu});
  }

  const Graph& graph_;
  const ColorSpec& spec_;
  ColoringState state_;
  GrowthLedger ledger_;
  std::vector<char> ever_lu_;
  std::vector<VertexId> touched_;
  int colored_in_step_ = 0;
};

}  // namespace

Solution growth_mhv(const Graph& graph, const ColorSpec& spec) {
  spec.validate(graph);
  return GrowthRun(graph, spec, HappinessMode::strict()).run("growth");
}

Solution growth_soft_mhv(const Graph& graph, const ColorSpec& spec, const Rational& rho) {
  spec.validate(graph);
  const HappinessMode mode = HappinessMode::soft(rho);
  return GrowthRun(graph, spec, mode).run(mode.kind() == HappinessMode::Kind::Strict
                                              ? "growth"
                                              : "growth-soft");
}

Solution growth_hard_mhv(const Graph& graph, const ColorSpec& spec, int q, bool force) {
  spec.validate(graph);
  const HappinessMode mode = HappinessMode::hard(q);
  if (!force) mode.validate(graph);
  return GrowthRun(graph, spec, mode).run("growth-hard");
}

Solution growth_for_mode(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode,
                         bool force) {
  switch (mode.kind()) {
    case HappinessMode::Kind::Strict: return growth_mhv(graph, spec);
    case HappinessMode::Kind::Soft: return growth_soft_mhv(graph, spec, mode.rho());
    case HappinessMode::Kind::Hard: return growth_hard_mhv(graph, spec, mode.q(), force);
  }
  return growth_mhv(graph, spec);
}

Solution greedy_variant(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode) {
  return greedy_mhv(graph, spec, mode);
}

Solution best_of_variant(const Graph& graph, const ColorSpec& spec, const HappinessMode& mode,
                         bool force) {
  Solution greedy = greedy_variant(graph, spec, mode);
  Solution growth = growth_for_mode(graph, spec, mode, force);
  Solution& best = growth.objective > greedy.objective ? growth : greedy;
  best.algorithm = "best:" + best.algorithm;
  return std::move(best);
}

bool VariantLemmaReport::all_hold() const {
  return per_step_caps.value_or(true) && opt_upper.value_or(true);
}

VariantLemmaReport check_variant_lemmas(const Solution& growth, std::optional<std::int64_t> opt) {
  if (!growth.growth) throw ContractError("solution carries no growth ledger");
  const GrowthLedger& g = *growth.growth;
  const std::int64_t d = g.max_degree;
  VariantLemmaReport report;
  if (opt) report.opt_upper = *opt <= g.opt_upper_bound();
  if (d > 0 && g.h_new > 0) report.measured_constant = Rational(g.lu_new, d * d * g.h_new);
  std::int64_t t = d;
  switch (growth.mode.kind()) {
    case HappinessMode::Kind::Soft: t = ceil(growth.mode.rho() * Rational(d)); break;
    case HappinessMode::Kind::Hard: t = growth.mode.q(); break;
    case HappinessMode::Kind::Strict: break;
  }
  if (d >= 1) {
    report.per_step_caps = g.max_new_lu_p_step <= t * (d - 1) + d &&
                           g.max_new_lu_lh_step <= (t - 1) * (d - 1) + d &&
                           g.max_new_lu_lu_step == 0;
  }
  return report;
}

}  // namespace happy
