#include <iomanip>
#include <map>
#include <ostream>
#include <random>

#include "commands.hpp"
#include "happy/errors.hpp"
#include "happy/generators.hpp"
#include "happy/instance_io.hpp"
#include "happy/mhe.hpp"
#include "happy/mhv.hpp"
#include "happy/reductions.hpp"
#include "happy/variants.hpp"

namespace happy::cli {
namespace {

struct Tally {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  std::optional<Rational> worst_ratio;
  std::string counterexample;
};

class Suite {
 public:
  explicit Suite(std::uint64_t seed) : rng_(seed) {}

  int below(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  std::uint64_t next_seed() { return rng_(); }

  HappyInstance instance(int max_n, int k, int max_weight = 1, int min_n = 1) {
    static constexpr double kReveal[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    const int n = between(min_n, max_n);
    const double p = 0.2 + 0.1 * below(6);
    return gen_random(n, p, k, kReveal[below(5)], next_seed(), max_weight);
  }

  HappinessMode random_mode(const Graph& g) {
    switch (below(3)) {
      case 0: return HappinessMode::strict();
      case 1: {
        static const Rational kRhos[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                         Rational(3, 4)};
        return HappinessMode::soft(kRhos[below(4)]);
      }
      default: return HappinessMode::hard(between(1, std::max(1, g.max_degree())));
    }
  }

  void record(const std::string& property, std::optional<bool> outcome, const std::string& text,
              std::optional<Rational> ratio = std::nullopt) {
    Tally& t = tallies_[property];
    if (!outcome) {
      ++t.skipped;
      return;
    }
    if (*outcome) {
      ++t.pass;
    } else {
      ++t.fail;
      if (t.counterexample.empty()) t.counterexample = text;
    }
    if (ratio && (!t.worst_ratio || *ratio < *t.worst_ratio)) t.worst_ratio = ratio;
  }

  int report(std::ostream& out) const {
    bool ok = true;
    for (const auto& [name, t] : tallies_) {
      out << name << ": pass=" << t.pass << " fail=" << t.fail << " skipped=" << t.skipped;
      if (t.pass + t.fail == 0 && t.skipped > 0) out << " (vacuous)";
      if (t.worst_ratio) {
        out << " worst_ratio=" << format_rational(*t.worst_ratio) << " (" << std::fixed
            << std::setprecision(4) << to_double(*t.worst_ratio) << ")";
        out.unsetf(std::ios::floatfield);
      }
      out << '\n';
      ok = ok && t.fail == 0;
    }
    for (const auto& [name, t] : tallies_) {
      if (!t.counterexample.empty()) {
        out << "counterexample for " << name << ":\n" << t.counterexample;
      }
    }
    out << (ok ? "all properties hold\n" : "property failure\n");
    return ok ? kExitOk : kExitPropertyFailed;
  }

 private:
  std::mt19937_64 rng_;
  std::map<std::string, Tally> tallies_;
};

std::optional<Rational> ratio_of(const Rational& sol, const Rational& opt) {
  if (opt == Rational(0)) return std::nullopt;
  return sol / opt;
}

bool connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexId> stack = {1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

void suite_ratios(Suite& s, const VerifyOptions& opt) {
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int k = s.between(2, 4);
    HappyInstance inst = s.instance(opt.max_n, k);
    inst.mode = s.random_mode(inst.graph);
    const std::string text = write_instance(inst);
    const Graph& g = inst.graph;
    try {
      const Rational opt_v = brute_force_mhv(g, inst.spec, inst.mode).objective;
      const Rational greedy = greedy_mhv(g, inst.spec, inst.mode).objective;
      s.record("greedy >= OPT/k", greedy * Rational(k) >= opt_v, text, ratio_of(greedy, opt_v));
      if (inst.mode.kind() != HappinessMode::Kind::Strict) {
        const Rational best = best_of_variant(g, inst.spec, inst.mode, true).objective;
        s.record("best-of variant >= OPT/k", best * Rational(k) >= opt_v, text,
                 ratio_of(best, opt_v));
      }
      const Rational strict_opt = inst.mode.kind() == HappinessMode::Kind::Strict
                                      ? opt_v
                                      : brute_force_mhv(g, inst.spec).objective;
      const std::int64_t d = g.max_degree();
      std::optional<bool> growth_ok;
      std::optional<Rational> growth_ratio;
      if (d >= 2 && connected(g)) {
        const Rational sol = growth_mhv(g, inst.spec).objective;
        growth_ok = sol * Rational(d * (d - 1) * (d + 1)) >= strict_opt;
        growth_ratio = ratio_of(sol, strict_opt);
      }
      s.record("growth >= OPT/(D(D-1)(D+1))", growth_ok, text, growth_ratio);
    } catch (const BudgetExceeded&) {
      s.record("greedy >= OPT/k", std::nullopt, text);
    }

    HappyInstance weighted = s.instance(opt.max_n, k, 5);
    const std::string wtext = write_instance(weighted);
    const Solution div = division_mhe(weighted.graph, weighted.spec);
    s.record("division >= (W_org + W' + W'')/2",
             div.objective * Rational(2) >= div.division->opt_upper_bound(), wtext);
    try {
      const Rational opt_e = brute_force_mhe(weighted.graph, weighted.spec).objective;
      s.record("division >= OPT/2", div.objective * Rational(2) >= opt_e, wtext,
               ratio_of(div.objective, opt_e));
    } catch (const BudgetExceeded&) {
      s.record("division >= OPT/2", std::nullopt, wtext);
    }
  }
}

void suite_lemmas(Suite& s, const VerifyOptions& opt) {
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int k = s.between(2, 4);
    HappyInstance inst = s.instance(opt.max_n, k);
    const std::string text = write_instance(inst);
    const Graph& g = inst.graph;
    std::optional<std::int64_t> opt_v;
    try {
      opt_v = static_cast<std::int64_t>(boost::rational_cast<std::int64_t>(
          brute_force_mhv(g, inst.spec).objective));
    } catch (const BudgetExceeded&) {
    }
    const GrowthLemmaReport r = check_growth_lemmas(growth_mhv(g, inst.spec), opt_v);
    s.record("L_u^new <= D(D-2) H^new", r.lu_new_total, text);
    s.record("per-step L_u^new caps", r.per_step_caps, text);
    s.record("H^new >= (L^org - L_u^org)/(D(D-1))", r.h_new_lower, text);
    s.record("OPT <= H^org + (D+1)(L^org - L_u^org)", r.opt_upper, text);
    s.record("growth >= OPT/(D(D-1)(D+1))", r.ratio, text);

    HappyInstance variant = inst;
    variant.mode = s.random_mode(g);
    if (variant.mode.kind() == HappinessMode::Kind::Strict) continue;
    const std::string vtext = write_instance(variant);
    std::optional<std::int64_t> vopt;
    try {
      vopt = boost::rational_cast<std::int64_t>(
          brute_force_mhv(g, variant.spec, variant.mode).objective);
    } catch (const BudgetExceeded&) {
    }
    const VariantLemmaReport vr =
        check_variant_lemmas(growth_for_mode(g, variant.spec, variant.mode, true), vopt);
    s.record("variant per-step L_u^new caps", vr.per_step_caps, vtext);
    s.record("variant OPT <= H^org + (D+1)(L^org - L_u^org)", vr.opt_upper, vtext);
  }
}

void suite_exact(Suite& s, const VerifyOptions& opt) {
  for (int trial = 0; trial < opt.trials; ++trial) {
    const HappyInstance inst = s.instance(opt.max_n, 2, trial % 2 == 0 ? 1 : 5);
    const std::string text = write_instance(inst);
    try {
      HappyInstance unit = inst;
      unit.graph = Graph(inst.graph.vertex_count(), [&] {
        auto edges = inst.graph.edges();
        for (Edge& e : edges) e.weight = 1;
        return edges;
      }());
      s.record("exact2 mhv == brute",
               exact_2mhv(unit.graph, unit.spec).objective ==
                   brute_force_mhv(unit.graph, unit.spec).objective,
               write_instance(unit));
      s.record("exact2 mhe == brute",
               exact_2mhe(inst.graph, inst.spec).objective ==
                   brute_force_mhe(inst.graph, inst.spec).objective,
               text);
    } catch (const BudgetExceeded&) {
      s.record("exact2 mhv == brute", std::nullopt, text);
    }
  }
}

HappyInstance trim_edges(HappyInstance inst, std::size_t max_m) {
  if (inst.graph.edge_count() > max_m) {
    auto edges = inst.graph.edges();
    edges.resize(max_m);
    inst.graph = Graph(inst.graph.vertex_count(), std::move(edges));
  }
  return inst;
}

void record_verdict(Suite& s, const std::string& name, const ReductionOutput& r,
                    const std::string& text) {
  const ReductionVerdict v = verify_reduction(r);
  if (v.status == ReductionVerdict::Status::Skipped) {
    s.record(name, std::nullopt, text);
  } else {
    s.record(name, v.holds(), text);
  }
}

void suite_reductions(Suite& s, const VerifyOptions& opt) {
  const int max_n = std::min(opt.max_n, 6);
  for (int trial = 0; trial < opt.trials; ++trial) {
    {
      const HappyInstance base = s.instance(std::max(max_n, 3), 1, 1, 3);
      MultiwayCutInstance mwc{base.graph, {}};
      std::vector<VertexId> ids(base.graph.vertex_count());
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i + 1);
      for (int i = 0; i < 3; ++i) {
        std::swap(ids[i], ids[i + s.below(static_cast<int>(ids.size()) - i)]);
        mwc.terminals.push_back(ids[i]);
      }
      record_verdict(s, "multiway cut -> 3-MHE", multiway_cut_to_3mhe(mwc),
                     write_multiway_cut(mwc));
    }
    // Keep every target small enough for the oracle.
    HappyInstance src = trim_edges(s.instance(max_n, 3), 6);
    if (src.spec.precolored_count() == 0) src.spec.precolor[1] = 1 + s.below(3);
    const std::string text = write_instance(src);
    record_verdict(s, "MHE -> MHV", mhe_to_mhv(src), text);
    HappyInstance anchored = src;
    anchored.spec.precolor[1] = 1;
    record_verdict(s, "3-MHE -> k-MHE", pad_3mhe_to_kmhe(anchored, s.between(3, 5)),
                   write_instance(anchored));

    const HappyInstance hard_src = trim_edges(s.instance(std::min(max_n, 4), 3), 3);
    if (hard_src.graph.max_degree() >= 1) {
      record_verdict(s, "MHE -> HardMHV", mhe_to_hardmhv(hard_src), write_instance(hard_src));
    } else {
      s.record("MHE -> HardMHV", std::nullopt, write_instance(hard_src));
    }

    const bool half = trial % 2 == 1;
    const HappyInstance soft_src =
        trim_edges(s.instance(std::min(max_n, half ? 3 : 4), 3), half ? 2 : 3);
    record_verdict(s, "3-MHE -> SoftMHV",
                   mhe_to_softmhv(soft_src, half ? Rational(1, 2) : Rational(2, 3)),
                   write_instance(soft_src));
  }
}

}  // namespace

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream&) {
  Suite suite(opt.seed);
  if (opt.suite == "ratios") suite_ratios(suite, opt);
  if (opt.suite == "lemmas") suite_lemmas(suite, opt);
  if (opt.suite == "exact") suite_exact(suite, opt);
  if (opt.suite == "reductions") suite_reductions(suite, opt);
  out << "suite " << opt.suite << ", " << opt.trials << " trials, n <= " << opt.max_n << '\n';
  return suite.report(out);
}

}  // namespace happy::cli
