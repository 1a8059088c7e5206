#include <ostream>
#include <random>

#include "commands.hpp"
#include "happy/errors.hpp"
#include "happy/instance_io.hpp"
#include "happy/mhe.hpp"
#include "happy/mhv.hpp"
#include "happy/variants.hpp"

namespace happy::cli {
namespace {

// perm[v] is the new id of vertex v.
std::vector<VertexId> seeded_permutation(int n, std::uint64_t seed) {
  std::vector<VertexId> perm(n + 1);
  for (VertexId v = 0; v <= n; ++v) perm[v] = v;
  std::mt19937_64 engine(seed);
  for (VertexId i = n; i > 1; --i) {
    const VertexId j = 1 + static_cast<VertexId>(engine() % static_cast<std::uint64_t>(i));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

HappyInstance relabel(const HappyInstance& in, const std::vector<VertexId>& perm) {
  const int n = in.graph.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(in.graph.edge_count());
  for (const Edge& e : in.graph.edges()) edges.push_back({perm[e.u], perm[e.v], e.weight});
  ColorSpec spec = ColorSpec::uncolored(n, in.spec.k);
  for (VertexId v = 1; v <= n; ++v) spec.precolor[perm[v]] = in.spec.precolor[v];
  return {Graph(n, std::move(edges)), std::move(spec), in.mode};
}

Solution solve_mhv(const std::string& algo, const HappyInstance& inst, bool force,
                   std::uint64_t budget) {
  const Graph& g = inst.graph;
  const ColorSpec& spec = inst.spec;
  const HappinessMode& mode = inst.mode;
  const bool strict = mode.kind() == HappinessMode::Kind::Strict;
  if (algo == "greedy") return greedy_mhv(g, spec, mode);
  if (algo == "growth") return growth_for_mode(g, spec, mode, force);
  if (algo == "brute") return brute_force_mhv(g, spec, mode, budget);
  if (algo == "exact2") {
    if (!strict) throw ContractError("exact2 supports strict mode only");
    return exact_2mhv(g, spec);
  }
  if (algo == "division") throw ContractError("division applies to --problem mhe");

  std::vector<Solution> candidates;
  candidates.push_back(greedy_mhv(g, spec, mode));
  candidates.push_back(growth_for_mode(g, spec, mode, force));
  if (spec.k == 2 && strict) candidates.push_back(exact_2mhv(g, spec));
  if (enumeration_count(spec) <= budget) {
    candidates.push_back(brute_force_mhv(g, spec, mode, budget));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].objective > candidates[best].objective) best = i;
  }
  Solution out = std::move(candidates[best]);
  out.algorithm = "best:" + out.algorithm;
  return out;
}

Solution solve_mhe(const std::string& algo, const HappyInstance& inst, std::uint64_t budget) {
  const Graph& g = inst.graph;
  const ColorSpec& spec = inst.spec;
  if (algo == "division") return division_mhe(g, spec);
  if (algo == "exact2") return exact_2mhe(g, spec);
  if (algo == "brute") return brute_force_mhe(g, spec, budget);
  if (algo != "best") throw ContractError(algo + " applies to --problem mhv");

  std::vector<Solution> candidates;
  candidates.push_back(division_mhe(g, spec));
  if (spec.k == 2) candidates.push_back(exact_2mhe(g, spec));
  if (enumeration_count(spec) <= budget) candidates.push_back(brute_force_mhe(g, spec, budget));
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].objective > candidates[best].objective) best = i;
  }
  Solution out = std::move(candidates[best]);
  out.algorithm = "best:" + out.algorithm;
  return out;
}

void print_counters(const Solution& sol, std::ostream& out) {
  if (sol.growth) {
    const GrowthLedger& g = *sol.growth;
    out << "counters: H_org=" << g.h_org << " H_new=" << g.h_new << " L_org=" << g.l_org
        << " L_u_org=" << g.lu_org << " L_u_new=" << g.lu_new << " P_steps=" << g.p_steps
        << " Lh_steps=" << g.lh_steps << " Lu_steps=" << g.lu_steps << '\n';
    out << "upper_bound: " << g.opt_upper_bound() << '\n';
  }
  if (sol.division) {
    const DivisionLedger& d = *sol.division;
    out << "counters: W_org=" << format_rational(d.w_org) << " W_prime=" << format_rational(d.w_prime)
        << " W_double_prime=" << format_rational(d.w_double_prime)
        << " SOL1=" << format_rational(d.sol1) << " SOL2=" << format_rational(d.sol2) << '\n';
    out << "upper_bound: " << format_rational(d.opt_upper_bound()) << '\n';
  }
  if (sol.enumerated) out << "counters: enumerated=" << *sol.enumerated << '\n';
}

}  // namespace

Solution run_algorithm(const std::string& problem, const std::string& algo,
                       const HappyInstance& inst, bool force, std::uint64_t budget) {
  return problem == "mhv" ? solve_mhv(algo, inst, force, budget) : solve_mhe(algo, inst, budget);
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream&) {
  HappyInstance inst = parse_instance(read_file(opt.file));
  if (!opt.mode.empty()) inst.mode = parse_mode_tokens(opt.mode);
  if (opt.problem == "mhe") {
    if (inst.mode.kind() != HappinessMode::Kind::Strict && !opt.mode.empty()) {
      throw ContractError("--mode applies to --problem mhv only");
    }
    inst.mode = HappinessMode::strict();
  }
  inst.spec.validate(inst.graph);
  if (!opt.force) inst.mode.validate(inst.graph);

  const int n = inst.graph.vertex_count();
  std::vector<VertexId> perm;
  if (opt.seed) perm = seeded_permutation(n, *opt.seed);
  HappyInstance relabelled;
  if (opt.seed) relabelled = relabel(inst, perm);
  const HappyInstance& target = opt.seed ? relabelled : inst;

  Solution sol = run_algorithm(opt.problem, opt.algo, target, opt.force, opt.budget);
  if (opt.seed) {
    Coloring original(n + 1, kUncolored);
    for (VertexId v = 1; v <= n; ++v) original[v] = sol.coloring[perm[v]];
    sol.coloring = std::move(original);
  }
  revalidate(inst.graph, inst.spec, sol);

  out << "problem: " << opt.problem << '\n';
  if (opt.problem == "mhv") out << "mode: " << inst.mode.to_string() << '\n';
  out << "algorithm: " << sol.algorithm << '\n';
  out << "objective: " << format_rational(sol.objective) << '\n';
  print_counters(sol, out);
  if (opt.emit_coloring) out << "coloring: " << format_coloring(sol.coloring) << '\n';
  return kExitOk;
}

}  // namespace happy::cli
