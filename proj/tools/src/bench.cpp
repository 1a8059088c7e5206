#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "happy/errors.hpp"
#include "happy/generators.hpp"
#include "happy/mhe.hpp"
#include "happy/mhv.hpp"
#include "happy/variants.hpp"

namespace happy::cli {
namespace {

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ContractError("--params entry '" + item + "' lacks '='");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  static const char* const kKnown[] = {"n", "p", "m", "k", "reveal", "p_in", "p_out", "w"};
  for (const auto& [key, value] : out) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ContractError("unknown --params key '" + key + "'");
  }
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Bound {
  Rational value;
  std::string kind;
};

Bound upper_bound(const std::string& problem, const HappyInstance& inst, std::uint64_t budget) {
  const Graph& g = inst.graph;
  const bool strict = inst.mode.kind() == HappinessMode::Kind::Strict;
  if (problem == "mhv") {
    if (inst.spec.k == 2 && strict) return {exact_2mhv(g, inst.spec).objective, "exact"};
    if (enumeration_count(inst.spec) <= budget) {
      return {brute_force_mhv(g, inst.spec, inst.mode, budget).objective, "oracle"};
    }
    const Solution growth = growth_for_mode(g, inst.spec, inst.mode, true);
    return {Rational(growth.growth->opt_upper_bound()), "lemma"};
  }
  if (inst.spec.k == 2) return {exact_2mhe(g, inst.spec).objective, "exact"};
  if (enumeration_count(inst.spec) <= budget) {
    return {brute_force_mhe(g, inst.spec, budget).objective, "oracle"};
  }
  return {division_mhe(g, inst.spec).division->opt_upper_bound(), "division"};
}

}  // namespace

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream&) {
  const auto params = parse_params(opt.params);
  auto get = [&](const std::string& key, const std::string& fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  const int n = std::stoi(get("n", "12"));
  const int k = std::stoi(get("k", "3"));
  const double reveal = std::stod(get("reveal", "0.3"));
  const int max_weight = std::stoi(get("w", "1"));
  const std::vector<std::string> algos = split(opt.algos);
  if (algos.empty()) throw ContractError("--algos is empty");
  const HappinessMode mode = parse_mode_tokens(opt.mode);
  if (opt.problem == "mhe" && mode.kind() != HappinessMode::Kind::Strict) {
    throw ContractError("--mode applies to --problem mhv only");
  }

  std::mt19937_64 seeds(opt.seed);
  out << "instance_id,n,m,k,delta,algo,objective,upper_bound,bound_kind,ratio,wall_millis\n";
  for (int trial = 0; trial < opt.trials; ++trial) {
    const std::uint64_t seed = seeds();
    HappyInstance inst;
    if (opt.gen == "planted") {
      inst = gen_planted(n, k, std::stod(get("p_in", "0.5")), std::stod(get("p_out", "0.05")),
                         reveal, seed);
    } else if (params.count("m")) {
      inst = gen_random_exact_m(n, std::stoll(get("m", "0")), k, reveal, seed, max_weight);
    } else {
      inst = gen_random(n, std::stod(get("p", "0.3")), k, reveal, seed, max_weight);
    }
    inst.mode = mode;
    const Bound bound = upper_bound(opt.problem, inst, opt.oracle_budget);
    const std::string id = opt.gen + "-" + std::to_string(trial);
    for (const std::string& algo : algos) {
      const auto start = std::chrono::steady_clock::now();
      Solution sol = run_algorithm(opt.problem, algo, inst, true, opt.oracle_budget);
      const auto stop = std::chrono::steady_clock::now();
      revalidate(inst.graph, inst.spec, sol);
      const double millis = std::chrono::duration<double, std::milli>(stop - start).count();
      const double ratio = bound.value == Rational(0) ? 1.0 : to_double(sol.objective / bound.value);
      char numbers[64];
      std::snprintf(numbers, sizeof numbers, "%.6f,%.3f", ratio, millis);
      out << id << ',' << inst.graph.vertex_count() << ',' << inst.graph.edge_count() << ',' << k
          << ',' << inst.graph.max_degree() << ',' << algo << ','
          << format_rational(sol.objective) << ',' << format_rational(bound.value) << ','
          << bound.kind << ',' << numbers << '\n';
    }
  }
  return kExitOk;
}

}  // namespace happy::cli
