#include "happy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "happy/errors.hpp"

namespace happy {
namespace cli {

HappinessMode parse_mode_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "strict")) {
    return HappinessMode::strict();
  }
  if (tokens.size() == 2 && tokens[0] == "soft") return HappinessMode::soft(parse_rational(tokens[1]));
  if (tokens.size() == 2 && tokens[0] == "hard") {
    std::size_t used = 0;
    const int q = std::stoi(tokens[1], &used);
    if (used != tokens[1].size()) throw ContractError("bad hard threshold '" + tokens[1] + "'");
    return HappinessMode::hard(q);
  }
  throw ContractError("--mode expects 'strict', 'soft <p/q>' or 'hard <q>'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write '" + path + "'");
  out << contents;
}

std::string format_coloring(const Coloring& coloring) {
  std::string text;
  for (std::size_t v = 1; v < coloring.size(); ++v) {
    if (v > 1) text += ' ';
    text += std::to_string(coloring[v]);
  }
  return text;
}

}  // namespace cli

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Happy coloring solvers, verifiers and benchmarks", "happy"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Extend a partial coloring of an instance file");
  solve_cmd->add_option("--problem", solve.problem)->check(CLI::IsMember({"mhv", "mhe"}));
  solve_cmd->add_option("--algo", solve.algo)
      ->check(CLI::IsMember({"greedy", "growth", "division", "exact2", "brute", "best"}));
  solve_cmd->add_option("--mode", solve.mode, "strict | soft <p/q> | hard <q>")->expected(1, 2);
  solve_cmd->add_option("--seed", solve.seed, "Relabel vertices by a seeded permutation");
  solve_cmd->add_option("--budget", solve.budget, "Enumeration budget for brute force");
  solve_cmd->add_flag("--emit-coloring", solve.emit_coloring);
  solve_cmd->add_flag("--force", solve.force, "Run hard mode even when q exceeds the max degree");
  solve_cmd->add_option("file", solve.file)->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check approximation and exactness properties");
  verify_cmd->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember({"ratios", "lemmas", "exact", "reductions"}));
  verify_cmd->add_option("--n", verify.max_n, "Largest instance size")->check(CLI::Range(1, 16));
  verify_cmd->add_option("--trials", verify.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed);

  ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction target and its value map");
  reduce_cmd->add_option("--from", reduce.from)->required()->check(CLI::IsMember({"mwc3", "mhe3"}));
  reduce_cmd->add_option("--to", reduce.to)
      ->required()
      ->check(CLI::IsMember({"mhe3", "mhek", "mhv", "hard", "soft"}));
  reduce_cmd->add_option("--k", reduce.k);
  reduce_cmd->add_option("--rho", reduce.rho);
  reduce_cmd->add_flag("--verify", reduce.verify);
  reduce_cmd->add_option("--budget", reduce.budget);
  reduce_cmd->add_option("-o,--output", reduce.output, "Target file (default: <input>.<to>)");
  reduce_cmd->add_option("input", reduce.input)->required();

  GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random instance");
  generate_cmd->add_option("--gen", generate.gen)->check(CLI::IsMember({"random", "planted"}));
  generate_cmd->add_option("--n", generate.n)->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--p", generate.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--m", generate.m, "Exact edge count (random only)");
  generate_cmd->add_option("--k", generate.k)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--reveal", generate.reveal)->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--p-in", generate.p_in)->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--p-out", generate.p_out)->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--max-weight", generate.max_weight)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", generate.seed);
  generate_cmd->add_option("-o,--output", generate.output);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare algorithms, CSV on stdout");
  bench_cmd->add_option("--problem", bench.problem)->check(CLI::IsMember({"mhv", "mhe"}));
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithm names");
  bench_cmd->add_option("--gen", bench.gen)->check(CLI::IsMember({"random", "planted"}));
  bench_cmd->add_option("--params", bench.params, "key=value list: n,p,m,k,reveal,p_in,p_out,w");
  bench_cmd->add_option("--mode", bench.mode)->expected(1, 2);
  bench_cmd->add_option("--trials", bench.trials)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--oracle-budget", bench.oracle_budget);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    for (const CLI::App* sub : app.get_subcommands()) {
      if (sub->parsed()) err << sub->help() << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (reduce_cmd->parsed()) return cmd_reduce(reduce, out, err);
    if (generate_cmd->parsed()) return cmd_generate(generate, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace happy
