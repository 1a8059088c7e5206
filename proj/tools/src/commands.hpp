#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "happy/graph.hpp"
#include "happy/mhv.hpp"
#include "happy/solution.hpp"

namespace happy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefused = 2;
inline constexpr int kExitPropertyFailed = 3;

struct SolveOptions {
  std::string problem = "mhv";
  std::string algo = "best";
  std::vector<std::string> mode;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultBudget;
  bool emit_coloring = false;
  bool force = false;
  std::string file;
};

struct VerifyOptions {
  std::string suite;
  int max_n = 8;
  int trials = 200;
  std::uint64_t seed = 1;
};

struct ReduceOptions {
  std::string from;
  std::string to;
  int k = 3;
  std::string rho = "1/2";
  bool verify = false;
  std::uint64_t budget = kDefaultBudget;
  std::string input;
  std::string output;
};

struct GenerateOptions {
  std::string gen = "random";
  int n = 10;
  double p = 0.3;
  std::optional<std::int64_t> m;
  int k = 3;
  double reveal = 0.3;
  double p_in = 0.5;
  double p_out = 0.05;
  int max_weight = 1;
  std::uint64_t seed = 1;
  std::string output;
};

struct BenchOptions {
  std::string problem = "mhv";
  std::string algos = "greedy,growth";
  std::string gen = "random";
  std::string params;
  std::vector<std::string> mode;
  int trials = 10;
  std::uint64_t seed = 1;
  std::uint64_t oracle_budget = 200'000;
};

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_reduce(const ReduceOptions& options, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

// Shared helpers.
Solution run_algorithm(const std::string& problem, const std::string& algo,
                       const HappyInstance& instance, bool force, std::uint64_t budget);
HappinessMode parse_mode_tokens(const std::vector<std::string>& tokens);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
std::string format_coloring(const Coloring& coloring);

}  // namespace happy::cli
