#include "happy/generators.hpp"

#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "happy/errors.hpp"

namespace happy {
namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

void check_common(int n, int k, double reveal, int max_weight) {
  if (n < 0) throw ContractError("n must be nonnegative");
  if (k < 1) throw ContractError("k must be at least 1");
  if (!(reveal >= 0.0 && reveal <= 1.0)) throw ContractError("reveal fraction must lie in [0, 1]");
  if (max_weight < 1) throw ContractError("max weight must be at least 1");
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError(std::string(name) + " must lie in [0, 1]");
}

ColorSpec reveal_uniform(int n, int k, double reveal, Draw& draw) {
  ColorSpec spec = ColorSpec::uncolored(n, k);
  for (VertexId v = 1; v <= n; ++v) {
    if (draw.unit() < reveal) spec.precolor[v] = draw.between(1, k);
  }
  return spec;
}

Rational weight(int max_weight, Draw& draw) {
  return Rational(max_weight == 1 ? 1 : draw.between(1, max_weight));
}

}  // namespace

HappyInstance gen_random(int n, double edge_probability, int k, double reveal_fraction,
                         std::uint64_t seed, int max_weight) {
  check_common(n, k, reveal_fraction, max_weight);
  check_probability(edge_probability, "edge probability");
  Draw draw(seed);
  std::vector<Edge> edges;
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (edge_probability > 0.0) {
    // Geometric skipping over the pair index 0 .. pairs - 1, row by row.
    const double log_q = std::log1p(-edge_probability);
    std::int64_t index = -1;
    VertexId u = 1;
    std::int64_t row_start = 0;  // index of pair (u, u + 1)
    while (true) {
      if (edge_probability >= 1.0) {
        ++index;
      } else {
        const double skip = std::floor(std::log1p(-draw.unit()) / log_q);
        if (skip >= static_cast<double>(pairs - index)) break;
        index += 1 + static_cast<std::int64_t>(skip);
      }
      if (index >= pairs) break;
      while (index >= row_start + (n - u)) {
        row_start += n - u;
        ++u;
      }
      const VertexId v = u + 1 + static_cast<VertexId>(index - row_start);
      edges.push_back({u, v, weight(max_weight, draw)});
    }
  }
  ColorSpec spec = reveal_uniform(n, k, reveal_fraction, draw);
  return {Graph(n, std::move(edges)), std::move(spec), HappinessMode::strict()};
}

HappyInstance gen_random_exact_m(int n, std::int64_t m, int k, double reveal_fraction,
                                 std::uint64_t seed, int max_weight) {
  check_common(n, k, reveal_fraction, max_weight);
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) throw ContractError("edge count out of range for n");
  Draw draw(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  if (m * 2 > pairs) {
    // Dense: keep each pair with the exact conditional probability.
    std::int64_t needed = m;
    std::int64_t left = pairs;
    for (VertexId u = 1; u <= n && needed > 0; ++u) {
      for (VertexId v = u + 1; v <= n && needed > 0; ++v, --left) {
        if (draw.below(static_cast<std::uint64_t>(left)) < static_cast<std::uint64_t>(needed)) {
          edges.push_back({u, v, weight(max_weight, draw)});
          --needed;
        }
      }
    }
  } else {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    while (static_cast<std::int64_t>(edges.size()) < m) {
      VertexId u = draw.between(1, n);
      VertexId v = draw.between(1, n);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      const std::uint64_t key = static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v);
      if (!chosen.insert(key).second) continue;
      edges.push_back({u, v, weight(max_weight, draw)});
    }
  }
  ColorSpec spec = reveal_uniform(n, k, reveal_fraction, draw);
  return {Graph(n, std::move(edges)), std::move(spec), HappinessMode::strict()};
}

HappyInstance gen_planted(int n, int k, double p_in, double p_out, double reveal_fraction,
                          std::uint64_t seed) {
  check_common(n, k, reveal_fraction, 1);
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");
  if (p_in < p_out) throw ContractError("planted generator needs p_in >= p_out");
  Draw draw(seed);
  auto group = [k](VertexId v) { return (v - 1) % k + 1; };
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      const double p = group(u) == group(v) ? p_in : p_out;
      if (draw.unit() < p) edges.push_back({u, v, Rational(1)});
    }
  }
  ColorSpec spec = ColorSpec::uncolored(n, k);
  for (VertexId v = 1; v <= n; ++v) {
    if (draw.unit() < reveal_fraction) spec.precolor[v] = group(v);
  }
  return {Graph(n, std::move(edges)), std::move(spec), HappinessMode::strict()};
}

}  // namespace happy
