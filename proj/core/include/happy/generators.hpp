#pragma once

#include <cstdint>

#include "happy/graph.hpp"

namespace happy {

// Seeded generators. Draws come straight from a 64-bit Mersenne Twister
// without the standard distributions, so output is identical across standard
// libraries. Every vertex is precolored independently with probability
// reveal_fraction. Edge weights are uniform integers in 1..max_weight.
// The returned mode is strict.

// Erdos-Renyi G(n, p).
HappyInstance gen_random(int n, double edge_probability, int k, double reveal_fraction,
                         std::uint64_t seed, int max_weight = 1);

// Exactly m distinct edges chosen uniformly.
HappyInstance gen_random_exact_m(int n, std::int64_t m, int k, double reveal_fraction,
                                 std::uint64_t seed, int max_weight = 1);

// k balanced groups (vertex v in group (v - 1) mod k + 1). Pairs inside a group
// are joined with probability p_in, across groups with p_out. Revealed
// precolors are the group labels. Requires p_in >= p_out.
HappyInstance gen_planted(int n, int k, double p_in, double p_out, double reveal_fraction,
                          std::uint64_t seed);

}  // namespace happy
