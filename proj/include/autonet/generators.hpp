#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "autonet/network.hpp"
#include "autonet/reductions.hpp"
#include "autonet/schedule.hpp"

namespace autonet::gen {

using Rng = std::mt19937_64;

/// Independent stream for instance `index` of a run seeded with `seed`.
Rng stream(std::uint64_t seed, std::uint64_t index);

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

/// G(n, p) random graph.
Graph random_graph(Rng& rng, std::size_t n, double edge_probability);

Configuration random_config(Rng& rng, std::size_t n, double density = 0.5);

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n);

/// Ordered partition of V into random nonempty blocks (|w| = n).
UpdateSchedule random_block_schedule(Rng& rng, std::size_t n);

/// Covering word that may revisit vertices, so |w| >= n.
UpdateSchedule random_word_schedule(Rng& rng, std::size_t n, std::size_t extra_blocks);

std::vector<RuleKind> random_and_or_rules(Rng& rng, std::size_t n);

/// Circuit over inputs x0..x{k-1} with gates g0..g{m-1}; output is the last gate.
MonotoneCircuit random_circuit(Rng& rng, std::size_t inputs, std::size_t gates);

}  // namespace autonet::gen
