#include "autonet/generators.hpp"

#include <algorithm>
#include <string>

namespace autonet::gen {

Rng stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Graph random_graph(Rng& rng, std::size_t n, double edge_probability) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, edge_probability)) edges.emplace_back(u, v);
    }
  }
  return validate_graph(n, edges);
}

Configuration random_config(Rng& rng, std::size_t n, double density) {
  Configuration c(n);
  for (std::size_t i = 0; i < n; ++i) c.set(i, coin(rng, density));
  return c;
}

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

UpdateSchedule random_block_schedule(Rng& rng, std::size_t n) {
  const auto order = random_permutation(rng, n);
  std::vector<Block> blocks;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t len = uniform(rng, 1, n - i);
    blocks.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i),
                        order.begin() + static_cast<std::ptrdiff_t>(i + len));
    i += len;
  }
  return validate_schedule(n, std::move(blocks));
}

UpdateSchedule random_word_schedule(Rng& rng, std::size_t n, std::size_t extra_blocks) {
  std::vector<Block> blocks = random_block_schedule(rng, n).blocks();
  for (std::size_t e = 0; e < extra_blocks; ++e) {
    auto order = random_permutation(rng, n);
    order.resize(uniform(rng, 1, n));
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, blocks.size())), std::move(order));
  }
  return validate_schedule(n, std::move(blocks));
}

std::vector<RuleKind> random_and_or_rules(Rng& rng, std::size_t n) {
  std::vector<RuleKind> rules(n);
  for (auto& r : rules) r = coin(rng) ? RuleKind::And : RuleKind::Or;
  return rules;
}

MonotoneCircuit random_circuit(Rng& rng, std::size_t inputs, std::size_t gates) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < inputs; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Gate> gate_list;
  std::vector<std::string> signals = names;
  for (std::size_t g = 0; g < gates; ++g) {
    Gate gate{"g" + std::to_string(g), coin(rng) ? GateKind::And2 : GateKind::Or2,
              signals[uniform(rng, 0, signals.size() - 1)], signals[uniform(rng, 0, signals.size() - 1)]};
    signals.push_back(gate.name);
    gate_list.push_back(std::move(gate));
  }
  std::string output = signals.back();
  return MonotoneCircuit(std::move(names), std::move(gate_list), std::move(output));
}

}  // namespace autonet::gen
