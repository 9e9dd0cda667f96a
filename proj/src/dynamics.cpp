#include "autonet/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace autonet {

namespace {

std::size_t active_neighbors(const Graph& g, const Configuration& config, Vertex v) {
  std::size_t k = 0;
  for (Vertex u : g.neighbors(v)) k += config.test(u) ? 1 : 0;
  return k;
}

/// In-place synchronous block update. `scratch` holds the block's new states
/// until every vertex of the block has been evaluated.
void update_block(const NetworkSpec& network, Configuration& config, std::span<const Vertex> block,
                  std::vector<std::uint8_t>& scratch) {
  const auto& g = network.graph();
  scratch.resize(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    const Vertex v = block[i];
    scratch[i] = static_cast<std::uint8_t>(
        eval_local_rule(network.rule(v), config[v], active_neighbors(g, config, v), g.degree(v)));
  }
  for (std::size_t i = 0; i < block.size(); ++i) config.set(block[i], scratch[i] != 0);
}

void check_block(const NetworkSpec& network, std::span<const Vertex> block) {
  if (block.empty()) throw Error("apply_block: empty block");
  for (Vertex v : block) {
    if (v >= network.size()) throw Error("apply_block: vertex " + std::to_string(v) + " out of range", v);
  }
}

void check_config(const NetworkSpec& network, const Configuration& config) {
  if (config.size() != network.size()) {
    throw Error("configuration has length " + std::to_string(config.size()) + ", network has " +
                std::to_string(network.size()) + " vertices");
  }
}

void check_schedule(const NetworkSpec& network, const UpdateSchedule& schedule) {
  if (schedule.vertex_count() != network.size()) {
    throw Error("schedule covers " + std::to_string(schedule.vertex_count()) + " vertices, network has " +
                std::to_string(network.size()));
  }
}

PerAnswer decide_bootstrap(const PerInstance& instance, Observation observe) {
  const auto& g = instance.network.graph();
  const auto& blocks = instance.schedule.blocks();
  const std::size_t n = g.size();
  Configuration x = instance.initial;
  std::vector<std::size_t> count(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (x.test(v)) {
      for (Vertex u : g.neighbors(v)) ++count[u];
    }
  }
  std::vector<Vertex> fresh;
  for (std::size_t period = 0;; ++period) {
    bool changed = false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      fresh.clear();
      for (Vertex v : blocks[b]) {
        if (!x.test(v) && 2 * count[v] > g.degree(v)) fresh.push_back(v);
      }
      for (Vertex v : fresh) {
        x.set(v);
        for (Vertex u : g.neighbors(v)) ++count[u];
      }
      changed |= !fresh.empty();
      if (observe == Observation::Block && x.test(instance.target)) {
        return {PerStatus::Decided, true, WitnessTime{period, b}};
      }
    }
    if (observe == Observation::Period && x.test(instance.target)) {
      return {PerStatus::Decided, true, WitnessTime{period, blocks.size() - 1}};
    }
    if (!changed) return {PerStatus::Decided, false, std::nullopt};
  }
}

}  // namespace

Configuration apply_block(const NetworkSpec& network, const Configuration& config, std::span<const Vertex> block) {
  check_config(network, config);
  check_block(network, block);
  Configuration out = config;
  std::vector<std::uint8_t> scratch;
  update_block(network, out, block, scratch);
  return out;
}

PeriodResult run_period(const NetworkSpec& network, const UpdateSchedule& schedule, const Configuration& config) {
  check_config(network, config);
  check_schedule(network, schedule);
  PeriodResult result{config, {}};
  std::vector<std::uint8_t> scratch;
  const auto& blocks = schedule.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    std::vector<bool> was(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) was[i] = result.config.test(block[i]);
    update_block(network, result.config, block, scratch);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (!was[i] && result.config.test(block[i])) result.activations.push_back({block[i], b});
    }
  }
  return result;
}

std::uint64_t default_max_periods(std::size_t n) noexcept {
  constexpr std::uint64_t cap = 1'000'000;
  if (n >= 20) return cap;
  return std::min<std::uint64_t>(std::uint64_t{1} << n, cap);
}

OrbitResult orbit(const NetworkSpec& network, const UpdateSchedule& schedule, const Configuration& initial,
                  std::uint64_t max_periods) {
  if (max_periods < 1) throw Error("orbit: max_periods must be at least 1");
  check_config(network, initial);
  check_schedule(network, schedule);

  OrbitResult result;
  auto& states = result.trajectory.boundary_states;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> seen;
  states.push_back(initial);
  seen.emplace(initial, 0);
  for (std::uint64_t t = 1; t <= max_periods; ++t) {
    Configuration next = run_period(network, schedule, states.back()).config;
    auto it = seen.find(next);
    states.push_back(std::move(next));
    if (it != seen.end()) {
      result.trajectory.transient = it->second;
      result.trajectory.period = static_cast<std::size_t>(t) - it->second;
      return result;
    }
    seen.emplace(states.back(), static_cast<std::size_t>(t));
  }
  result.status = OrbitStatus::BoundExceeded;
  return result;
}

void validate_instance(const PerInstance& instance, bool enforce_or_only) {
  check_schedule(instance.network, instance.schedule);
  validate_initial_config(instance.network, instance.initial, enforce_or_only);
  if (instance.target >= instance.network.size()) {
    throw Error("target vertex " + std::to_string(instance.target) + " out of range", instance.target);
  }
  if (instance.initial.test(instance.target)) {
    throw Error("target vertex " + std::to_string(instance.target) + " is initially active", instance.target);
  }
}

PerAnswer decide_per(const PerInstance& instance, const PerOptions& options) {
  validate_instance(instance);
  const auto& net = instance.network;
  if (options.bootstrap_fast_path && net.is_uniform(RuleKind::Bootstrap)) {
    return decide_bootstrap(instance, options.observe);
  }

  const std::uint64_t bound = options.max_periods.value_or(default_max_periods(net.size()));
  const auto& blocks = instance.schedule.blocks();
  const bool bootstrap = net.is_uniform(RuleKind::Bootstrap);
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> seen;
  Configuration x = instance.initial;
  seen.emplace(x, 0);
  std::vector<std::uint8_t> scratch;
  for (std::size_t period = 0;; ++period) {
    // Monotone networks reach a fixed point within n+1 periods, so the bound
    // never applies to them.
    if (!bootstrap && period >= bound) return {PerStatus::BoundExceeded, false, std::nullopt};
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      update_block(net, x, blocks[b], scratch);
      if (options.observe == Observation::Block && x.test(instance.target)) {
        return {PerStatus::Decided, true, WitnessTime{period, b}};
      }
    }
    if (options.observe == Observation::Period && x.test(instance.target)) {
      return {PerStatus::Decided, true, WitnessTime{period, blocks.size() - 1}};
    }
    if (!seen.emplace(x, period + 1).second) return {PerStatus::Decided, false, std::nullopt};
  }
}

std::vector<Vertex> bootstrap_closure(const Graph& graph, std::span<const Vertex> initial_active) {
  const std::size_t n = graph.size();
  std::vector<bool> active(n, false);
  std::vector<std::size_t> count(n, 0);
  std::deque<Vertex> work;
  for (Vertex v : initial_active) {
    if (v >= n) throw Error("bootstrap_closure: vertex " + std::to_string(v) + " out of range", v);
    if (!active[v]) {
      active[v] = true;
      work.push_back(v);
    }
  }
  while (!work.empty()) {
    const Vertex v = work.front();
    work.pop_front();
    for (Vertex u : graph.neighbors(v)) {
      if (active[u]) continue;
      if (2 * ++count[u] > graph.degree(u)) {
        active[u] = true;
        work.push_back(u);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (active[v]) out.push_back(v);
  }
  return out;
}

}  // namespace autonet
