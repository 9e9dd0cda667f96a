#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "autonet/configuration.hpp"
#include "autonet/network.hpp"
#include "autonet/schedule.hpp"

namespace autonet {

/// A 0 -> 1 transition observed inside a period.
struct Activation {
  Vertex vertex;
  std::size_t block;
  friend bool operator==(const Activation&, const Activation&) = default;
};

struct PeriodResult {
  Configuration config;
  std::vector<Activation> activations;
};

/// Updates the vertices of one block synchronously; every read sees `config`.
Configuration apply_block(const NetworkSpec& network, const Configuration& config, std::span<const Vertex> block);

PeriodResult run_period(const NetworkSpec& network, const UpdateSchedule& schedule, const Configuration& config);

/// Boundary configurations x(0..transient+period); the last entry repeats
/// x(transient).
struct Trajectory {
  std::vector<Configuration> boundary_states;
  std::size_t transient = 0;
  std::size_t period = 0;
};

enum class OrbitStatus { Complete, BoundExceeded };

struct OrbitResult {
  OrbitStatus status = OrbitStatus::Complete;
  /// On BoundExceeded, holds x(0..max_periods) with transient/period unset.
  Trajectory trajectory;
};

/// Default cap on simulated periods: min(2^n, 10^6).
std::uint64_t default_max_periods(std::size_t n) noexcept;

OrbitResult orbit(const NetworkSpec& network, const UpdateSchedule& schedule, const Configuration& initial,
                  std::uint64_t max_periods);

struct PerInstance {
  NetworkSpec network;
  UpdateSchedule schedule;
  Configuration initial;
  Vertex target = 0;
};

/// Checks dimensions and that the target starts passive; optionally the
/// OR-only initial activity restriction.
void validate_instance(const PerInstance& instance, bool enforce_or_only = false);

struct WitnessTime {
  std::size_t period;  // zero-based
  std::size_t block;   // index within the period
  friend bool operator==(const WitnessTime&, const WitnessTime&) = default;
};

enum class PerStatus { Decided, BoundExceeded };

struct PerAnswer {
  PerStatus status = PerStatus::Decided;
  bool reachable = false;
  std::optional<WitnessTime> witness;
};

enum class Observation { Block, Period };

struct PerOptions {
  std::optional<std::uint64_t> max_periods;  // default_max_periods(n) when unset
  Observation observe = Observation::Block;
  /// Uniform-Bootstrap networks use incremental neighbour counts; turn off to
  /// force the generic path.
  bool bootstrap_fast_path = true;
};

/// Decides whether the target becomes active at some block boundary (or
/// period boundary). Uniform-Bootstrap networks always terminate within n+1
/// periods regardless of the bound.
PerAnswer decide_per(const PerInstance& instance, const PerOptions& options = {});

/// Least superset of `initial_active` closed under strict-majority activation.
std::vector<Vertex> bootstrap_closure(const Graph& graph, std::span<const Vertex> initial_active);

}  // namespace autonet
