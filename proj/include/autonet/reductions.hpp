#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "autonet/dynamics.hpp"
#include "autonet/network.hpp"

namespace autonet {

enum class GateKind { And2, Or2 };

struct Gate {
  std::string name;
  GateKind kind;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Acyclic netlist of fan-in-2 monotone gates. Operands must name an input or
/// an earlier gate, which makes the gate list a topological order.
class MonotoneCircuit {
 public:
  MonotoneCircuit() = default;
  MonotoneCircuit(std::vector<std::string> inputs, std::vector<Gate> gates, std::string output);

  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::string& output() const noexcept { return output_; }

  /// Signals are numbered inputs first, then gates in list order.
  std::size_t signal_count() const noexcept { return inputs_.size() + gates_.size(); }
  std::size_t signal_index(const std::string& name) const;
  std::size_t lhs_index(std::size_t gate) const { return operands_[gate].first; }
  std::size_t rhs_index(std::size_t gate) const { return operands_[gate].second; }
  std::size_t output_index() const { return signal_index(output_); }

  friend bool operator==(const MonotoneCircuit& a, const MonotoneCircuit& b) {
    return a.inputs_ == b.inputs_ && a.gates_ == b.gates_ && a.output_ == b.output_;
  }

 private:
  std::vector<std::string> inputs_;
  std::vector<Gate> gates_;
  std::string output_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> operands_;
};

using Assignment = std::map<std::string, int>;

int eval_circuit(const MonotoneCircuit& circuit, const Assignment& assignment);

/// Every signal value, indexed like MonotoneCircuit::signal_index.
std::vector<int> eval_signals(const MonotoneCircuit& circuit, const Assignment& assignment);

enum class Backend { AndOr, Bootstrap };

/// Compiled PER instance template. `base_active` is active for every
/// assignment; `input_map[name]` is additionally activated when name = 1.
struct ReductionOutput {
  Backend backend = Backend::Bootstrap;
  NetworkSpec network;
  UpdateSchedule schedule;
  Vertex target = 0;
  std::map<std::string, std::vector<Vertex>> input_map;
  std::vector<Vertex> base_active;
  /// Bootstrap: initially active anchors. AND/OR: precharged OR vertices.
  std::vector<Vertex> always_active;
  /// Bootstrap only: pad vertices that never activate.
  std::vector<Vertex> never_active;
};

PerInstance instantiate(const ReductionOutput& reduction, const Assignment& assignment);

/// AND/OR network under a sequential topological schedule. AND and OR vertices
/// alternate along every wire; OR vertices other than input holders start
/// active so that the first sweep evaluates the circuit exactly.
ReductionOutput compile_to_andor(const MonotoneCircuit& circuit);

/// Uniform-Bootstrap network under the parallel schedule, max degree 5.
ReductionOutput compile_to_bootstrap(const MonotoneCircuit& circuit);

ReductionOutput compile(const MonotoneCircuit& circuit, Backend backend);

struct Mismatch {
  Assignment assignment;
  int circuit_value;
  bool per_answer;
};

struct VerificationReport {
  std::size_t input_count = 0;
  std::size_t gate_count = 0;
  std::size_t vertex_count = 0;
  std::size_t max_degree = 0;
  std::size_t assignments_tested = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

inline constexpr std::size_t default_exhaustion_bound = 12;

VerificationReport verify_reduction(const MonotoneCircuit& circuit, Backend backend,
                                    std::size_t exhaustion_bound = default_exhaustion_bound);

/// The assignment encoded by the low bits of `mask`, input i taking bit i.
Assignment assignment_from_mask(const MonotoneCircuit& circuit, std::uint64_t mask);

}  // namespace autonet
