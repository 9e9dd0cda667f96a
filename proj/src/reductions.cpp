#include "autonet/reductions.hpp"

#include <string>
#include <utility>

namespace autonet {

MonotoneCircuit::MonotoneCircuit(std::vector<std::string> inputs, std::vector<Gate> gates, std::string output)
    : inputs_(std::move(inputs)), gates_(std::move(gates)), output_(std::move(output)) {
  auto declare = [this](const std::string& name) {
    if (name.empty()) throw Error("circuit: empty signal name");
    if (!index_.emplace(name, index_.size()).second) throw Error("circuit: signal '" + name + "' defined twice");
  };
  for (const auto& name : inputs_) declare(name);
  operands_.reserve(gates_.size());
  for (const auto& gate : gates_) {
    auto operand = [&](const std::string& name) {
      auto it = index_.find(name);
      if (it == index_.end()) {
        throw Error("circuit: gate '" + gate.name + "' reads '" + name + "' before it is defined");
      }
      return it->second;
    };
    operands_.emplace_back(operand(gate.lhs), operand(gate.rhs));
    declare(gate.name);
  }
  if (!index_.contains(output_)) throw Error("circuit: output '" + output_ + "' is not a signal");
}

std::size_t MonotoneCircuit::signal_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("circuit: unknown signal '" + name + "'");
  return it->second;
}

std::vector<int> eval_signals(const MonotoneCircuit& circuit, const Assignment& assignment) {
  const auto& inputs = circuit.inputs();
  for (const auto& [name, value] : assignment) {
    if (value != 0 && value != 1) throw Error("assignment: value of '" + name + "' must be 0 or 1");
    const std::size_t idx = circuit.signal_index(name);
    if (idx >= inputs.size()) throw Error("assignment: '" + name + "' is a gate, not an input");
  }
  std::vector<int> values(circuit.signal_count(), 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto it = assignment.find(inputs[i]);
    if (it == assignment.end()) throw Error("assignment: missing value for input '" + inputs[i] + "'");
    values[i] = it->second;
  }
  const auto& gates = circuit.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const int a = values[circuit.lhs_index(g)];
    const int b = values[circuit.rhs_index(g)];
    values[inputs.size() + g] = gates[g].kind == GateKind::And2 ? (a & b) : (a | b);
  }
  return values;
}

int eval_circuit(const MonotoneCircuit& circuit, const Assignment& assignment) {
  return eval_signals(circuit, assignment)[circuit.output_index()];
}

Assignment assignment_from_mask(const MonotoneCircuit& circuit, std::uint64_t mask) {
  Assignment a;
  const auto& inputs = circuit.inputs();
  for (std::size_t i = 0; i < inputs.size(); ++i) a[inputs[i]] = static_cast<int>((mask >> i) & 1U);
  return a;
}

namespace {

class NetworkBuilder {
 public:
  Vertex add(RuleKind rule) {
    rules_.push_back(rule);
    return static_cast<Vertex>(rules_.size() - 1);
  }
  void connect(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  NetworkSpec build() const { return make_network(validate_graph(rules_.size(), edges_), rules_); }
  std::size_t size() const noexcept { return rules_.size(); }

 private:
  std::vector<RuleKind> rules_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Bootstrap gadget assembly. Every vertex's activation threshold is
/// floor(deg/2) + 1; anchors count as permanently active neighbours and pads
/// as permanently passive ones.
class BootstrapAssembler {
 public:
  explicit BootstrapAssembler(ReductionOutput& out) : out_(out) {}

  Vertex vertex() { return b_.add(RuleKind::Bootstrap); }

  void anchor(Vertex host) {
    const Vertex a = vertex();
    b_.connect(host, a);
    out_.always_active.push_back(a);
  }

  /// Hub with two leaves: the hub never has more than one active neighbour.
  void pad(Vertex host) {
    const Vertex hub = vertex();
    const Vertex l1 = vertex();
    const Vertex l2 = vertex();
    b_.connect(host, hub);
    b_.connect(hub, l1);
    b_.connect(hub, l2);
    out_.never_active.insert(out_.never_active.end(), {hub, l1, l2});
  }

  /// Fan-out tree hanging under `parent`, ending in one diode per consumer.
  /// Buffers (degree 5: parent, 2 anchors, 2 children) follow their parent.
  /// A port is buffer Y, follower Z(Y, anchor, W) and diode W(Y, Z, consumer):
  /// W needs two of its three neighbours, and the consumer alone is one.
  void fan_out(Vertex parent, std::span<const Vertex> consumers) {
    const Vertex y = vertex();
    b_.connect(parent, y);
    anchor(y);
    anchor(y);
    if (consumers.size() == 1) {
      const Vertex z = vertex();
      const Vertex w = vertex();
      b_.connect(y, z);
      b_.connect(y, w);
      b_.connect(z, w);
      anchor(z);
      b_.connect(w, consumers.front());
      return;
    }
    const std::size_t half = (consumers.size() + 1) / 2;
    fan_out(y, consumers.first(half));
    fan_out(y, consumers.subspan(half));
  }

  NetworkBuilder& builder() { return b_; }

 private:
  ReductionOutput& out_;
  NetworkBuilder b_;
};

}  // namespace

ReductionOutput compile_to_bootstrap(const MonotoneCircuit& circuit) {
  ReductionOutput out;
  out.backend = Backend::Bootstrap;
  BootstrapAssembler as(out);

  const std::size_t n_inputs = circuit.inputs().size();
  const auto& gates = circuit.gates();
  std::vector<Vertex> signal(circuit.signal_count());
  for (auto& v : signal) v = as.vertex();

  std::vector<std::vector<Vertex>> consumers(circuit.signal_count());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    consumers[circuit.lhs_index(g)].push_back(signal[n_inputs + g]);
    consumers[circuit.rhs_index(g)].push_back(signal[n_inputs + g]);
  }

  const std::size_t output = circuit.output_index();
  if (output < n_inputs) {
    // Target sink T(W, anchor, pad) activates with its diode.
    const Vertex sink = as.vertex();
    as.anchor(sink);
    as.pad(sink);
    consumers[output].push_back(sink);
    out.target = sink;
  } else {
    out.target = signal[output];
  }

  for (std::size_t s = 0; s < circuit.signal_count(); ++s) {
    if (!consumers[s].empty()) as.fan_out(signal[s], consumers[s]);
  }

  // Gate vertex: 2 diodes in, anchors, optional fan-out root, pads to degree 5.
  // AND: 3 of 5 with one anchor needs both diodes. OR: two anchors need one.
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const std::size_t s = n_inputs + g;
    const std::size_t anchors = gates[g].kind == GateKind::And2 ? 1 : 2;
    const std::size_t child = consumers[s].empty() ? 0 : 1;
    for (std::size_t i = 0; i < anchors; ++i) as.anchor(signal[s]);
    for (std::size_t i = 0; i < 3 - anchors - child; ++i) as.pad(signal[s]);
  }

  for (std::size_t i = 0; i < n_inputs; ++i) out.input_map[circuit.inputs()[i]] = {signal[i]};
  out.base_active = out.always_active;
  out.network = as.builder().build();
  out.schedule = make_parallel(out.network.size());
  return out;
}

ReductionOutput compile_to_andor(const MonotoneCircuit& circuit) {
  ReductionOutput out;
  out.backend = Backend::AndOr;
  NetworkBuilder b;
  std::vector<Vertex> order;

  auto add = [&](RuleKind rule, bool precharged) {
    const Vertex v = b.add(rule);
    order.push_back(v);
    if (precharged) out.always_active.push_back(v);
    return v;
  };

  const std::size_t n_inputs = circuit.inputs().size();
  const auto& gates = circuit.gates();
  std::vector<Vertex> signal(circuit.signal_count());
  std::vector<RuleKind> kind(circuit.signal_count(), RuleKind::Or);

  // Input holder pair: two adjacent OR vertices keep each other active.
  for (std::size_t i = 0; i < n_inputs; ++i) {
    signal[i] = add(RuleKind::Or, false);
    const Vertex partner = add(RuleKind::Or, false);
    b.connect(signal[i], partner);
    out.input_map[circuit.inputs()[i]] = {signal[i], partner};
  }

  // Gate vertices follow their operands (and any buffers) in the sweep. An
  // operand of the same rule as the gate goes through a buffer of the other
  // rule, so every wire alternates AND/OR.
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const RuleKind rule = gates[g].kind == GateKind::And2 ? RuleKind::And : RuleKind::Or;
    std::vector<Vertex> feeds;
    for (std::size_t operand : {circuit.lhs_index(g), circuit.rhs_index(g)}) {
      if (kind[operand] != rule) {
        feeds.push_back(signal[operand]);
        continue;
      }
      const RuleKind other = rule == RuleKind::And ? RuleKind::Or : RuleKind::And;
      const Vertex buffer = add(other, other == RuleKind::Or);
      b.connect(signal[operand], buffer);
      feeds.push_back(buffer);
    }
    const std::size_t s = n_inputs + g;
    kind[s] = rule;
    signal[s] = add(rule, rule == RuleKind::Or);
    for (Vertex f : feeds) b.connect(f, signal[s]);
  }

  const std::size_t output = circuit.output_index();
  if (kind[output] == RuleKind::And) {
    out.target = signal[output];
  } else {
    // Precharged or input OR outputs are read by a trailing passive AND.
    out.target = add(RuleKind::And, false);
    b.connect(signal[output], out.target);
  }

  out.base_active = out.always_active;
  out.network = b.build();
  out.schedule = make_sequential(order);
  return out;
}

ReductionOutput compile(const MonotoneCircuit& circuit, Backend backend) {
  return backend == Backend::AndOr ? compile_to_andor(circuit) : compile_to_bootstrap(circuit);
}

namespace {

Configuration initial_for(const ReductionOutput& reduction, const Assignment& assignment) {
  Configuration initial(reduction.network.size());
  for (Vertex v : reduction.base_active) initial.set(v);
  for (const auto& [name, vertices] : reduction.input_map) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw Error("assignment: missing value for input '" + name + "'");
    if (it->second != 0 && it->second != 1) throw Error("assignment: value of '" + name + "' must be 0 or 1");
    if (it->second == 1) {
      for (Vertex v : vertices) initial.set(v);
    }
  }
  for (const auto& [name, value] : assignment) {
    if (!reduction.input_map.contains(name)) throw Error("assignment: '" + name + "' is not a circuit input");
  }
  return initial;
}

}  // namespace

PerInstance instantiate(const ReductionOutput& reduction, const Assignment& assignment) {
  PerInstance inst{reduction.network, reduction.schedule, initial_for(reduction, assignment), reduction.target};
  validate_instance(inst, reduction.backend == Backend::AndOr);
  return inst;
}

VerificationReport verify_reduction(const MonotoneCircuit& circuit, Backend backend, std::size_t exhaustion_bound) {
  const std::size_t k = circuit.inputs().size();
  if (k > exhaustion_bound || k >= 63) {
    throw Error("verify_reduction: " + std::to_string(k) + " inputs exceed the exhaustion bound of " +
                std::to_string(exhaustion_bound) + "; sample assignments instead");
  }
  const ReductionOutput reduction = compile(circuit, backend);
  VerificationReport report;
  report.input_count = k;
  report.gate_count = circuit.gates().size();
  report.vertex_count = reduction.network.size();
  report.max_degree = reduction.network.graph().max_degree();
  PerInstance inst = instantiate(reduction, assignment_from_mask(circuit, 0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const Assignment a = assignment_from_mask(circuit, mask);
    const int expected = eval_circuit(circuit, a);
    inst.initial = initial_for(reduction, a);
    validate_instance(inst, reduction.backend == Backend::AndOr);
    const PerAnswer answer = decide_per(inst);
    if (answer.status != PerStatus::Decided || answer.reachable != (expected == 1)) {
      report.mismatches.push_back({a, expected, answer.reachable});
    }
    ++report.assignments_tested;
  }
  return report;
}

}  // namespace autonet
