#include "doctest.h"

#include <algorithm>

#include "autonet/generators.hpp"
#include "autonet/reductions.hpp"
#include "oracles.hpp"

using namespace autonet;

namespace {

MonotoneCircuit single(GateKind kind) { return MonotoneCircuit({"x1", "x2"}, {{"out", kind, "x1", "x2"}}, "out"); }

bool per_answer(const ReductionOutput& r, const Assignment& a) { return decide_per(instantiate(r, a)).reachable; }

}  // namespace

TEST_CASE("eval_circuit examples") {
  CHECK(eval_circuit(single(GateKind::And2), {{"x1", 1}, {"x2", 1}}) == 1);
  CHECK(eval_circuit(single(GateKind::Or2), {{"x1", 0}, {"x2", 0}}) == 0);
  const MonotoneCircuit nested({"x1", "x2", "x3"},
                              {{"t", GateKind::Or2, "x1", "x2"}, {"out", GateKind::And2, "t", "x3"}}, "out");
  CHECK(eval_circuit(nested, {{"x1", 0}, {"x2", 1}, {"x3", 1}}) == 1);
  CHECK_THROWS_AS(eval_circuit(nested, {{"x1", 0}, {"x2", 1}}), Error);
  CHECK_THROWS_AS(eval_circuit(nested, {{"x1", 0}, {"x2", 1}, {"x3", 2}}), Error);
}

TEST_CASE("MonotoneCircuit validation") {
  CHECK_THROWS_AS(MonotoneCircuit({"a"}, {{"g", GateKind::And2, "a", "h"}}, "g"), Error);
  CHECK_THROWS_AS(MonotoneCircuit({"a", "a"}, {}, "a"), Error);
  CHECK_THROWS_AS(MonotoneCircuit({"a"}, {}, "b"), Error);
}

TEST_CASE("single-gate compilations") {
  const auto orb = compile_to_andor(single(GateKind::Or2));
  CHECK(per_answer(orb, {{"x1", 1}, {"x2", 0}}));
  CHECK_FALSE(per_answer(orb, {{"x1", 0}, {"x2", 0}}));
  const auto andb = compile_to_andor(single(GateKind::And2));
  CHECK_FALSE(per_answer(andb, {{"x1", 1}, {"x2", 0}}));
  CHECK(per_answer(andb, {{"x1", 1}, {"x2", 1}}));

  for (GateKind kind : {GateKind::And2, GateKind::Or2}) {
    const auto boot = compile_to_bootstrap(single(kind));
    CHECK(boot.network.graph().max_degree() <= 5);
    const Vertex gate = boot.target;
    // Gate vertex: two input wires, anchors, and never-active pads.
    CHECK(boot.network.graph().degree(gate) == 5);
    std::size_t anchors = 0;
    std::size_t pads = 0;
    for (Vertex u : boot.network.graph().neighbors(gate)) {
      anchors += std::count(boot.always_active.begin(), boot.always_active.end(), u);
      pads += std::count(boot.never_active.begin(), boot.never_active.end(), u);
    }
    CHECK(anchors == (kind == GateKind::And2 ? 1U : 2U));
    CHECK(pads == (kind == GateKind::And2 ? 2U : 1U));
    // 3 of 5 neighbours active <=> the gate fires
    const std::size_t need_inputs = kind == GateKind::And2 ? 2 : 1;
    CHECK(eval_local_rule(RuleKind::Bootstrap, 0, anchors + need_inputs, 5) == 1);
    CHECK(eval_local_rule(RuleKind::Bootstrap, 0, anchors + need_inputs - 1, 5) == 0);
  }
}

TEST_CASE("constant-false assignments never reach the target") {
  auto rng = gen::stream(3, 0);
  const auto c = gen::random_circuit(rng, 3, 6);
  for (Backend b : {Backend::AndOr, Backend::Bootstrap}) {
    const auto r = compile(c, b);
    CHECK_FALSE(per_answer(r, assignment_from_mask(c, 0)));
  }
}

TEST_CASE("verify_reduction examples") {
  auto rep = verify_reduction(single(GateKind::And2), Backend::Bootstrap);
  CHECK(rep.assignments_tested == 4);
  CHECK(rep.mismatches.empty());

  const MonotoneCircuit three({"a", "b", "c"},
                              {{"g1", GateKind::Or2, "a", "b"},
                               {"g2", GateKind::And2, "g1", "c"},
                               {"g3", GateKind::Or2, "g2", "a"}},
                              "g3");
  rep = verify_reduction(three, Backend::AndOr);
  CHECK(rep.assignments_tested == 8);
  CHECK(rep.passed());

  std::vector<std::string> many;
  for (int i = 0; i < 13; ++i) many.push_back("x" + std::to_string(i));
  const MonotoneCircuit wide(many, {}, "x0");
  CHECK_THROWS_AS(verify_reduction(wide, Backend::AndOr), Error);
}

TEST_CASE("output wired straight to an input") {
  const MonotoneCircuit passthrough({"a", "b"}, {{"g", GateKind::And2, "a", "b"}}, "a");
  for (Backend b : {Backend::AndOr, Backend::Bootstrap}) CHECK(verify_reduction(passthrough, b).passed());
}

TEST_CASE("compiled instances satisfy the structural invariants") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    auto rng = gen::stream(99, trial);
    const auto c = gen::random_circuit(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 14));
    const auto boot = compile_to_bootstrap(c);
    const auto andor = compile_to_andor(c);
    CHECK(boot.network.graph().max_degree() <= 5);
    CHECK(boot.network.is_uniform(RuleKind::Bootstrap));
    CHECK(boot.schedule == make_parallel(boot.network.size()));
    CHECK(andor.network.is_and_or());
    CHECK(andor.schedule.length() == andor.network.size());

    for (std::uint64_t mask = 0; mask < (1U << c.inputs().size()); ++mask) {
      const auto a = assignment_from_mask(c, mask);
      // anchors start (and so stay) active; pads never get half their neighbours
      const auto inst = instantiate(boot, a);
      for (Vertex v : boot.always_active) CHECK(inst.initial.test(v));
      std::vector<Vertex> seeds;
      for (Vertex v = 0; v < inst.initial.size(); ++v) {
        if (inst.initial.test(v)) seeds.push_back(v);
      }
      const auto closure = bootstrap_closure(boot.network.graph(), seeds);
      std::vector<bool> in(inst.initial.size(), false);
      for (Vertex v : closure) in[v] = true;
      for (Vertex pad : boot.never_active) {
        CHECK_FALSE(in[pad]);
        std::size_t k = 0;
        for (Vertex u : boot.network.graph().neighbors(pad)) k += in[u] ? 1 : 0;
        CHECK(2 * k < boot.network.graph().degree(pad));
      }
      CHECK_NOTHROW(validate_initial_config(andor.network, instantiate(andor, a).initial, true));
    }
  }
}

TEST_CASE("reductions agree with circuit evaluation and transfer monotonicity") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    auto rng = gen::stream(123, trial);
    const auto c = gen::random_circuit(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 20));
    for (Backend b : {Backend::AndOr, Backend::Bootstrap}) {
      const auto r = compile(c, b);
      const std::size_t k = c.inputs().size();
      std::vector<bool> answer(std::size_t{1} << k);
      for (std::uint64_t mask = 0; mask < answer.size(); ++mask) {
        const auto a = assignment_from_mask(c, mask);
        answer[mask] = per_answer(r, a);
        CHECK(answer[mask] == (eval_circuit(c, a) == 1));
      }
      for (std::uint64_t mask = 0; mask < answer.size(); ++mask) {
        for (std::size_t i = 0; i < k; ++i) {
          if (answer[mask]) CHECK(answer[mask | (std::uint64_t{1} << i)]);
        }
      }
    }
  }
}

TEST_CASE("exhaustive small circuits: two gates over two inputs") {
  std::size_t circuits = 0;
  for (std::size_t g = 0; g <= 2; ++g) {
    for (const auto& c : oracle::all_circuits(2, g)) {
      ++circuits;
      for (Backend b : {Backend::AndOr, Backend::Bootstrap}) CHECK(verify_reduction(c, b).passed());
    }
  }
  CHECK(circuits == 2 + 2 * 3 * 3 + 2 * 3 * 2 * 6 * 4);
}
