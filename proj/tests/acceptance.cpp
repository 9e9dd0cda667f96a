// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "autonet/commands.hpp"
#include "autonet/generators.hpp"
#include "autonet/io.hpp"
#include "oracles.hpp"

using namespace autonet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

RuleKind rule_of(std::size_t i) { return static_cast<RuleKind>(i); }

std::vector<Vertex> active_set(const Configuration& x) {
  std::vector<Vertex> v;
  for (Vertex i = 0; i < x.size(); ++i) {
    if (x.test(i)) v.push_back(i);
  }
  return v;
}

// 1
Outcome rule_table() {
  Outcome r;
  for (std::size_t rule = 0; rule < 4; ++rule) {
    for (int d = 0; d <= 8; ++d) {
      for (int s = 0; s <= 1; ++s) {
        for (int k = 0; k <= d; ++k) {
          const int got = eval_local_rule(rule_of(rule), s, k, d);
          r.expect(got == oracle::rule_table(rule_of(rule), s, k, d),
                   std::string(to_string(rule_of(rule))) + " s=" + std::to_string(s) + " k=" + std::to_string(k) +
                       " d=" + std::to_string(d));
        }
      }
    }
  }
  r.detail = std::to_string(r.checks) + " table entries";
  return r;
}

// 2
Outcome bootstrap_invariance() {
  Outcome r;
  std::size_t runs = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = gen::stream(2002, i);
    const std::size_t n = gen::uniform(rng, 1, 12);
    const auto net = make_network(gen::random_graph(rng, n, gen::uniform(rng, 15, 60) / 100.0),
                                  std::vector<RuleKind>(n, RuleKind::Bootstrap));
    const auto x0 = gen::random_config(rng, n, gen::uniform(rng, 10, 50) / 100.0);
    const auto seeds = active_set(x0);
    const auto closure = bootstrap_closure(net.graph(), seeds);
    r.expect(closure == oracle::closure(net.graph(), seeds), "closure vs naive fixpoint, graph " + std::to_string(i));

    std::vector<UpdateSchedule> schedules{make_parallel(n)};
    for (int j = 0; j < 10; ++j) schedules.push_back(make_sequential(gen::random_permutation(rng, n)));
    for (int j = 0; j < 10; ++j) schedules.push_back(gen::random_block_schedule(rng, n));
    for (const auto& s : schedules) {
      const auto o = orbit(net, s, x0, n + 1);
      const bool fixed = o.status == OrbitStatus::Complete && o.trajectory.period == 1;
      r.expect(fixed, "bootstrap run did not settle, graph " + std::to_string(i));
      // ever-active = final, since active vertices never switch off
      if (fixed) r.expect(active_set(o.trajectory.boundary_states.back()) == closure, "graph " + std::to_string(i));
      ++runs;
    }
  }
  r.detail = std::to_string(runs) + " schedule runs on 100 graphs";
  return r;
}

// 3
Outcome per_oracle() {
  Outcome r;
  std::size_t reachable = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = gen::stream(3003, i);
    const std::size_t n = gen::uniform(rng, 1, 10);
    const RuleKind rule = rule_of(i % 4);
    std::vector<RuleKind> rules(n, rule);
    if (rule == RuleKind::And || rule == RuleKind::Or) rules = gen::random_and_or_rules(rng, n);
    UpdateSchedule s;
    switch ((i / 4) % 3) {
      case 0: s = make_parallel(n); break;
      case 1: s = make_sequential(gen::random_permutation(rng, n)); break;
      default: s = gen::random_block_schedule(rng, n); break;
    }
    Configuration x = gen::random_config(rng, n, 0.4);
    const auto target = static_cast<Vertex>(gen::uniform(rng, 0, n - 1));
    x.reset(target);
    const PerInstance inst{make_network(gen::random_graph(rng, n, 0.35), rules), s, x, target};
    const auto got = decide_per(inst);
    const auto want = oracle::per(inst);
    const std::string tag = "instance " + std::to_string(i);
    r.expect(got.status == PerStatus::Decided, tag + " undecided");
    r.expect(got.reachable == want.reachable, tag + " answer");
    r.expect(got.witness.has_value() == want.witness.has_value(), tag + " witness presence");
    if (got.witness && want.witness) {
      r.expect(std::make_pair(got.witness->period, got.witness->block) == *want.witness, tag + " witness");
    }
    reachable += want.reachable ? 1 : 0;
  }
  r.detail = "200 instances, " + std::to_string(reachable) + " reachable";
  return r;
}

// 4
Outcome orbits() {
  Outcome r;
  std::size_t cycles = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = gen::stream(4004, i);
    const std::size_t n = gen::uniform(rng, 1, 10);
    const auto net =
        make_network(gen::random_graph(rng, n, 0.4), std::vector<RuleKind>(n, RuleKind::SimpleMajority));
    const auto s = i % 2 ? make_parallel(n) : gen::random_block_schedule(rng, n);
    const auto x = gen::random_config(rng, n);
    const auto o = orbit(net, s, x, default_max_periods(n));
    r.expect(o.status == OrbitStatus::Complete, "orbit bound, instance " + std::to_string(i));
    const auto [tau, p] = oracle::orbit(net, s, x);
    r.expect(o.trajectory.transient == tau && o.trajectory.period == p, "instance " + std::to_string(i));
    cycles += p > 1 ? 1 : 0;
  }
  const std::array<std::pair<Vertex, Vertex>, 4> e{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  const auto c4 = make_network(validate_graph(4, e), std::vector<RuleKind>(4, RuleKind::SimpleMajority));
  const auto o = orbit(c4, make_parallel(4), Configuration::from_string("0101"), 100);
  r.expect(o.trajectory.transient == 0 && o.trajectory.period == 2, "C4 alternating");
  r.detail = "100 instances (" + std::to_string(cycles) + " with p > 1), C4 tau=" +
             std::to_string(o.trajectory.transient) + " p=" + std::to_string(o.trajectory.period);
  return r;
}

// 5
Outcome classifier() {
  Outcome r;
  std::size_t perms = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = gen::stream(5005, i);
    const std::size_t n = gen::uniform(rng, 2, 6);
    const auto net = make_network(gen::random_graph(rng, n, 0.5), gen::random_and_or_rules(rng, n));
    const std::string tag = "network " + std::to_string(i);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    do {
      const auto s = make_sequential(perm);
      const auto want = oracle::nc_condition(net, s) ? ScheduleCase::NcCondition : ScheduleCase::Interleaved;
      r.expect(classify_schedule(net, s) == want, tag);
      ++perms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.expect(classify_schedule(net, make_parallel(n)) == ScheduleCase::NcCondition, tag + " parallel");
    for (int j = 0; j < 5; ++j) {
      auto blocks = make_sequential(gen::random_permutation(rng, n)).blocks();
      blocks.insert(blocks.begin() + gen::uniform(rng, 0, n), Block{static_cast<Vertex>(gen::uniform(rng, 0, n - 1))});
      r.expect(classify_schedule(net, validate_schedule(n, blocks)) == ScheduleCase::LongWord, tag + " long word");
    }
  }
  r.detail = std::to_string(perms) + " permutations over 20 networks";
  return r;
}

// 6 and 7
struct ReductionStats {
  Outcome correctness;
  Outcome degree;
};

ReductionStats reductions() {
  ReductionStats st;
  std::size_t circuits = 0;
  std::size_t assignments = 0;
  std::size_t mismatches = 0;
  std::size_t worst_degree = 0;
  auto check = [&](const MonotoneCircuit& c, const std::string& tag) {
    ++circuits;
    for (Backend b : {Backend::AndOr, Backend::Bootstrap}) {
      const auto rep = verify_reduction(c, b);
      assignments += rep.assignments_tested;
      mismatches += rep.mismatches.size();
      st.correctness.expect(rep.passed(), tag + (b == Backend::AndOr ? " andor" : " bootstrap"));
      if (b == Backend::Bootstrap) {
        worst_degree = std::max(worst_degree, rep.max_degree);
        st.degree.expect(rep.max_degree <= 5, tag);
      }
    }
  };
  std::size_t exhaustive = 0;
  for (std::size_t inputs = 1; inputs <= 4; ++inputs) {
    for (std::size_t gates = 0; gates <= 3; ++gates) {
      for (const auto& c : oracle::all_circuits(inputs, gates)) check(c, "exhaustive #" + std::to_string(exhaustive++));
    }
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = gen::stream(6006, i);
    // the upper ends are hit explicitly so the corpus reaches 8 inputs / 20 gates
    const std::size_t inputs = i < 5 ? 8 : gen::uniform(rng, 1, 8);
    const std::size_t gates = i < 5 ? 20 : gen::uniform(rng, 1, 20);
    check(gen::random_circuit(rng, inputs, gates), "random #" + std::to_string(i));
  }
  st.correctness.detail = std::to_string(exhaustive) + " exhaustive + 50 random circuits, " +
                          std::to_string(assignments) + " assignments, " + std::to_string(mismatches) + " mismatches";
  st.degree.detail = std::to_string(circuits) + " bootstrap instances, max degree " + std::to_string(worst_degree);
  return st;
}

// 8
int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "autonet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o;
  std::ostringstream e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

std::size_t graph_size(const fs::path& p) { return io::load_graph(p).size(); }

Outcome cli_contract(const fs::path& data) {
  Outcome r;
  const fs::path work = fs::temp_directory_path() / ("autonet_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(work);

  // emitted instances join the corpus
  for (const char* circuit : {"and_or3.circuit", "two_level.circuit"}) {
    for (const char* backend : {"andor", "bootstrap"}) {
      const fs::path dir = work / (std::string(circuit) + "." + backend);
      r.expect(run_cli({"compile", "--circuit", (data / circuit).string(), "--backend", backend, "--assign",
                        circuit[0] == 'a' ? "x1=1,x2=0,x3=1" : "a=1,b=1,c=0,d=0", "--out", dir.string()}) == 0,
               std::string("compile ") + circuit);
    }
  }

  std::size_t files = 0;
  auto round_trip = [&](const fs::path& p, const std::string& kind, std::size_t n) {
    std::istringstream in(io::read_file(p));
    const std::string src = p.string();
    try {
      if (kind == "graph") {
        const Graph g = io::parse_graph(in, src);
        std::istringstream again(io::emit_graph(g));
        r.expect(io::parse_graph(again) == g, src);
      } else if (kind == "rules") {
        const auto rules = io::parse_rules(in, n, src);
        std::istringstream again(io::emit_rules(rules));
        r.expect(io::parse_rules(again, n) == rules, src);
      } else if (kind == "sched") {
        const auto s = io::parse_schedule(in, n, src);
        std::istringstream again(io::emit_schedule(s));
        r.expect(io::parse_schedule(again, n) == s, src);
      } else if (kind == "circuit") {
        const auto c = io::parse_circuit(in, src);
        std::istringstream again(io::emit_circuit(c));
        r.expect(io::emit_circuit(io::parse_circuit(again)) == io::emit_circuit(c), src);
      }
      ++files;
    } catch (const std::exception& e) {
      r.expect(false, src + ": " + e.what());
    }
  };
  for (const auto& entry : fs::directory_iterator(data)) {
    const auto ext = entry.path().extension().string();
    const auto stem = entry.path().stem().string();
    if (stem == "malformed") continue;
    if (ext == ".graph") round_trip(entry.path(), "graph", 0);
    if (ext == ".circuit") round_trip(entry.path(), "circuit", 0);
    if (ext == ".rules" || ext == ".sched") {
      const std::string base = stem.substr(0, stem.find('_'));
      const std::size_t n = base == "parallel" ? 3 : graph_size(data / (base + ".graph"));
      round_trip(entry.path(), ext == ".rules" ? "rules" : "sched", n);
    }
  }
  for (const auto& entry : fs::directory_iterator(work)) {
    const fs::path& d = entry.path();
    const std::size_t n = graph_size(d / "graph.txt");
    round_trip(d / "graph.txt", "graph", n);
    round_trip(d / "rules.txt", "rules", n);
    round_trip(d / "schedule.txt", "sched", n);
    // per on the emitted instance agrees with the circuit value
    const int code = run_cli({"per", "--graph", (d / "graph.txt").string(), "--rules", (d / "rules.txt").string(),
                              "--schedule", (d / "schedule.txt").string(), "--initial",
                              (d / "initial.txt").string(), "--target", (d / "target.txt").string()});
    r.expect(code == 0, d.filename().string() + " per on compiled instance");
  }

  const std::string p3 = (data / "p3.graph").string();
  const int reach = run_cli({"per", "--graph", p3, "--rule", "bootstrap", "--initial",
                             (data / "reachable.initial").string(), "--target", "1"});
  const int unreach = run_cli({"per", "--graph", p3, "--rule", "bootstrap", "--initial",
                               (data / "unreachable.initial").string(), "--target", "2"});
  const int malformed = run_cli({"per", "--graph", (data / "malformed.graph").string(), "--rule", "bootstrap",
                                 "--initial", "100", "--target", "2"});
  r.expect(reach == 0, "golden reachable");
  r.expect(unreach == 1, "golden not reachable");
  r.expect(malformed == 2, "golden malformed");

  for (const auto family : cli::sweep_families()) {
    const std::string f(family);
    std::string a;
    std::string b;
    const int ca = run_cli({"sweep", "--family", f, "--count", "20", "--seed", "7", "--max-n", "8"}, &a);
    const int cb = run_cli({"sweep", "--family", f, "--count", "20", "--seed", "7", "--max-n", "8"}, &b);
    r.expect(ca == 0 && cb == 0, "sweep " + f + " exit");
    r.expect(a == b && !a.empty(), "sweep " + f + " determinism");
  }
  fs::remove_all(work);
  r.detail = std::to_string(files) + " files round-tripped, golden exits " + std::to_string(reach) + "/" +
             std::to_string(unreach) + "/" + std::to_string(malformed) + ", " +
             std::to_string(cli::sweep_families().size()) + " sweep families deterministic";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path data = argc > 1 ? fs::path(argv[1]) : fs::path(AUTONET_TEST_DATA);
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail;
    if (!o.ok) std::cout << " (first failure: " << o.first_failure << ")";
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
  };
  auto guarded = [](const std::function<Outcome()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      Outcome o;
      o.expect(false, std::string("exception: ") + e.what());
      return o;
    }
  };

  report(1, "rule-table conformance", guarded(rule_table));
  report(2, "bootstrap schedule invariance", guarded(bootstrap_invariance));
  report(3, "PER oracle equivalence", guarded(per_oracle));
  report(4, "orbit correctness", guarded(orbits));
  report(5, "schedule classifier", guarded(classifier));
  ReductionStats red;
  try {
    red = reductions();
  } catch (const std::exception& e) {
    red.correctness.expect(false, std::string("exception: ") + e.what());
    red.degree.expect(false, "not reached");
  }
  report(6, "reduction verification", red.correctness);
  report(7, "bootstrap degree bound", red.degree);
  report(8, "CLI contract", guarded([&] { return cli_contract(data); }));

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << static_cast<int>(secs + 0.5) << "s" << std::endl;
  return failures == 0 ? 0 : 1;
}
