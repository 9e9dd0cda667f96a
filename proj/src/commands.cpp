#include "autonet/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "autonet/generators.hpp"
#include "autonet/io.hpp"

namespace autonet::cli {

using nlohmann::ordered_json;

nlohmann::ordered_json RunManifest::to_json() const {
  ordered_json j;
  j["command"] = command;
  ordered_json in = ordered_json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = in;
  j["seed"] = seed;
  ordered_json fl = ordered_json::object();
  for (const auto& [k, v] : flags) fl[k] = v;
  j["flags"] = fl;
  j["version"] = version;
  return j;
}

namespace {

std::string manifest_line(const RunManifest& m) { return ordered_json{{"manifest", m.to_json()}}.dump(); }

std::string manifest_comment(const RunManifest& m) { return "# manifest: " + m.to_json().dump() + "\n"; }

bool is_bits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

/// File contents with '#' comments removed and whitespace collapsed.
std::string read_value_file(const std::string& path) {
  std::istringstream in(io::read_file(path));
  std::string line;
  std::string value;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    for (std::string tok; ss >> tok;) value += tok;
  }
  return value;
}

struct LoadedNetwork {
  NetworkSpec network;
  UpdateSchedule schedule;
};

LoadedNetwork load_network(const NetworkArgs& args) {
  if (args.graph.empty()) throw Error("--graph is required");
  Graph graph = io::load_graph(args.graph);
  const std::size_t n = graph.size();
  std::vector<RuleKind> rules;
  if (!args.rule.empty() && !args.rules_file.empty()) throw Error("give either --rule or --rules, not both");
  if (!args.rule.empty()) {
    auto rule = parse_rule(args.rule);
    if (!rule) throw Error("unknown rule '" + args.rule + "'");
    rules.assign(n, *rule);
  } else if (!args.rules_file.empty()) {
    std::istringstream in(io::read_file(args.rules_file));
    rules = io::parse_rules(in, n, args.rules_file);
  } else {
    throw Error("one of --rule or --rules is required");
  }
  UpdateSchedule schedule;
  if (args.schedule == "parallel") {
    schedule = make_parallel(n);
  } else {
    std::istringstream in(io::read_file(args.schedule));
    schedule = io::parse_schedule(in, n, args.schedule);
  }
  return {make_network(std::move(graph), std::move(rules)), std::move(schedule)};
}

Configuration load_initial(const std::string& spec, std::size_t n) {
  if (spec.empty()) throw Error("--initial is required");
  if (is_bits(spec)) return io::parse_config(spec, n);
  return io::parse_config(read_value_file(spec), n, spec);
}

Vertex load_target(const std::string& spec, std::size_t n) {
  const std::string value = is_digits(spec) ? spec : read_value_file(spec);
  if (!is_digits(value)) throw Error("target must be a vertex id, got '" + value + "'");
  const auto v = std::stoull(value);
  if (v >= n) throw Error("target vertex " + value + " out of range for n = " + std::to_string(n));
  return static_cast<Vertex>(v);
}

void add_network_inputs(RunManifest& m, const NetworkArgs& a) {
  m.inputs.emplace_back("graph", a.graph);
  if (!a.rules_file.empty()) m.inputs.emplace_back("rules", a.rules_file);
  m.inputs.emplace_back("schedule", a.schedule);
  if (!a.initial.empty()) m.inputs.emplace_back("initial", a.initial);
  m.flags.emplace_back("rule", a.rule);
}

std::string max_periods_flag(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "default"; }

std::string_view backend_name(Backend b) { return b == Backend::AndOr ? "andor" : "bootstrap"; }

// ---------------------------------------------------------------------------
// sweep families

struct SweepFamily {
  std::string_view name;
  std::string_view header;
  std::string (*row)(gen::Rng&, std::size_t max_n);
};

/// Ever-active set under `schedule`, plus the number of productive periods.
std::pair<Configuration, std::size_t> bootstrap_fixpoint(const NetworkSpec& net, const UpdateSchedule& schedule,
                                                         const Configuration& initial, bool& monotone) {
  Configuration x = initial;
  std::size_t productive = 0;
  for (;;) {
    Configuration next = run_period(net, schedule, x).config;
    for (std::size_t i = 0; i < x.size(); ++i) monotone &= !(x.test(i) && !next.test(i));
    if (next == x) return {x, productive};
    x = std::move(next);
    ++productive;
  }
}

std::string row_bootstrap_invariance(gen::Rng& rng, std::size_t max_n) {
  const std::size_t n = gen::uniform(rng, 1, max_n);
  const double p = static_cast<double>(gen::uniform(rng, 1, 6)) / 10.0;
  Graph g = gen::random_graph(rng, n, p);
  const Configuration initial = gen::random_config(rng, n, 0.3);
  std::vector<Vertex> seeds;
  for (Vertex v = 0; v < n; ++v) {
    if (initial.test(v)) seeds.push_back(v);
  }
  const auto closure = bootstrap_closure(g, seeds);
  Configuration expected(n);
  for (Vertex v : closure) expected.set(v);

  const std::size_t edges = g.edge_count();
  NetworkSpec net = make_network(std::move(g), std::vector<RuleKind>(n, RuleKind::Bootstrap));
  std::vector<UpdateSchedule> schedules{make_parallel(n)};
  for (int i = 0; i < 10; ++i) schedules.push_back(make_sequential(gen::random_permutation(rng, n)));
  for (int i = 0; i < 10; ++i) schedules.push_back(gen::random_block_schedule(rng, n));

  bool pass = true;
  std::size_t worst = 0;
  for (const auto& s : schedules) {
    bool monotone = true;
    auto [fixed, periods] = bootstrap_fixpoint(net, s, initial, monotone);
    pass &= monotone && fixed == expected && periods <= n;
    worst = std::max(worst, periods);
  }
  std::ostringstream row;
  row << n << ',' << edges << ',' << seeds.size() << ',' << closure.size() << ',' << schedules.size() << ','
      << worst << ',' << (pass ? "pass" : "fail");
  return row.str();
}

std::string row_bootstrap_fastpath(gen::Rng& rng, std::size_t max_n) {
  const std::size_t n = gen::uniform(rng, 1, max_n);
  Graph g = gen::random_graph(rng, n, static_cast<double>(gen::uniform(rng, 1, 6)) / 10.0);
  Configuration initial = gen::random_config(rng, n, 0.3);
  const auto target = static_cast<Vertex>(gen::uniform(rng, 0, n - 1));
  initial.reset(target);
  const std::size_t edges = g.edge_count();
  UpdateSchedule s = gen::coin(rng) ? gen::random_block_schedule(rng, n) : make_parallel(n);
  PerInstance inst{make_network(std::move(g), std::vector<RuleKind>(n, RuleKind::Bootstrap)), s, initial, target};
  const PerAnswer fast = decide_per(inst);
  PerOptions naive;
  naive.bootstrap_fast_path = false;
  const PerAnswer slow = decide_per(inst, naive);
  const bool pass = fast.status == slow.status && fast.reachable == slow.reachable && fast.witness == slow.witness;
  std::ostringstream row;
  row << n << ',' << edges << ',' << s.block_count() << ',' << (fast.reachable ? 1 : 0) << ','
      << (pass ? "pass" : "fail");
  return row.str();
}

std::string row_majority_orbit(gen::Rng& rng, std::size_t max_n) {
  const std::size_t n = gen::uniform(rng, 1, max_n);
  Graph g = gen::random_graph(rng, n, static_cast<double>(gen::uniform(rng, 1, 6)) / 10.0);
  const Configuration initial = gen::random_config(rng, n);
  const std::size_t edges = g.edge_count();
  NetworkSpec net = make_network(std::move(g), std::vector<RuleKind>(n, RuleKind::SimpleMajority));
  const UpdateSchedule s = gen::coin(rng) ? make_parallel(n) : gen::random_block_schedule(rng, n);
  const OrbitResult r = orbit(net, s, initial, default_max_periods(n));
  const auto& t = r.trajectory;
  const bool pass = r.status == OrbitStatus::Complete && t.boundary_states.size() == t.transient + t.period + 1 &&
                    t.boundary_states.back() == t.boundary_states[t.transient];
  std::ostringstream row;
  row << n << ',' << edges << ',' << s.block_count() << ',' << t.transient << ',' << t.period << ','
      << (pass ? "pass" : "fail");
  return row.str();
}

template <Backend B>
std::string row_reduction(gen::Rng& rng, std::size_t max_inputs) {
  const std::size_t k = gen::uniform(rng, 1, std::min<std::size_t>(max_inputs, 8));
  const std::size_t gates = gen::uniform(rng, 1, 20);
  const MonotoneCircuit c = gen::random_circuit(rng, k, gates);
  const VerificationReport r = verify_reduction(c, B);
  std::ostringstream row;
  row << k << ',' << gates << ',' << r.vertex_count << ',' << r.max_degree << ',' << r.assignments_tested << ','
      << r.mismatches.size() << ',' << (r.passed() ? "pass" : "fail");
  return row.str();
}

const std::vector<SweepFamily>& families() {
  static const std::vector<SweepFamily> all{
      {"bootstrap-invariance", "n,edges,initial_active,closure_size,schedules,max_productive_periods",
       row_bootstrap_invariance},
      {"bootstrap-fastpath", "n,edges,blocks,reachable", row_bootstrap_fastpath},
      {"majority-orbit", "n,edges,blocks,transient,period", row_majority_orbit},
      {"reduction-andor", "inputs,gates,vertices,max_degree,assignments,mismatches", row_reduction<Backend::AndOr>},
      {"reduction-bootstrap", "inputs,gates,vertices,max_degree,assignments,mismatches",
       row_reduction<Backend::Bootstrap>},
  };
  return all;
}

}  // namespace

std::vector<std::string_view> sweep_families() {
  std::vector<std::string_view> names;
  for (const auto& f : families()) names.push_back(f.name);
  return names;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  auto [net, schedule] = load_network(args.net);
  const Configuration initial = load_initial(args.net.initial, net.size());
  RunManifest m;
  m.command = "simulate";
  add_network_inputs(m, args.net);
  m.flags.emplace_back("max-periods", max_periods_flag(args.max_periods));

  const std::uint64_t bound = args.max_periods.value_or(default_max_periods(net.size()));
  const OrbitResult r = orbit(net, schedule, initial, bound);
  const auto& states = r.trajectory.boundary_states;
  const std::size_t records = r.status == OrbitStatus::Complete ? states.size() - 1 : states.size();

  out << manifest_line(m) << '\n';
  for (std::size_t k = 0; k < records; ++k) {
    std::vector<Vertex> activated;
    if (k > 0) {
      for (const auto& a : run_period(net, schedule, states[k - 1]).activations) activated.push_back(a.vertex);
      std::sort(activated.begin(), activated.end());
      activated.erase(std::unique(activated.begin(), activated.end()), activated.end());
    }
    ordered_json rec;
    rec["period"] = k;
    rec["state"] = states[k].to_string();
    rec["activated"] = activated;
    out << rec.dump() << '\n';
  }
  if (r.status == OrbitStatus::Complete) {
    out << ordered_json{{"cycle", {{"transient", r.trajectory.transient}, {"period", r.trajectory.period}}}}.dump()
        << '\n';
    return Exit::ok;
  }
  out << ordered_json{{"bound_exceeded", {{"max_periods", bound}}}}.dump() << '\n';
  return Exit::failed;
}

int cmd_per(const PerArgs& args, std::ostream& out) {
  auto [net, schedule] = load_network(args.net);
  Configuration initial = load_initial(args.net.initial, net.size());
  const Vertex target = load_target(args.target, net.size());
  PerInstance inst{std::move(net), std::move(schedule), std::move(initial), target};
  validate_instance(inst, args.enforce_or_only);

  RunManifest m;
  m.command = "per";
  add_network_inputs(m, args.net);
  m.inputs.emplace_back("target", args.target);
  m.flags.emplace_back("max-periods", max_periods_flag(args.max_periods));
  m.flags.emplace_back("observe", args.observe == Observation::Block ? "block" : "period");
  m.flags.emplace_back("enforce-or-only", args.enforce_or_only ? "true" : "false");

  PerOptions opts;
  opts.max_periods = args.max_periods;
  opts.observe = args.observe;
  const PerAnswer answer = decide_per(inst, opts);

  out << manifest_line(m) << '\n';
  ordered_json rec;
  if (answer.status == PerStatus::BoundExceeded) {
    rec["status"] = "bound_exceeded";
    rec["max_periods"] = opts.max_periods.value_or(default_max_periods(inst.network.size()));
    out << rec.dump() << '\n';
    return Exit::error;
  }
  rec["reachable"] = answer.reachable;
  if (answer.witness) rec["witness"] = {{"period", answer.witness->period}, {"block", answer.witness->block}};
  out << rec.dump() << '\n';
  return answer.reachable ? Exit::reachable : Exit::not_reachable;
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out) {
  auto [net, schedule] = load_network(args.net);
  RunManifest m;
  m.command = "classify";
  add_network_inputs(m, args.net);
  const ScheduleCase c = classify_schedule(net, schedule);
  ordered_json rec;
  rec["case"] = to_string(c);
  rec["n"] = net.size();
  rec["length"] = schedule.length();
  if (c != ScheduleCase::LongWord) {
    ordered_json pairs = ordered_json::array();
    for (auto [v, u] : nc_violations(net, schedule)) pairs.push_back({v, u});
    rec["violations"] = pairs;
  }
  out << manifest_line(m) << '\n' << rec.dump() << '\n';
  return Exit::ok;
}

int cmd_compile(const CompileArgs& args, std::ostream& out) {
  const MonotoneCircuit circuit = io::load_circuit(args.circuit);
  RunManifest m;
  m.command = "compile";
  m.inputs.emplace_back("circuit", args.circuit);
  m.flags.emplace_back("backend", std::string(backend_name(args.backend)));
  if (args.all == args.assignment.has_value()) throw Error("give exactly one of --assign or --all");

  if (args.all) {
    m.flags.emplace_back("all", "true");
    m.flags.emplace_back("exhaustion-bound", std::to_string(args.exhaustion_bound));
    const VerificationReport r = verify_reduction(circuit, args.backend, args.exhaustion_bound);
    ordered_json rec;
    rec["inputs"] = r.input_count;
    rec["gates"] = r.gate_count;
    rec["vertices"] = r.vertex_count;
    rec["max_degree"] = r.max_degree;
    rec["assignments"] = r.assignments_tested;
    rec["mismatches"] = r.mismatches.size();
    ordered_json bad = ordered_json::array();
    for (const auto& mm : r.mismatches) {
      ordered_json a = ordered_json::object();
      for (const auto& [k, v] : mm.assignment) a[k] = v;
      bad.push_back({{"assignment", a}, {"circuit", mm.circuit_value}, {"per", mm.per_answer}});
    }
    rec["mismatch_list"] = bad;
    rec["summary"] = std::to_string(r.assignments_tested) + " assignments, " + std::to_string(r.mismatches.size()) +
                     " mismatches";
    out << manifest_line(m) << '\n' << rec.dump() << '\n';
    return r.passed() ? Exit::ok : Exit::failed;
  }

  const Assignment assignment = io::parse_assignment(*args.assignment);
  m.flags.emplace_back("assign", *args.assignment);
  m.flags.emplace_back("out", args.out_dir);
  const ReductionOutput red = compile(circuit, args.backend);
  const PerInstance inst = instantiate(red, assignment);

  namespace fs = std::filesystem;
  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const std::string header = manifest_comment(m);
  io::write_file(dir / "graph.txt", header + io::emit_graph(inst.network.graph()));
  io::write_file(dir / "rules.txt", header + io::emit_rules(inst.network.rules()));
  io::write_file(dir / "schedule.txt", header + io::emit_schedule(inst.schedule));
  io::write_file(dir / "initial.txt", header + io::emit_config(inst.initial));
  io::write_file(dir / "target.txt", header + std::to_string(inst.target) + "\n");

  ordered_json rec;
  rec["backend"] = backend_name(args.backend);
  rec["vertices"] = inst.network.size();
  rec["edges"] = inst.network.graph().edge_count();
  rec["max_degree"] = inst.network.graph().max_degree();
  rec["target"] = inst.target;
  rec["circuit_value"] = eval_circuit(circuit, assignment);
  rec["files"] = {"graph.txt", "rules.txt", "schedule.txt", "initial.txt", "target.txt"};
  out << manifest_line(m) << '\n' << rec.dump() << '\n';
  return Exit::ok;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  if (args.count < 1) throw Error("sweep: --count must be at least 1");
  if (args.max_n < 1) throw Error("sweep: --max-n must be at least 1");
  const auto& all = families();
  auto it = std::find_if(all.begin(), all.end(), [&](const SweepFamily& f) { return f.name == args.family; });
  if (it == all.end()) throw Error("sweep: unknown family '" + args.family + "'");

  RunManifest m;
  m.command = "sweep";
  m.seed = args.seed;
  m.flags.emplace_back("family", args.family);
  m.flags.emplace_back("count", std::to_string(args.count));
  m.flags.emplace_back("max-n", std::to_string(args.max_n));

  std::ostringstream csv;
  csv << manifest_comment(m) << "index," << it->header << ",result\n";
  std::size_t failures = 0;
  for (std::size_t i = 0; i < args.count; ++i) {
    gen::Rng rng = gen::stream(args.seed, i);
    const std::string row = it->row(rng, args.max_n);
    failures += row.ends_with(",fail") ? 1 : 0;
    csv << i << ',' << row << '\n';
  }
  out << csv.str();
  return failures == 0 ? Exit::ok : Exit::failed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean automata network simulator, PER decider and circuit reductions", "autonet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  auto add_network = [](CLI::App* sub, NetworkArgs& net, bool with_initial) {
    sub->add_option("--graph", net.graph, "graph file ('n m' header, then 'u v' lines)")->required();
    auto* rule = sub->add_option("--rule", net.rule, "uniform rule: bootstrap|majority|and|or");
    auto* rules = sub->add_option("--rules", net.rules_file, "rules file, one token per vertex");
    rule->excludes(rules);
    sub->add_option("--schedule", net.schedule, "'parallel' or a schedule file")->capture_default_str();
    if (with_initial) sub->add_option("--initial", net.initial, "bit string or file")->required();
  };

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "trace boundary configurations until a cycle");
  add_network(simulate, sim.net, true);
  simulate->add_option("--max-periods", sim.max_periods, "period bound (default min(2^n, 10^6))");

  PerArgs per;
  std::string observe = "block";
  auto* per_cmd = app.add_subcommand("per", "decide whether the target ever becomes active");
  add_network(per_cmd, per.net, true);
  per_cmd->add_option("--target", per.target, "vertex id or file")->required();
  per_cmd->add_option("--max-periods", per.max_periods, "period bound (default min(2^n, 10^6))");
  per_cmd->add_option("--observe", observe, "block|period")
      ->check(CLI::IsMember({"block", "period"}))
      ->capture_default_str();
  per_cmd->add_flag("--enforce-or-only", per.enforce_or_only, "reject initially active AND vertices");

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "classify an AND/OR schedule");
  add_network(classify, cls.net, false);

  CompileArgs comp;
  std::string backend = "bootstrap";
  std::string assignment;
  auto* compile_cmd = app.add_subcommand("compile", "compile a monotone circuit into a PER instance");
  compile_cmd->add_option("--circuit", comp.circuit, "netlist file")->required();
  compile_cmd->add_option("--backend", backend, "andor|bootstrap")
      ->check(CLI::IsMember({"andor", "bootstrap"}))
      ->capture_default_str();
  auto* assign_opt = compile_cmd->add_option("--assign", assignment, "input values, e.g. x1=1,x2=0");
  auto* all_opt = compile_cmd->add_flag("--all", comp.all, "verify over every assignment");
  assign_opt->excludes(all_opt);
  compile_cmd->add_option("--out", comp.out_dir, "output directory for instance files")->capture_default_str();
  compile_cmd->add_option("--exhaustion-bound", comp.exhaustion_bound, "max inputs for --all")
      ->capture_default_str();

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "seeded random checks, one CSV row per instance");
  sweep->add_option("--family", sw.family, "check family")->required();
  sweep->add_option("--count", sw.count, "number of instances")->required();
  sweep->add_option("--seed", sw.seed, "seed")->capture_default_str();
  sweep->add_option("--max-n", sw.max_n, "largest vertex count / input count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForVersion&) {
    out << tool_version << '\n';
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return Exit::error;
  }

  try {
    if (*simulate) return cmd_simulate(sim, out);
    if (*per_cmd) {
      per.observe = observe == "period" ? Observation::Period : Observation::Block;
      return cmd_per(per, out);
    }
    if (*classify) return cmd_classify(cls, out);
    if (*compile_cmd) {
      comp.backend = backend == "andor" ? Backend::AndOr : Backend::Bootstrap;
      if (*assign_opt) comp.assignment = assignment;
      return cmd_compile(comp, out);
    }
    if (*sweep) return cmd_sweep(sw, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return Exit::error;
  }
  return Exit::error;
}

}  // namespace autonet::cli
