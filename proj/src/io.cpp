#include "autonet/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <fstream>
#include <sstream>

namespace autonet::io {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : Error(line > 0 ? source + ":" + std::to_string(line) + ": " + message : source + ": " + message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::uint64_t to_uint(const std::string& tok, const std::string& source, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(source, line, "expected a non-negative integer, got '" + tok + "'");
  }
  return value;
}

Vertex to_vertex(const std::string& tok, std::size_t n, const std::string& source, std::size_t line) {
  const auto v = to_uint(tok, source, line);
  if (v >= n) throw ParseError(source, line, "vertex " + tok + " out of range for n = " + std::to_string(n));
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(source, 0, "missing 'n m' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(source, header.number, "header must be 'n m'");
  const auto n = to_uint(header.tokens[0], source, header.number);
  const auto m = to_uint(header.tokens[1], source, header.number);
  if (n == 0) throw ParseError(source, header.number, "vertex count must be at least 1");
  if (lines.size() - 1 != m) {
    throw ParseError(source, header.number,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(source, l.number, "edge line must be 'u v'");
    const Vertex u = to_vertex(l.tokens[0], n, source, l.number);
    const Vertex v = to_vertex(l.tokens[1], n, source, l.number);
    if (u == v) throw ParseError(source, l.number, "self-loop at vertex " + l.tokens[0]);
    edges.emplace_back(u, v);
  }
  return validate_graph(n, edges);
}

std::string emit_graph(const Graph& graph) {
  std::ostringstream out;
  out << graph.size() << ' ' << graph.edge_count() << '\n';
  for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<RuleKind> parse_rules(std::istream& in, std::size_t n, const std::string& source) {
  std::vector<RuleKind> rules;
  for (const auto& l : tokenize(in)) {
    for (const auto& tok : l.tokens) {
      auto rule = parse_rule(tok);
      if (!rule) throw ParseError(source, l.number, "unknown rule '" + tok + "'");
      rules.push_back(*rule);
    }
  }
  if (rules.size() != n) {
    throw ParseError(source, 0, std::to_string(rules.size()) + " rules for " + std::to_string(n) + " vertices");
  }
  return rules;
}

std::string emit_rules(std::span<const RuleKind> rules) {
  std::string out;
  for (RuleKind r : rules) {
    out += to_string(r);
    out += '\n';
  }
  return out;
}

UpdateSchedule parse_schedule(std::istream& in, std::size_t n, const std::string& source) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(source, 0, "empty schedule");
  const auto& first = lines.front();
  try {
    if (first.tokens[0] == "parallel") {
      if (lines.size() != 1 || first.tokens.size() != 1) {
        throw ParseError(source, first.number, "'parallel' takes no arguments");
      }
      return make_parallel(n);
    }
    if (first.tokens[0] == "sequential") {
      if (lines.size() != 1) throw ParseError(source, lines[1].number, "unexpected line after 'sequential'");
      std::vector<Vertex> order;
      for (std::size_t i = 1; i < first.tokens.size(); ++i) {
        order.push_back(to_vertex(first.tokens[i], n, source, first.number));
      }
      if (order.size() != n) {
        throw ParseError(source, first.number,
                         "sequential order lists " + std::to_string(order.size()) + " of " + std::to_string(n) +
                             " vertices");
      }
      return make_sequential(order);
    }
    std::vector<Block> blocks;
    for (const auto& l : lines) {
      Block block;
      for (const auto& tok : l.tokens) block.push_back(to_vertex(tok, n, source, l.number));
      blocks.push_back(std::move(block));
    }
    return validate_schedule(n, std::move(blocks));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, 0, e.what());
  }
}

std::string emit_schedule(const UpdateSchedule& schedule) {
  const std::size_t n = schedule.vertex_count();
  if (schedule.block_count() == 1 && schedule.length() == n) return "parallel\n";
  std::ostringstream out;
  if (schedule.block_count() == n && schedule.length() == n) {
    out << "sequential";
    for (const auto& b : schedule.blocks()) out << ' ' << b.front();
    out << '\n';
    return out.str();
  }
  for (const auto& b : schedule.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
  return out.str();
}

MonotoneCircuit parse_circuit(std::istream& in, const std::string& source) {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  std::string output;
  std::size_t output_line = 0;
  std::map<std::string, std::size_t> defined;
  auto define = [&](const std::string& name, std::size_t line) {
    if (!defined.emplace(name, line).second) throw ParseError(source, line, "signal '" + name + "' defined twice");
  };
  for (const auto& l : tokenize(in)) {
    const auto& t = l.tokens;
    if (t[0] == "input") {
      if (t.size() != 2) throw ParseError(source, l.number, "expected 'input <name>'");
      define(t[1], l.number);
      inputs.push_back(t[1]);
    } else if (t[0] == "and" || t[0] == "or") {
      if (t.size() != 4) throw ParseError(source, l.number, "expected '" + t[0] + " <name> <a> <b>'");
      for (const auto* operand : {&t[2], &t[3]}) {
        if (!defined.contains(*operand)) {
          throw ParseError(source, l.number,
                           "operand '" + *operand + "' is not defined earlier (netlists must be acyclic)");
        }
      }
      define(t[1], l.number);
      gates.push_back({t[1], t[0] == "and" ? GateKind::And2 : GateKind::Or2, t[2], t[3]});
    } else if (t[0] == "output") {
      if (t.size() != 2) throw ParseError(source, l.number, "expected 'output <name>'");
      if (output_line != 0) throw ParseError(source, l.number, "second output line");
      output = t[1];
      output_line = l.number;
    } else {
      throw ParseError(source, l.number, "unknown keyword '" + t[0] + "'");
    }
  }
  if (output_line == 0) throw ParseError(source, 0, "missing 'output' line");
  if (!defined.contains(output)) throw ParseError(source, output_line, "output '" + output + "' is not defined");
  return MonotoneCircuit(std::move(inputs), std::move(gates), std::move(output));
}

std::string emit_circuit(const MonotoneCircuit& circuit) {
  std::ostringstream out;
  for (const auto& name : circuit.inputs()) out << "input " << name << '\n';
  for (const auto& g : circuit.gates()) {
    out << (g.kind == GateKind::And2 ? "and " : "or ") << g.name << ' ' << g.lhs << ' ' << g.rhs << '\n';
  }
  out << "output " << circuit.output() << '\n';
  return out.str();
}

Configuration parse_config(std::string_view bits, std::size_t n, const std::string& source) {
  while (!bits.empty() && std::isspace(static_cast<unsigned char>(bits.back()))) bits.remove_suffix(1);
  while (!bits.empty() && std::isspace(static_cast<unsigned char>(bits.front()))) bits.remove_prefix(1);
  if (bits.size() != n) {
    throw ParseError(source, 0,
                     "configuration has length " + std::to_string(bits.size()) + ", expected " + std::to_string(n));
  }
  try {
    return Configuration::from_string(bits);
  } catch (const Error& e) {
    throw ParseError(source, 0, e.what());
  }
}

std::string emit_config(const Configuration& config) { return config.to_string() + '\n'; }

Assignment parse_assignment(std::string_view text) {
  Assignment a;
  std::string item;
  auto flush = [&] {
    if (item.empty()) return;
    const auto eq = item.find_first_of("=:");
    if (eq == std::string::npos || eq == 0 || eq + 2 != item.size() || (item[eq + 1] != '0' && item[eq + 1] != '1')) {
      throw ParseError("assignment", 0, "expected name=0 or name=1, got '" + item + "'");
    }
    const std::string name = item.substr(0, eq);
    if (!a.emplace(name, item[eq + 1] - '0').second) {
      throw ParseError("assignment", 0, "input '" + name + "' assigned twice");
    }
    item.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}') {
      flush();
    } else {
      item += c;
    }
  }
  flush();
  return a;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << contents;
}

Graph load_graph(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_graph(in, path.string());
}

MonotoneCircuit load_circuit(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  try {
    return parse_circuit(in, path.string());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

}  // namespace autonet::io
