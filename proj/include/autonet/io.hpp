#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "autonet/network.hpp"
#include "autonet/reductions.hpp"
#include "autonet/schedule.hpp"

namespace autonet::io {

/// Malformed input text; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Graph: "n m" then m lines "u v". '#' starts a comment everywhere.
Graph parse_graph(std::istream& in, const std::string& source = "graph");
std::string emit_graph(const Graph& graph);

// Rules: one token per vertex from {and, or, bootstrap, majority}.
std::vector<RuleKind> parse_rules(std::istream& in, std::size_t n, const std::string& source = "rules");
std::string emit_rules(std::span<const RuleKind> rules);

// Schedule: "parallel", "sequential v0 v1 ...", or one block per line.
UpdateSchedule parse_schedule(std::istream& in, std::size_t n, const std::string& source = "schedule");
std::string emit_schedule(const UpdateSchedule& schedule);

// Netlist: "input x", "and g a b", "or g a b", "output g".
MonotoneCircuit parse_circuit(std::istream& in, const std::string& source = "circuit");
std::string emit_circuit(const MonotoneCircuit& circuit);

Configuration parse_config(std::string_view bits, std::size_t n, const std::string& source = "initial");
std::string emit_config(const Configuration& config);

/// "x1=1,x2=0" (also accepts ':' and whitespace separators).
Assignment parse_assignment(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

Graph load_graph(const std::filesystem::path& path);
MonotoneCircuit load_circuit(const std::filesystem::path& path);

}  // namespace autonet::io
