#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autonet/dynamics.hpp"
#include "autonet/reductions.hpp"
#include "json.hpp"

namespace autonet::cli {

inline constexpr std::string_view tool_version = "0.1.0";

/// Exit statuses shared by every subcommand; cmd_per uses 0/1 for
/// reachable/not reachable.
enum Exit : int { ok = 0, reachable = 0, not_reachable = 1, failed = 1, error = 2 };

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> flags;
  std::string version{tool_version};

  nlohmann::ordered_json to_json() const;
};

/// Graph + rules + schedule (+ initial) as given on the command line. `rule`
/// is a uniform rule token; otherwise `rules_file` is read.
struct NetworkArgs {
  std::string graph;
  std::string rule;
  std::string rules_file;
  std::string schedule = "parallel";  // keyword or schedule file
  std::string initial;                // bit string or file
};

struct SimulateArgs {
  NetworkArgs net;
  std::optional<std::uint64_t> max_periods;
};

struct PerArgs {
  NetworkArgs net;
  std::string target;  // vertex id or file
  std::optional<std::uint64_t> max_periods;
  Observation observe = Observation::Block;
  bool enforce_or_only = false;
};

struct ClassifyArgs {
  NetworkArgs net;
};

struct CompileArgs {
  std::string circuit;
  Backend backend = Backend::Bootstrap;
  std::optional<std::string> assignment;
  bool all = false;
  std::string out_dir = ".";
  std::size_t exhaustion_bound = default_exhaustion_bound;
};

struct SweepArgs {
  std::string family;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t max_n = 12;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out);
int cmd_per(const PerArgs& args, std::ostream& out);
int cmd_classify(const ClassifyArgs& args, std::ostream& out);
int cmd_compile(const CompileArgs& args, std::ostream& out);
int cmd_sweep(const SweepArgs& args, std::ostream& out);

std::vector<std::string_view> sweep_families();

/// Parses argv, dispatches, and maps exceptions to exit status 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace autonet::cli
