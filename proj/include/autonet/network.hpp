#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autonet/configuration.hpp"

namespace autonet {

using Vertex = std::uint32_t;

/// Raised for every contract violation in the library. Carries the offending
/// vertex when one exists.
class Error : public std::invalid_argument {
 public:
  explicit Error(const std::string& what, std::optional<Vertex> vertex = std::nullopt)
      : std::invalid_argument(what), vertex_(vertex) {}

  std::optional<Vertex> vertex() const noexcept { return vertex_; }

 private:
  std::optional<Vertex> vertex_;
};

/// Simple undirected graph on {0..n-1}. Adjacency lists are sorted and
/// duplicate-free; construction goes through validate_graph.
class Graph {
 public:
  Graph() = default;

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t max_degree() const noexcept;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph validate_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph validate_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

enum class RuleKind : std::uint8_t { Bootstrap, SimpleMajority, And, Or };

std::string_view to_string(RuleKind rule) noexcept;
std::optional<RuleKind> parse_rule(std::string_view token) noexcept;

/// Local transition function of one vertex, given the number of active
/// neighbours. Majority comparisons are done as 2*active vs degree.
int eval_local_rule(RuleKind rule, int self_state, std::size_t active_neighbors, std::size_t degree);

class NetworkSpec {
 public:
  NetworkSpec() = default;

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }
  RuleKind rule(Vertex v) const { return rules_.at(v); }
  std::span<const RuleKind> rules() const noexcept { return rules_; }

  const std::vector<Vertex>& and_set() const noexcept { return and_set_; }
  const std::vector<Vertex>& or_set() const noexcept { return or_set_; }

  /// Every vertex is And or Or.
  bool is_and_or() const noexcept { return and_set_.size() + or_set_.size() == size(); }
  bool is_uniform(RuleKind rule) const noexcept;

  friend bool operator==(const NetworkSpec& a, const NetworkSpec& b) {
    return a.graph_ == b.graph_ && a.rules_ == b.rules_;
  }

 private:
  friend NetworkSpec make_network(Graph graph, std::vector<RuleKind> rules);

  Graph graph_;
  std::vector<RuleKind> rules_;
  std::vector<Vertex> and_set_;
  std::vector<Vertex> or_set_;
};

NetworkSpec make_network(Graph graph, std::vector<RuleKind> rules);

/// Returns config unchanged. With enforce_or_only on an AND/OR network, an
/// initially active And vertex is rejected.
const Configuration& validate_initial_config(const NetworkSpec& network, const Configuration& config,
                                             bool enforce_or_only);

}  // namespace autonet
