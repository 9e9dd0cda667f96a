#include "autonet/network.hpp"

#include <algorithm>

namespace autonet {

Configuration Configuration::from_string(std::string_view bits) {
  Configuration config(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      config.set(i);
    } else if (bits[i] != '0') {
      throw Error("configuration: character '" + std::string(1, bits[i]) + "' at position " + std::to_string(i) +
                  " is not 0 or 1");
    }
  }
  return config;
}

std::string Configuration::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph validate_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n == 0) throw Error("graph: vertex count must be at least 1");
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n) throw Error("graph: vertex id " + std::to_string(u) + " out of range", u);
    if (v >= n) throw Error("graph: vertex id " + std::to_string(v) + " out of range", v);
    if (u == v) throw Error("graph: self-loop at vertex " + std::to_string(u), u);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    degree_sum += adj.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::string_view to_string(RuleKind rule) noexcept {
  switch (rule) {
    case RuleKind::Bootstrap:
      return "bootstrap";
    case RuleKind::SimpleMajority:
      return "majority";
    case RuleKind::And:
      return "and";
    case RuleKind::Or:
      return "or";
  }
  return "?";
}

std::optional<RuleKind> parse_rule(std::string_view token) noexcept {
  if (token == "bootstrap") return RuleKind::Bootstrap;
  if (token == "majority") return RuleKind::SimpleMajority;
  if (token == "and") return RuleKind::And;
  if (token == "or") return RuleKind::Or;
  return std::nullopt;
}

int eval_local_rule(RuleKind rule, int self_state, std::size_t active_neighbors, std::size_t degree) {
  if (active_neighbors > degree) {
    throw Error("eval_local_rule: " + std::to_string(active_neighbors) + " active neighbours exceed degree " +
                std::to_string(degree));
  }
  if (self_state != 0 && self_state != 1) throw Error("eval_local_rule: state must be 0 or 1");
  const std::size_t twice = 2 * active_neighbors;
  switch (rule) {
    case RuleKind::Bootstrap:
      return (self_state == 1 || twice > degree) ? 1 : 0;
    case RuleKind::SimpleMajority:
      if (twice > degree) return 1;
      if (twice < degree) return 0;
      return self_state;
    case RuleKind::And:
      return active_neighbors == degree ? 1 : 0;
    case RuleKind::Or:
      return active_neighbors >= 1 ? 1 : 0;
  }
  return self_state;
}

bool NetworkSpec::is_uniform(RuleKind rule) const noexcept {
  return std::all_of(rules_.begin(), rules_.end(), [rule](RuleKind r) { return r == rule; });
}

NetworkSpec make_network(Graph graph, std::vector<RuleKind> rules) {
  if (rules.size() != graph.size()) {
    throw Error("network: " + std::to_string(rules.size()) + " rules for " + std::to_string(graph.size()) +
                " vertices");
  }
  NetworkSpec net;
  net.graph_ = std::move(graph);
  net.rules_ = std::move(rules);
  for (Vertex v = 0; v < net.rules_.size(); ++v) {
    if (net.rules_[v] == RuleKind::And) net.and_set_.push_back(v);
    if (net.rules_[v] == RuleKind::Or) net.or_set_.push_back(v);
  }
  return net;
}

const Configuration& validate_initial_config(const NetworkSpec& network, const Configuration& config,
                                             bool enforce_or_only) {
  if (config.size() != network.size()) {
    throw Error("configuration has length " + std::to_string(config.size()) + ", network has " +
                std::to_string(network.size()) + " vertices");
  }
  if (enforce_or_only && network.is_and_or()) {
    for (Vertex v : network.and_set()) {
      if (config.test(v)) throw Error("initially active vertex " + std::to_string(v) + " is an AND vertex", v);
    }
  }
  return config;
}

}  // namespace autonet
