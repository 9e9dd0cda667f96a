#include "autonet/schedule.hpp"

#include <algorithm>
#include <string>

namespace autonet {

std::optional<std::size_t> UpdateSchedule::position(Vertex v) const {
  if (position_.empty() || v >= n_) return std::nullopt;
  return position_[v];
}

UpdateSchedule make_parallel(std::size_t n) {
  if (n == 0) throw Error("schedule: vertex count must be at least 1");
  Block all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  return validate_schedule(n, {std::move(all)});
}

UpdateSchedule make_sequential(std::span<const Vertex> order) {
  const std::size_t n = order.size();
  if (n == 0) throw Error("schedule: empty sequential order");
  std::vector<bool> seen(n, false);
  std::vector<Block> blocks;
  blocks.reserve(n);
  for (Vertex v : order) {
    if (v >= n) throw Error("sequential order: vertex " + std::to_string(v) + " out of range", v);
    if (seen[v]) throw Error("sequential order: vertex " + std::to_string(v) + " repeated", v);
    seen[v] = true;
    blocks.push_back({v});
  }
  return validate_schedule(n, std::move(blocks));
}

UpdateSchedule validate_schedule(std::size_t n, std::vector<Block> blocks) {
  if (n == 0) throw Error("schedule: vertex count must be at least 1");
  UpdateSchedule s;
  s.n_ = n;
  std::vector<std::size_t> occurrences(n, 0);
  std::vector<std::size_t> last_block(n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto& block = blocks[b];
    if (block.empty()) throw Error("schedule: block " + std::to_string(b) + " is empty");
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
      const Vertex v = block[i];
      if (v >= n) throw Error("schedule: vertex " + std::to_string(v) + " out of range", v);
      if (i > 0 && block[i - 1] == v) {
        throw Error("schedule: block " + std::to_string(b) + " lists vertex " + std::to_string(v) + " twice", v);
      }
      ++occurrences[v];
      last_block[v] = b;
    }
    s.length_ += block.size();
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occurrences[v] == 0) throw Error("schedule: vertex " + std::to_string(v) + " is never updated", v);
  }
  if (s.length_ == n) s.position_ = std::move(last_block);
  s.blocks_ = std::move(blocks);
  return s;
}

std::string_view to_string(ScheduleCase c) noexcept {
  switch (c) {
    case ScheduleCase::LongWord:
      return "LongWord";
    case ScheduleCase::NcCondition:
      return "NcCondition";
    case ScheduleCase::Interleaved:
      return "Interleaved";
  }
  return "?";
}

namespace {

void require_classifiable(const NetworkSpec& network, const UpdateSchedule& schedule) {
  if (schedule.vertex_count() != network.size()) {
    throw Error("schedule covers " + std::to_string(schedule.vertex_count()) + " vertices, network has " +
                std::to_string(network.size()));
  }
  if (!network.is_and_or()) throw Error("schedule classification needs a network of AND/OR rules only");
}

}  // namespace

std::vector<std::pair<Vertex, Vertex>> nc_violations(const NetworkSpec& network, const UpdateSchedule& schedule) {
  require_classifiable(network, schedule);
  if (schedule.length() != network.size()) {
    throw Error("NC condition needs |w| = n; schedule has length " + std::to_string(schedule.length()));
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  const auto& g = network.graph();
  for (Vertex v : network.and_set()) {
    const std::size_t pv = *schedule.position(v);
    bool before = false;  // some OR neighbour strictly earlier
    bool after = false;   // some OR neighbour strictly later
    for (Vertex u : g.neighbors(v)) {
      if (network.rule(u) != RuleKind::Or) continue;
      const std::size_t pu = *schedule.position(u);
      before |= pu < pv;
      after |= pu > pv;
    }
    if (!(before && after)) continue;
    for (Vertex u : g.neighbors(v)) {
      if (network.rule(u) == RuleKind::Or && *schedule.position(u) != pv) out.emplace_back(v, u);
    }
  }
  return out;
}

bool check_nc_condition(const NetworkSpec& network, const UpdateSchedule& schedule) {
  return nc_violations(network, schedule).empty();
}

ScheduleCase classify_schedule(const NetworkSpec& network, const UpdateSchedule& schedule) {
  require_classifiable(network, schedule);
  if (schedule.length() > network.size()) return ScheduleCase::LongWord;
  return check_nc_condition(network, schedule) ? ScheduleCase::NcCondition : ScheduleCase::Interleaved;
}

}  // namespace autonet
