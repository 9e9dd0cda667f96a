#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "autonet/network.hpp"

namespace autonet {

using Block = std::vector<Vertex>;

/// Periodic update word: blocks applied in order, each block synchronously.
/// length() counts vertex occurrences, so the one-block parallel schedule has
/// length n.
class UpdateSchedule {
 public:
  UpdateSchedule() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t length() const noexcept { return length_; }

  /// Block index holding v; defined only when every vertex appears once.
  std::optional<std::size_t> position(Vertex v) const;

  friend bool operator==(const UpdateSchedule& a, const UpdateSchedule& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  friend UpdateSchedule validate_schedule(std::size_t n, std::vector<Block> blocks);

  std::size_t n_ = 0;
  std::vector<Block> blocks_;
  std::size_t length_ = 0;
  std::vector<std::size_t> position_;  // empty unless length_ == n_
};

UpdateSchedule make_parallel(std::size_t n);
UpdateSchedule make_sequential(std::span<const Vertex> order);
UpdateSchedule validate_schedule(std::size_t n, std::vector<Block> blocks);

enum class ScheduleCase { LongWord, NcCondition, Interleaved };

std::string_view to_string(ScheduleCase c) noexcept;

/// AND vertices updated strictly between two of their OR neighbours, as
/// (and_vertex, or_neighbor) pairs for every OR neighbour in another block.
std::vector<std::pair<Vertex, Vertex>> nc_violations(const NetworkSpec& network, const UpdateSchedule& schedule);

/// Every AND vertex is updated no later than all its OR neighbours, or no
/// earlier than all of them. Requires |w| = n and an AND/OR network.
bool check_nc_condition(const NetworkSpec& network, const UpdateSchedule& schedule);

ScheduleCase classify_schedule(const NetworkSpec& network, const UpdateSchedule& schedule);

}  // namespace autonet
