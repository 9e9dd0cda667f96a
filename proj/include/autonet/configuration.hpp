#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace autonet {

/// Length-n assignment of {0,1}, packed into 64-bit words. Bits past n in the
/// last word are always zero so that equality and hashing work word-wise.
class Configuration {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Configuration() = default;
  explicit Configuration(std::size_t n) : size_(n), words_((n + word_bits - 1) / word_bits, 0) {}

  /// Parses a string of '0'/'1' characters; throws autonet::Error otherwise.
  static Configuration from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  int operator[](std::size_t i) const noexcept { return test(i) ? 1 : 0; }

  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }
  void reset(std::size_t i) noexcept { set(i, false); }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool none() const noexcept { return count() == 0; }

  const std::vector<Word>& words() const noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(c.size());
    for (auto w : c.words()) {
      h ^= std::hash<Configuration::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace autonet
