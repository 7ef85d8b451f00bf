#pragma once

// Counter-based uniform streams. Entry i of trial j is a pure function of
// (master seed, j, i), so results never depend on how trials are scheduled
// across threads or in which order entries are requested.

#include <cstdint>

#include "bump/tableau.hpp"

namespace bump {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SeededStream {
 public:
  /// branch separates independent streams of one trial (0..3).
  SeededStream(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t branch = 0) noexcept;

  /// Uniform value in the open interval (0, 1) for index i >= 1.
  double value(std::int64_t i) const noexcept {
    const std::uint64_t h = splitmix64(key_ + static_cast<std::uint64_t>(i) * 0xD1B54A32D192ED03ULL);
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
  }
  /// Tiebreak carrying the index, so exact value ties stay deterministic.
  std::uint64_t tiebreak(std::int64_t i) const noexcept {
    return static_cast<std::uint64_t>(i) | (branch_ << 62);
  }
  Entry entry(std::int64_t i) const { return Entry::finite(value(i), tiebreak(i)); }

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t trial() const noexcept { return trial_; }
  std::uint64_t branch() const noexcept { return branch_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t trial_;
  std::uint64_t branch_;
  std::uint64_t key_;
};

}  // namespace bump
