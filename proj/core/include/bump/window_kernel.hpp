#pragma once

// Fast exact simulations that keep only the bottom rows of an insertion
// tableau. Insertion never moves entries downwards, so rows 0..k-1 evolve
// independently of everything above them.
//
// column_window_trajectory runs on the complemented stream (value -> -value).
// Complementing transposes every prefix shape, so the tracked box at
// (x, y) appears at row x, column y of the complemented shape, and only rows
// 0..x matter. Since x never increases, the window only shrinks and long
// runs toward column 0 stay cheap.
//
// row_window_trajectory runs on the stream itself and keeps a fixed number
// of rows, replaying from scratch with twice as many whenever the tracked
// box climbs past the window. Suited to runs where the box stays low.
//
// Both produce traces identical to trajectory_of_infinity on the same stream.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "bump/bumping.hpp"
#include "bump/plancherel.hpp"
#include "bump/stream.hpp"

namespace bump {

struct Key {
  double value = 0.0;
  std::uint64_t tiebreak = 0;

  friend constexpr auto operator<=>(const Key&, const Key&) = default;
};

/// The bottom rows of an insertion tableau.
class BottomRows {
 public:
  explicit BottomRows(int num_rows);

  /// Inserts k; returns the row of the new box, or num_rows() when the
  /// bumped entry leaves the window.
  int insert(Key k);

  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  int row_length(int r) const noexcept { return static_cast<int>(rows_[static_cast<std::size_t>(r)].size()); }
  /// Forgets every row from r upwards.
  void truncate(int r);

 private:
  std::vector<std::vector<Key>> rows_;
};

RouteTrace column_window_trajectory(const SeededStream& stream, std::int64_t m, const StopCondition& stop);

/// Key of stream entry i >= 1. Keys must be distinct.
using KeySource = std::function<Key(std::int64_t)>;
RouteTrace column_window_trajectory(const KeySource& keys, std::int64_t m, const StopCondition& stop);

RouteTrace row_window_trajectory(const SeededStream& stream, std::int64_t m, const StopCondition& stop,
                                 int initial_rows = 4);

/// Growth-row trace of plancherel_growth, from the bottom cutoff+1 rows only.
GrowthRowTrace trace_growth_rows(const SeededStream& stream, const GrowthWindow& window);

}  // namespace bump
