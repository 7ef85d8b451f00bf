#pragma once

// Plancherel growth: shapes of RSK applied to i.i.d. uniform streams, with
// growth-row tracing, and the augmented growth process that also follows
// the box of a maximal entry inserted after m steps.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bump/augmented.hpp"
#include "bump/bumping.hpp"
#include "bump/stream.hpp"
#include "bump/tableau.hpp"

namespace bump {

EntrySource stream_source(const SeededStream& stream);

/// Growth steps t with first < t <= last, rows reported up to cutoff.
struct GrowthWindow {
  std::int64_t first = 0;
  std::int64_t last = 0;
  int cutoff = 0;
};

/// Row of the new box at each step of a window; rows above the cutoff are
/// reported as beyond_cutoff.
struct GrowthRowTrace {
  static constexpr int beyond_cutoff = -1;

  GrowthWindow window;
  std::vector<int> rows;

  /// Number of steps whose new box landed in row r.
  std::int64_t count(int r) const;
};

struct GrowthResult {
  YoungDiagram shape;
  std::optional<GrowthRowTrace> trace;
};

/// Shape after n steps; the trace covers the window clipped to (0, n].
GrowthResult plancherel_growth(std::int64_t n, const SeededStream& stream,
                               std::optional<GrowthWindow> window = std::nullopt);

YoungDiagram plancherel_sample(std::int64_t n, const SeededStream& stream);

struct AugmentedSnapshot {
  std::int64_t t = 0;
  AugmentedDiagram state;
};

struct AugmentedGrowth {
  RouteTrace trace;
  /// One snapshot per checkpoint reached, in checkpoint order.
  std::vector<AugmentedSnapshot> snapshots;
};

/// Augmented growth initiated at time m: the special box starts at the
/// bottom-row outer corner of the shape after m steps and follows the
/// augmented edge rule. Checkpoints must be sorted.
AugmentedGrowth augmented_growth(std::int64_t m, const SeededStream& stream, const StopCondition& stop,
                                 std::span<const std::int64_t> t_checkpoints = {});

}  // namespace bump
