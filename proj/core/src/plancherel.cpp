#include "bump/plancherel.hpp"

#include <algorithm>
#include <stdexcept>

namespace bump {

EntrySource stream_source(const SeededStream& stream) {
  return [stream](std::int64_t i) { return stream.entry(i); };
}

std::int64_t GrowthRowTrace::count(int r) const {
  return std::count(rows.begin(), rows.end(), r);
}

GrowthResult plancherel_growth(std::int64_t n, const SeededStream& stream, std::optional<GrowthWindow> window) {
  if (n < 0) throw std::invalid_argument("plancherel_growth: n must be non-negative");
  if (window && (window->cutoff < 0 || window->first < 0 || window->last < window->first))
    throw std::invalid_argument("plancherel_growth: invalid window");
  InsertionTableau p;
  GrowthResult out;
  if (window) out.trace = GrowthRowTrace{*window, {}};
  for (std::int64_t t = 1; t <= n; ++t) {
    const Box b = p.insert(stream.entry(t));
    if (window && t > window->first && t <= window->last)
      out.trace->rows.push_back(b.y <= window->cutoff ? b.y : GrowthRowTrace::beyond_cutoff);
  }
  out.shape = p.shape();
  return out;
}

YoungDiagram plancherel_sample(std::int64_t n, const SeededStream& stream) {
  return plancherel_growth(n, stream).shape;
}

AugmentedGrowth augmented_growth(std::int64_t m, const SeededStream& stream, const StopCondition& stop,
                                 std::span<const std::int64_t> t_checkpoints) {
  if (!std::is_sorted(t_checkpoints.begin(), t_checkpoints.end()))
    throw std::invalid_argument("augmented_growth: checkpoints must be sorted");
  AugmentedGrowth out;
  std::size_t next = 0;
  const auto observer = [&](std::int64_t t, const InsertionTableau& p, Box special) {
    while (next < t_checkpoints.size() && t_checkpoints[next] < t) ++next;  // before m: unreachable
    if (next < t_checkpoints.size() && t_checkpoints[next] == t) {
      out.snapshots.push_back({t, AugmentedDiagram(p.shape(), special)});
      ++next;
    }
  };
  out.trace = trajectory_of_infinity(stream_source(stream), m, stop,
                                     t_checkpoints.empty() ? TrajectoryObserver{} : TrajectoryObserver(observer));
  return out;
}

}  // namespace bump
