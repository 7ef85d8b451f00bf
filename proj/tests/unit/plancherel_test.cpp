#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "bump/plancherel.hpp"
#include "test_util.hpp"

namespace bump {
namespace {

TEST(SeededStream, PureFunctionOfSeedTrialAndIndex) {
  const SeededStream a(42, 7);
  const SeededStream b(42, 7);
  EXPECT_EQ(a.value(100), b.value(100));
  EXPECT_EQ(a.value(5), a.value(5));
  EXPECT_NE(a.value(1), SeededStream(42, 8).value(1));
  EXPECT_NE(a.value(1), SeededStream(43, 7).value(1));
  EXPECT_NE(a.value(1), SeededStream(42, 7, 1).value(1));
  EXPECT_NE(a.tiebreak(3), SeededStream(42, 7, 1).tiebreak(3));
  for (std::int64_t i = 1; i < 1000; ++i) {
    EXPECT_GT(a.value(i), 0.0);
    EXPECT_LT(a.value(i), 1.0);
  }
}

TEST(SeededStream, RoughlyUniform) {
  const SeededStream s(1, 0);
  double sum = 0;
  const int n = 100'000;
  int below_tenth = 0;
  for (int i = 1; i <= n; ++i) {
    sum += s.value(i);
    below_tenth += s.value(i) < 0.1;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(below_tenth / static_cast<double>(n), 0.1, 0.005);
}

TEST(PlancherelGrowth, SmallSizes) {
  const SeededStream s(9, 0);
  EXPECT_TRUE(plancherel_sample(0, s).empty());
  EXPECT_EQ(plancherel_sample(1, s), YoungDiagram({1}));
  EXPECT_EQ(plancherel_sample(25, s).size(), 25);
  EXPECT_THROW(plancherel_growth(-1, s), std::invalid_argument);
}

TEST(PlancherelGrowth, SizeFourMatchesHookLengthWeights) {
  std::map<std::vector<int>, int> freq;
  const int trials = 100'000;
  for (int j = 0; j < trials; ++j) ++freq[plancherel_sample(4, SeededStream(2024, static_cast<std::uint64_t>(j))).rows()];
  for (const auto& shape : testing::partitions_of(4)) {
    const double dim = testing::hook_length_dimension(shape);
    EXPECT_NEAR(freq[shape] / static_cast<double>(trials), dim * dim / 24.0, 0.01) << shape.size();
  }
  EXPECT_EQ(freq.size(), 5U);
}

TEST(PlancherelGrowth, RowTraceMatchesShapeDifferences) {
  const SeededStream s(5, 3);
  const GrowthWindow window{20, 120, 2};
  const auto result = plancherel_growth(150, s, window);
  ASSERT_TRUE(result.trace.has_value());
  ASSERT_EQ(result.trace->rows.size(), 100U);
  for (std::int64_t t = 21; t <= 120; ++t) {
    const Box b = *added_box(plancherel_sample(t - 1, s), plancherel_sample(t, s));
    const int expected = b.y <= 2 ? b.y : GrowthRowTrace::beyond_cutoff;
    EXPECT_EQ(result.trace->rows[static_cast<std::size_t>(t - 21)], expected);
  }
  std::int64_t total = result.trace->count(GrowthRowTrace::beyond_cutoff);
  for (int r = 0; r <= 2; ++r) total += result.trace->count(r);
  EXPECT_EQ(total, 100);
}

TEST(AugmentedGrowth, InitialConditions) {
  const SeededStream s(11, 4);
  const StopCondition stop{40};
  const auto g = augmented_growth(15, s, stop);
  EXPECT_EQ(g.trace.events.front(), (RouteEvent{15, Box{plancherel_sample(15, s).row(0), 0}}));

  const auto zero = augmented_growth(0, s, StopCondition{10, 0});
  const auto hits = hitting_times(zero.trace, 0);
  EXPECT_EQ(hits[0].y, 0);
  EXPECT_EQ(hits[0].t, 0);
}

TEST(AugmentedGrowth, MatchesSentinelRun) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const SeededStream s(rng(), static_cast<std::uint64_t>(trial));
    const auto m = static_cast<std::int64_t>(rng() % 21);
    const auto t_max = m + static_cast<std::int64_t>(rng() % (61 - m));
    const StopCondition stop{t_max};
    const auto g = augmented_growth(m, s, stop);
    const auto sentinel = sentinel_trajectory(stream_source(s), m, stop);
    ASSERT_EQ(g.trace.events, sentinel.events);
    ASSERT_EQ(g.trace.column_lengths, sentinel.column_lengths);
  }
}

TEST(AugmentedGrowth, RouteGeometryAndSnapshots) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const SeededStream s(rng(), 0);
    const std::int64_t m = 30;
    const std::vector<std::int64_t> checkpoints{10, 30, 100, 400, 2000};
    const auto g = augmented_growth(m, s, StopCondition{2000}, checkpoints);
    const auto& ev = g.trace.events;
    for (std::size_t i = 1; i < ev.size(); ++i) {
      EXPECT_EQ(ev[i].box.y, ev[i - 1].box.y + 1);
      EXPECT_LE(ev[i].box.x, ev[i - 1].box.x);
      EXPECT_GT(ev[i].t, ev[i - 1].t);
    }
    // every event after the first is a bump, one row each
    EXPECT_EQ(static_cast<int>(ev.size()) - 1, g.trace.final_box().y);

    ASSERT_EQ(g.snapshots.size(), 4U);
    for (const auto& snap : g.snapshots) {
      EXPECT_EQ(snap.state.regular().size(), snap.t);
      EXPECT_EQ(snap.state.special(), g.trace.box_at(snap.t));
      EXPECT_EQ(snap.state.regular(), plancherel_sample(snap.t, s));
    }
  }
}

}  // namespace
}  // namespace bump
