#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bump/augmented.hpp"
#include "test_util.hpp"

namespace bump {
namespace {

using testing::random_entries;

InsertionTableau with_infinity(std::span<const Entry> w, std::size_t m) {
  InsertionTableau t;
  for (std::size_t i = 0; i < m; ++i) t.insert(w[i]);
  t.insert(Entry::plus_infinity());
  for (std::size_t i = m; i < w.size(); ++i) t.insert(w[i]);
  return t;
}

InsertionTableau without_infinity(const InsertionTableau& t) {
  auto rows = t.rows();
  for (auto& r : rows)
    if (r.back().is_plus_infinity()) r.pop_back();
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return InsertionTableau(std::move(rows));
}

std::vector<YoungDiagram> random_growth(std::mt19937_64& rng, YoungDiagram start, int steps) {
  std::vector<YoungDiagram> path{start};
  for (int i = 0; i < steps; ++i) {
    const auto corners = path.back().outer_corners();
    path.push_back(path.back().with_box(corners[rng() % corners.size()]));
  }
  return path;
}

TEST(AugmentedDiagram, SpecialBoxMustBeAnOuterCorner) {
  EXPECT_NO_THROW(AugmentedDiagram(YoungDiagram({2, 1}), Box{2, 0}));
  EXPECT_THROW(AugmentedDiagram(YoungDiagram({3, 1}), Box{2, 0}), std::invalid_argument);
  EXPECT_THROW(AugmentedDiagram(YoungDiagram({2, 2}), Box{1, 2}), std::invalid_argument);
}

TEST(AugmentedShape, Examples) {
  InsertionTableau single({{Entry::plus_infinity()}});
  EXPECT_EQ(augmented_shape(single), AugmentedDiagram(YoungDiagram{}, Box{0, 0}));

  auto t = testing::example_tableau();
  t.insert(Entry::plus_infinity());
  EXPECT_EQ(augmented_shape(t), AugmentedDiagram(YoungDiagram({4, 3, 2}), Box{4, 0}));

  EXPECT_THROW(augmented_shape(testing::example_tableau()), std::invalid_argument);
  EXPECT_THROW(t.insert(Entry::plus_infinity()), std::invalid_argument);
  InsertionTableau two({{Entry::finite(1), Entry::plus_infinity()}, {Entry::plus_infinity()}});
  EXPECT_THROW(augmented_shape(two), std::invalid_argument);
}

TEST(AugmentedEdge, Examples) {
  const AugmentedDiagram a(YoungDiagram({2, 1}), Box{2, 0});

  const AugmentedDiagram bumped(YoungDiagram({3, 1}), Box{1, 1});
  EXPECT_TRUE(is_edge(a, bumped));
  EXPECT_TRUE(is_bump(a, bumped));
  EXPECT_EQ(step(a, Box{2, 0}), bumped);

  const AugmentedDiagram quiet(YoungDiagram({2, 2}), Box{2, 0});
  EXPECT_TRUE(is_edge(a, quiet));
  EXPECT_FALSE(is_bump(a, quiet));
  EXPECT_EQ(step(a, Box{1, 1}), quiet);

  EXPECT_FALSE(is_edge(a, AugmentedDiagram(YoungDiagram({3, 1}), Box{0, 2})));
  EXPECT_FALSE(is_edge(a, AugmentedDiagram(YoungDiagram({3, 1}), Box{3, 0})));
  EXPECT_FALSE(is_edge(a, AugmentedDiagram(YoungDiagram({2, 1, 1}), Box{1, 1})));
  EXPECT_FALSE(is_edge(a, AugmentedDiagram(YoungDiagram({4, 1}), Box{1, 1})));

  EXPECT_THROW(step(a, Box{1, 0}), std::invalid_argument);
  EXPECT_THROW(step(a, Box{0, 3}), std::invalid_argument);
}

TEST(AugmentedEdge, StepAlwaysProducesAnEdge) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto path = random_growth(rng, YoungDiagram{}, 40);
    AugmentedDiagram a(path[10], path[10].outer_corners()[rng() % path[10].outer_corners().size()]);
    for (std::size_t i = 11; i < path.size(); ++i) {
      const auto next = step(a, *added_box(path[i - 1], path[i]));
      EXPECT_TRUE(is_edge(a, next));
      // no other special box over the same regular diagram is a successor
      for (Box other : next.regular().outer_corners())
        if (other != next.special()) EXPECT_FALSE(is_edge(a, AugmentedDiagram(next.regular(), other)));
      a = next;
    }
  }
}

TEST(StepExtended, Examples) {
  const ExtendedNode node{2, YoungDiagram({2, 2, 1})};
  const auto grown = step_extended(node, Box{2, 0});
  EXPECT_EQ(grown.regular, YoungDiagram({3, 2, 1}));
  EXPECT_EQ(grown.x, 2);

  const auto other = step_extended(node, Box{1, 2});
  EXPECT_EQ(other.x, 2);
  EXPECT_EQ(other.regular, YoungDiagram({2, 2, 2}));

  // the bottom row grows past x = 3, leaving row 1 as the longest row <= 3
  EXPECT_EQ(step_extended(ExtendedNode{3, YoungDiagram({3, 1})}, Box{3, 0}).x, 1);
  EXPECT_EQ(step_extended(ExtendedNode{0, YoungDiagram{}}, Box{0, 0}).x, 0);
}

TEST(StepExtended, AgreesWithStepOnAugmentedDiagrams) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto path = random_growth(rng, YoungDiagram{}, 50);
    AugmentedDiagram a(path[5], Box{path[5].row(0), 0});
    ExtendedNode node{a.special().x, a.regular()};
    for (std::size_t i = 6; i < path.size(); ++i) {
      const Box b = *added_box(path[i - 1], path[i]);
      a = step(a, b);
      node = step_extended(node, b);
      EXPECT_EQ(node.x, a.special().x);
      EXPECT_EQ(node.regular, a.regular());
    }
  }
}

TEST(WhyTheBump, InsertionMovesInfinityByTheAugmentedRule) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto w = random_entries(rng, 1 + rng() % 40);
    const std::size_t m = rng() % (w.size() + 1);
    const auto t = with_infinity(w, m);
    const Entry x = Entry::finite(std::uniform_real_distribution<double>(0, 1)(rng), 1000);

    InsertionTableau regular = without_infinity(t);
    const Box new_box = regular.insert(x);
    InsertionTableau grown = t;
    grown.insert(x);
    ASSERT_EQ(augmented_shape(grown), step(augmented_shape(t), new_box));
  }
}

TEST(LiftPath, SpecialBoxAwayFromGrowthNeverMoves) {
  const std::vector<YoungDiagram> path{YoungDiagram({1}), YoungDiagram({1, 1}), YoungDiagram({1, 1, 1})};
  const auto lift = lift_path(AugmentedDiagram(path[0], Box{1, 0}), path);
  ASSERT_EQ(lift.size(), 3U);
  for (const auto& a : lift) EXPECT_EQ(a.special(), (Box{1, 0}));
  EXPECT_EQ(count_bumps(lift), 0);
}

TEST(LiftPath, GrowingOntoTheSpecialBoxClimbsEveryStep) {
  // each new box is placed on the current special box
  std::vector<YoungDiagram> path{YoungDiagram({1})};
  AugmentedDiagram a(path[0], Box{1, 0});
  for (int i = 0; i < 6; ++i) {
    path.push_back(path.back().with_box(a.special()));
    a = step(a, a.special());
  }
  const auto lift = lift_path(AugmentedDiagram(path[0], Box{1, 0}), path);
  for (std::size_t i = 0; i < lift.size(); ++i) EXPECT_EQ(lift[i].special().y, static_cast<int>(i));
  EXPECT_EQ(count_bumps(lift), 6);
}

TEST(LiftPath, ProjectionAndBumpCount) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const auto path = random_growth(rng, YoungDiagram({2, 1}), 60);
    const AugmentedDiagram start(path[0], path[0].outer_corners()[rng() % 3]);
    const auto lift = lift_path(start, path);
    ASSERT_EQ(lift.size(), path.size());
    for (std::size_t i = 0; i < path.size(); ++i) EXPECT_EQ(lift[i].regular(), path[i]);
    for (std::size_t i = 1; i < lift.size(); ++i) EXPECT_TRUE(is_edge(lift[i - 1], lift[i]));
    EXPECT_EQ(count_bumps(lift), lift.back().special().y - start.special().y);
  }
}

TEST(LiftPath, RejectsNonPaths) {
  const std::vector<YoungDiagram> jump{YoungDiagram({1}), YoungDiagram({3})};
  EXPECT_THROW(lift_path(AugmentedDiagram(jump[0], Box{1, 0}), jump), std::invalid_argument);
  const std::vector<YoungDiagram> wrong_start{YoungDiagram({2})};
  EXPECT_THROW(lift_path(AugmentedDiagram(YoungDiagram({1}), Box{1, 0}), wrong_start), std::invalid_argument);
}

TEST(TransposeDuality, ReversedSequenceTransposesAugmentedShape) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 1000; ++trial) {
    auto w = random_entries(rng, rng() % 60);
    const std::size_t m = rng() % (w.size() + 1);
    const auto forward = augmented_shape(with_infinity(w, m));
    std::reverse(w.begin(), w.end());
    const auto backward = augmented_shape(with_infinity(w, w.size() - m));
    ASSERT_EQ(backward, transpose(forward));
  }
}

}  // namespace
}  // namespace bump
