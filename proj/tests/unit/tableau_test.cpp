#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bump/tableau.hpp"
#include "test_util.hpp"

namespace bump {
namespace {

using testing::example_tableau;
using testing::random_entries;

std::vector<Box> boxes(std::initializer_list<std::pair<int, int>> xy) {
  std::vector<Box> out;
  for (auto [x, y] : xy) out.push_back(Box{x, y});
  return out;
}

TEST(YoungDiagram, DropsTrailingZerosAndRejectsIncreasingRows) {
  EXPECT_EQ(YoungDiagram({3, 1, 0, 0}), YoungDiagram({3, 1}));
  EXPECT_EQ(YoungDiagram({3, 1}).size(), 4);
  EXPECT_THROW(YoungDiagram({1, 2}), std::invalid_argument);
  EXPECT_THROW(YoungDiagram({2, -1}), std::invalid_argument);
}

TEST(YoungDiagram, CornersAndColumns) {
  const YoungDiagram d({3, 1});
  EXPECT_EQ(d.outer_corners(), boxes({{3, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(d.column_length(0), 2);
  EXPECT_EQ(d.column_length(2), 1);
  EXPECT_EQ(d.column_length(3), 0);
  EXPECT_TRUE(d.contains(Box{2, 0}));
  EXPECT_FALSE(d.contains(Box{1, 1}));
  EXPECT_THROW(d.with_box(Box{2, 1}), std::invalid_argument);
  EXPECT_EQ(added_box(d, d.with_box(Box{1, 1})), (Box{1, 1}));
  EXPECT_FALSE(added_box(d, YoungDiagram({5})).has_value());
}

TEST(YoungDiagram, Transpose) {
  EXPECT_EQ(transpose(YoungDiagram({3, 1})), YoungDiagram({2, 1, 1}));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto shape = rsk_shape(random_entries(rng, rng() % 30));
    EXPECT_EQ(transpose(transpose(shape)), shape);
    EXPECT_EQ(transpose(shape).size(), shape.size());
  }
}

TEST(Entry, ProbeSitsBetweenIntegers) {
  EXPECT_LT(Entry::finite(17), Entry::probe(17));
  EXPECT_LT(Entry::probe(17), Entry::finite(18));
  EXPECT_LT(Entry::probe(17), Entry::finite(17.5));
  EXPECT_GT(Entry::probe(17), Entry::finite(17.25));
  EXPECT_LT(Entry::probe(3), Entry::probe(4));
  EXPECT_LT(Entry::finite(1e300), Entry::plus_infinity());
  EXPECT_LT(Entry::probe(1'000'000), Entry::plus_infinity());
  EXPECT_EQ(Entry::plus_infinity(), Entry::plus_infinity());
  EXPECT_LT(Entry::finite(0.5, 1), Entry::finite(0.5, 2));
  EXPECT_THROW(Entry::finite(std::nan("")), std::invalid_argument);
}

TEST(RowInsert, ExampleTableauWith18) {
  auto [t, route] = row_insert(example_tableau(), Entry::finite(18));
  EXPECT_EQ(route, boxes({{1, 0}, {1, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(integer_rows(t), (std::vector<std::vector<std::int64_t>>{{16, 18, 41, 82}, {23, 37, 70}, {53, 99}, {74}}));
  EXPECT_TRUE(t.is_valid());
}

TEST(RowInsert, EmptyAndAppend) {
  auto [t, route] = row_insert(InsertionTableau{}, Entry::finite(5));
  EXPECT_EQ(route, boxes({{0, 0}}));
  EXPECT_EQ(t.size(), 1);

  InsertionTableau row({{Entry::finite(1), Entry::finite(2)}});
  EXPECT_EQ(row_insert(row, Entry::finite(3)).route, boxes({{2, 0}}));
}

TEST(RowInsert, DuplicateIsRejectedWithoutMutation) {
  auto t = example_tableau();
  const auto before = t;
  EXPECT_THROW(t.insert(Entry::finite(53)), std::invalid_argument);
  EXPECT_EQ(t, before);
  EXPECT_THROW(t.insert(Entry::finite(16)), std::invalid_argument);
  EXPECT_EQ(t, before);
}

TEST(RowInsert, RejectsInvalidTableaux) {
  EXPECT_THROW(InsertionTableau({{Entry::finite(2), Entry::finite(1)}}), std::invalid_argument);
  EXPECT_THROW(InsertionTableau({{Entry::finite(2)}, {Entry::finite(1)}}), std::invalid_argument);
  EXPECT_THROW(InsertionTableau({{Entry::finite(1)}, {Entry::finite(2), Entry::finite(3)}}), std::invalid_argument);
}

TEST(RowInsert, RandomRoutesAreMonotoneAndTableauxStayValid) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    InsertionTableau t;
    for (const Entry& e : random_entries(rng, 60)) {
      const auto route = t.insert_with_route(e);
      for (std::size_t i = 0; i < route.size(); ++i) {
        EXPECT_EQ(route[i].y, static_cast<int>(i));
        if (i > 0) EXPECT_LE(route[i].x, route[i - 1].x);
      }
    }
    EXPECT_TRUE(t.is_valid());
    EXPECT_EQ(t.size(), 60);
    EXPECT_EQ(t.shape().size(), 60);
  }
}

TEST(Rsk, SmallExample) {
  const std::vector<int> w{3, 1, 2};
  const auto [p, q] = rsk(std::span<const int>(w));
  EXPECT_EQ(integer_rows(p), (std::vector<std::vector<std::int64_t>>{{1, 2}, {3}}));
  EXPECT_EQ(q.rows(), (std::vector<std::vector<std::int64_t>>{{1, 3}, {2}}));
  EXPECT_EQ(rsk_shape(std::span<const int>(w)), YoungDiagram({2, 1}));
}

TEST(Rsk, TrivialInputs) {
  EXPECT_TRUE(rsk(std::span<const int>{}).p.rows().empty());
  EXPECT_TRUE(rsk(std::span<const int>{}).q.rows().empty());
  const std::vector<int> up{1, 2, 3, 4, 5};
  const auto inc = rsk(std::span<const int>(up));
  EXPECT_EQ(inc.p.num_rows(), 1U);
  EXPECT_EQ(inc.q.rows(), (std::vector<std::vector<std::int64_t>>{{1, 2, 3, 4, 5}}));
  const std::vector<int> down{5, 4, 3, 2, 1};
  EXPECT_EQ(rsk_shape(std::span<const int>(down)), YoungDiagram({1, 1, 1, 1, 1}));
  // equal values are ordered by their position in the sequence
  const std::vector<int> repeated{1, 1};
  EXPECT_EQ(rsk_shape(std::span<const int>(repeated)), YoungDiagram({2}));
  const std::vector<Entry> tie{Entry::finite(1, 0), Entry::finite(1, 0)};
  EXPECT_THROW(rsk(tie), std::invalid_argument);
}

TEST(Rsk, ShapesAgreeAndOnlyRelativeOrderMatters) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto values = testing::random_values(rng, rng() % 50);
    const auto [p, q] = rsk(std::span<const double>(values));
    EXPECT_EQ(p.shape(), q.shape());
    EXPECT_TRUE(q.is_complete());

    std::vector<int> ranks(values.size());
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
    const auto ranked = rsk(std::span<const int>(ranks));
    EXPECT_EQ(ranked.q, q);
    EXPECT_EQ(ranked.p.shape(), p.shape());
  }
}

TEST(Rsk, TransposeOfSmallInsertions) {
  const std::vector<int> a{2, 1};
  const std::vector<int> b{1, 2};
  EXPECT_EQ(integer_rows(rsk(std::span<const int>(a)).p), integer_rows(transpose(rsk(std::span<const int>(b)).p)));
}

TEST(Rsk, ReversalTransposesInsertionTableau) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_entries(rng, rng() % 101);
    const auto p = rsk(w).p;
    std::reverse(w.begin(), w.end());
    EXPECT_EQ(rsk(w).p, transpose(p));
  }
}

TEST(RestrictLeq, Examples) {
  const std::vector<int> w{3, 1, 2};
  const auto q = rsk(std::span<const int>(w)).q;
  EXPECT_TRUE(restrict_leq(q, 0).rows().empty());
  EXPECT_EQ(restrict_leq(q, 3), q);
  EXPECT_EQ(restrict_leq(q, 10), q);
  EXPECT_EQ(restrict_leq(q, 2).rows(), (std::vector<std::vector<std::int64_t>>{{1}, {2}}));
}

TEST(RestrictLeq, MatchesRecordingTableauOfPrefix) {
  std::mt19937_64 rng(13);
  const auto w = random_entries(rng, 40);
  const auto q = rsk(w).q;
  for (std::size_t t = 0; t <= w.size(); ++t)
    EXPECT_EQ(restrict_leq(q, static_cast<std::int64_t>(t)), rsk(std::span(w).first(t)).q);
}

TEST(StandardTableau, ValidationAndAppend) {
  EXPECT_THROW(StandardTableau({{1, 1}}), std::invalid_argument);
  EXPECT_THROW(StandardTableau({{2, 1}}), std::invalid_argument);
  StandardTableau t({{1, 3}, {2}});
  EXPECT_TRUE(t.is_complete());
  EXPECT_EQ(t.position_of(2), (Box{0, 1}));
  EXPECT_FALSE(t.position_of(7).has_value());
  EXPECT_THROW(t.append(Box{1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(t.append(Box{3, 0}, 4), std::invalid_argument);
  t.append(Box{1, 1}, 5);
  EXPECT_FALSE(t.is_complete());
  EXPECT_EQ(t.shape(), YoungDiagram({2, 2}));
}

TEST(Schuetzenberger, Examples) {
  const std::vector<int> sigma{2, 3, 1};
  EXPECT_EQ(inverse_permutation(sigma), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(integer_rows(rsk(std::span<const int>(sigma)).p),
            (std::vector<std::vector<std::int64_t>>{{1, 3}, {2}}));
  EXPECT_TRUE(schuetzenberger_check(sigma));
  const std::vector<int> id{1, 2, 3, 4};
  EXPECT_TRUE(schuetzenberger_check(id));
  const std::vector<int> bad{1, 1, 3};
  EXPECT_THROW(schuetzenberger_check(bad), std::invalid_argument);
}

TEST(Schuetzenberger, AllPermutationsUpToSix) {
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      EXPECT_TRUE(schuetzenberger_check(sigma));
      ++checked;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  EXPECT_EQ(checked, 873);
}

}  // namespace
}  // namespace bump
