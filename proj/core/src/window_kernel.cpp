#include "bump/window_kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace bump {

BottomRows::BottomRows(int num_rows) : rows_(static_cast<std::size_t>(std::max(num_rows, 1))) {}

int BottomRows::insert(Key k) {
  const int n = num_rows();
  for (int r = 0; r < n; ++r) {
    auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::upper_bound(row.begin(), row.end(), k);
    if (it == row.end()) {
      row.push_back(k);
      return r;
    }
    std::swap(*it, k);
  }
  return n;
}

void BottomRows::truncate(int r) {
  if (r < num_rows()) rows_.resize(static_cast<std::size_t>(std::max(r, 1)));
}

namespace {

Key direct_key(const SeededStream& s, std::int64_t i) { return {s.value(i), s.tiebreak(i)}; }

Key complement_key(const SeededStream& s, std::int64_t i) { return {-s.value(i), ~s.tiebreak(i)}; }

bool reached(const StopCondition& stop, int x, int y) {
  return (stop.target_column >= 0 && x <= stop.target_column) || (stop.row_cap >= 0 && y >= stop.row_cap);
}

void validate(const StopCondition& stop, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("window trajectory: m must be non-negative");
  if (stop.t_max < m) throw std::invalid_argument("window trajectory: t_max must be at least m");
}

template <class ComplementKey>
RouteTrace column_window_impl(const ComplementKey& key_at, std::int64_t m, const StopCondition& stop) {
  validate(stop, m);
  // The complemented prefix has at most m rows; row K (the first empty one)
  // holds the tracked box in transposed coordinates.
  BottomRows rows(static_cast<int>(m) + 1);
  for (std::int64_t i = 1; i <= m; ++i) rows.insert(key_at(i));
  int x = 0;
  while (x < rows.num_rows() && rows.row_length(x) > 0) ++x;
  rows.truncate(x + 1);

  RouteTrace trace;
  trace.m = m;
  trace.events.push_back({m, Box{x, 0}});
  int y = 0;  // always equals rows.row_length(x)
  std::int64_t t = m;
  while (t < stop.t_max && !reached(stop, x, y)) {
    ++t;
    if (rows.insert(key_at(t)) != x) continue;
    // The new box sits on the tracked one: it moves up a row, to the column
    // given by the number of rows below x that are now at least y + 2 long.
    ++y;
    int nx = 0;
    while (nx < x && rows.row_length(nx) >= y + 1) ++nx;
    x = nx;
    rows.truncate(x + 1);
    trace.events.push_back({t, Box{x, y}});
  }
  trace.t_end = t;
  trace.censored = (stop.target_column >= 0 || stop.row_cap >= 0) && !reached(stop, x, y);
  trace.column_lengths.reserve(static_cast<std::size_t>(x) + 1);
  for (int c = 0; c <= x; ++c) trace.column_lengths.push_back(rows.row_length(c));
  return trace;
}

}  // namespace

RouteTrace column_window_trajectory(const SeededStream& stream, std::int64_t m, const StopCondition& stop) {
  return column_window_impl([&](std::int64_t i) { return complement_key(stream, i); }, m, stop);
}

RouteTrace column_window_trajectory(const KeySource& keys, std::int64_t m, const StopCondition& stop) {
  return column_window_impl(
      [&](std::int64_t i) {
        const Key k = keys(i);
        return Key{-k.value, ~k.tiebreak};
      },
      m, stop);
}

RouteTrace row_window_trajectory(const SeededStream& stream, std::int64_t m, const StopCondition& stop,
                                 int initial_rows) {
  validate(stop, m);
  for (int window = std::max(initial_rows, 2);; window *= 2) {
    BottomRows rows(window);
    for (std::int64_t i = 1; i <= m; ++i) rows.insert(direct_key(stream, i));

    RouteTrace trace;
    trace.m = m;
    int x = rows.row_length(0);
    int y = 0;
    trace.events.push_back({m, Box{x, 0}});
    bool overflow = false;
    std::int64_t t = m;
    while (t < stop.t_max && !reached(stop, x, y)) {
      ++t;
      if (rows.insert(direct_key(stream, t)) != y) continue;
      if (y + 1 >= window) {
        overflow = true;
        break;
      }
      ++y;
      x = rows.row_length(y);
      trace.events.push_back({t, Box{x, y}});
    }
    if (overflow) continue;

    trace.t_end = t;
    trace.censored = (stop.target_column >= 0 || stop.row_cap >= 0) && !reached(stop, x, y);
    for (int c = 0; c <= x; ++c) {
      int len = 0;
      while (len < window && rows.row_length(len) > c) ++len;
      trace.column_lengths.push_back(len);
    }
    return trace;
  }
}

GrowthRowTrace trace_growth_rows(const SeededStream& stream, const GrowthWindow& window) {
  if (window.cutoff < 0 || window.first < 0 || window.last < window.first)
    throw std::invalid_argument("trace_growth_rows: invalid window");
  BottomRows rows(window.cutoff + 1);
  GrowthRowTrace out{window, {}};
  out.rows.reserve(static_cast<std::size_t>(window.last - window.first));
  for (std::int64_t t = 1; t <= window.last; ++t) {
    const int r = rows.insert(direct_key(stream, t));
    if (t > window.first) out.rows.push_back(r <= window.cutoff ? r : GrowthRowTrace::beyond_cutoff);
  }
  return out;
}

}  // namespace bump
