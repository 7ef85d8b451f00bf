#include "bump/bumping.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace bump {

EntrySource finite_source(std::vector<Entry> w) {
  auto data = std::make_shared<const std::vector<Entry>>(std::move(w));
  return [data](std::int64_t i) -> Entry {
    if (i < 1 || static_cast<std::size_t>(i) > data->size())
      throw std::out_of_range("finite_source: index past the end of the sequence");
    return (*data)[static_cast<std::size_t>(i - 1)];
  };
}

std::ostream& operator<<(std::ostream& os, const RouteEvent& e) { return os << e.t << ':' << e.box; }

Box RouteTrace::box_at(std::int64_t t) const {
  if (events.empty() || t < events.front().t || t > t_end)
    throw std::out_of_range("RouteTrace::box_at: time outside the trace");
  auto it = std::upper_bound(events.begin(), events.end(), t,
                             [](std::int64_t v, const RouteEvent& e) { return v < e.t; });
  return std::prev(it)->box;
}

std::vector<int> RouteTrace::x_by_row() const {
  std::vector<int> xs;
  for (const auto& e : events) {
    const auto y = static_cast<std::size_t>(e.box.y);
    if (xs.size() <= y) xs.resize(y + 1, 0);
    xs[y] = e.box.x;
  }
  return xs;
}

namespace {

std::vector<int> column_lengths_up_to(const YoungDiagram& shape, int x) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(x) + 1);
  for (int c = 0; c <= x; ++c) out.push_back(shape.column_length(c));
  return out;
}

void push_if_moved(RouteTrace& trace, std::int64_t t, Box b) {
  if (trace.events.empty() || trace.events.back().box != b) trace.events.push_back({t, b});
}

bool stop_reached(const StopCondition& stop, Box b) {
  return (stop.target_column >= 0 && b.x <= stop.target_column) || (stop.row_cap >= 0 && b.y >= stop.row_cap);
}

bool has_goal(const StopCondition& stop) { return stop.target_column >= 0 || stop.row_cap >= 0; }

void check_stop(const StopCondition& stop, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("trajectory: m must be non-negative");
  if (stop.t_max < m) throw std::invalid_argument("trajectory: t_max must be at least m");
}

}  // namespace

std::vector<int> row_route(const InsertionTableau& t, std::int64_t m) {
  InsertionTableau copy = t;
  const auto route = copy.insert_with_route(Entry::probe(m));
  std::vector<int> xs;
  xs.reserve(route.size());
  for (const Box b : route) xs.push_back(b.x);
  return xs;
}

std::vector<int> row_route(const StandardTableau& t, std::int64_t m) { return row_route(t.as_insertion(), m); }

RouteTrace lazy_route_oracle(std::span<const Entry> w, std::int64_t m, std::int64_t t_last) {
  const auto n = static_cast<std::int64_t>(w.size());
  if (m < 0 || m > n) throw std::invalid_argument("lazy_route_oracle: need 0 <= m <= |w|");
  if (t_last < 0) t_last = n;
  if (t_last < m || t_last > n) throw std::invalid_argument("lazy_route_oracle: need m <= t_last <= |w|");
  const StandardTableau q = rsk(w).q;
  RouteTrace trace;
  trace.m = m;
  YoungDiagram last_shape;
  for (std::int64_t t = m; t <= t_last; ++t) {
    InsertionTableau restricted = restrict_leq(q, t).as_insertion();
    last_shape = restricted.shape();
    push_if_moved(trace, t, restricted.insert(Entry::probe(m)));
  }
  trace.t_end = t_last;
  trace.column_lengths = column_lengths_up_to(last_shape, trace.final_box().x);
  return trace;
}

RouteTrace lazy_route_from_row_route(const StandardTableau& q, std::int64_t m, std::int64_t t_last) {
  if (m < 0 || t_last < m) throw std::invalid_argument("lazy_route_from_row_route: need 0 <= m <= t_last");
  const auto xs = row_route(q, m);
  RouteTrace trace;
  trace.m = m;
  for (std::int64_t t = m; t <= t_last; ++t) {
    Box b{xs.back(), static_cast<int>(xs.size()) - 1};
    for (std::size_t y = 0; y + 1 < xs.size(); ++y) {
      const Box candidate{xs[y], static_cast<int>(y)};
      if (q.at(candidate) > t) {
        b = candidate;
        break;
      }
    }
    push_if_moved(trace, t, b);
  }
  trace.t_end = t_last;
  trace.column_lengths = column_lengths_up_to(restrict_leq(q, t_last).shape(), trace.final_box().x);
  return trace;
}

RouteTrace trajectory_of_infinity(const EntrySource& source, std::int64_t m, const StopCondition& stop) {
  return trajectory_of_infinity(source, m, stop, TrajectoryObserver{});
}

RouteTrace trajectory_of_infinity(const EntrySource& source, std::int64_t m, const StopCondition& stop,
                                  const TrajectoryObserver& observer) {
  check_stop(stop, m);
  InsertionTableau p;
  for (std::int64_t i = 1; i <= m; ++i) p.insert(source(i));

  RouteTrace trace;
  trace.m = m;
  Box special{p.row_length(0), 0};
  trace.events.push_back({m, special});
  if (observer) observer(m, p, special);

  std::int64_t t = m;
  while (t < stop.t_max && !stop_reached(stop, special)) {
    ++t;
    const Box b = p.insert(source(t));
    if (b == special) {
      const int above = special.y + 1;
      special = Box{p.row_length(static_cast<std::size_t>(above)), above};
      trace.events.push_back({t, special});
    }
    if (observer) observer(t, p, special);
  }
  trace.t_end = t;
  trace.censored = has_goal(stop) && !stop_reached(stop, special);
  trace.column_lengths = column_lengths_up_to(p.shape(), special.x);
  return trace;
}

RouteTrace sentinel_trajectory(const EntrySource& source, std::int64_t m, const StopCondition& stop) {
  check_stop(stop, m);
  InsertionTableau p;
  for (std::int64_t i = 1; i <= m; ++i) p.insert(source(i));
  p.insert(Entry::plus_infinity());

  const auto locate = [&p]() {
    for (std::size_t y = 0; y < p.num_rows(); ++y) {
      const auto& r = p.rows()[y];
      if (r.back().is_plus_infinity()) return Box{static_cast<int>(r.size()) - 1, static_cast<int>(y)};
    }
    throw std::logic_error("sentinel_trajectory: infinity vanished");
  };

  RouteTrace trace;
  trace.m = m;
  Box pos = locate();
  trace.events.push_back({m, pos});
  std::int64_t t = m;
  while (t < stop.t_max && !stop_reached(stop, pos)) {
    ++t;
    p.insert(source(t));
    pos = locate();
    push_if_moved(trace, t, pos);
  }
  trace.t_end = t;
  trace.censored = has_goal(stop) && !stop_reached(stop, pos);
  std::vector<int> regular;
  for (std::size_t y = 0; y < p.num_rows(); ++y)
    regular.push_back(p.row_length(y) - (static_cast<int>(y) == pos.y ? 1 : 0));
  trace.column_lengths = column_lengths_up_to(YoungDiagram(std::move(regular)), pos.x);
  return trace;
}

std::vector<ColumnHit> hitting_times(const RouteTrace& trace, int x_max) {
  if (trace.events.empty()) throw std::invalid_argument("hitting_times: empty trace");
  std::vector<ColumnHit> hits;
  hits.reserve(static_cast<std::size_t>(x_max) + 1);
  const Box last = trace.final_box();
  for (int x = 0; x <= x_max; ++x) {
    ColumnHit h;
    h.x = x;
    auto it = std::find_if(trace.events.begin(), trace.events.end(),
                           [x](const RouteEvent& e) { return e.box.x <= x; });
    if (it != trace.events.end()) {
      h.y = it->box.y;
      h.t = it->t;
    } else {
      // the route must climb at least one more row, and the column it
      // reaches can only be taller than column x is now
      h.censored = true;
      h.y = last.y + 1;
      if (static_cast<std::size_t>(x) < trace.column_lengths.size())
        h.y = std::max<std::int64_t>(h.y, trace.column_lengths[static_cast<std::size_t>(x)]);
      h.t = trace.t_end + 1;
    }
    hits.push_back(h);
  }
  return hits;
}

std::vector<ProjectivePoint> projective_route(const RouteTrace& trace, std::span<const double> z_grid) {
  const auto xs = trace.x_by_row();
  const double two_m = 2.0 * static_cast<double>(trace.m);
  std::vector<ProjectivePoint> out;
  out.reserve(z_grid.size());
  for (double z : z_grid) {
    if (!(z > 0.0)) throw std::invalid_argument("projective_route: z must be positive");
    ProjectivePoint p;
    p.z = z;
    p.row = static_cast<std::int64_t>(std::floor(two_m / z));
    if (static_cast<std::size_t>(p.row) < xs.size()) {
      p.x = xs[static_cast<std::size_t>(p.row)];
    } else {
      p.missing = true;
      p.x = xs.back();
    }
    out.push_back(p);
  }
  return out;
}

std::vector<RouteTrace> bumping_tree(std::span<const Entry> w, std::int64_t m_max) {
  const auto n = static_cast<std::int64_t>(w.size());
  if (m_max < 0 || m_max > n) throw std::invalid_argument("bumping_tree: need 0 <= m_max <= |w|");
  const auto source = finite_source(std::vector<Entry>(w.begin(), w.end()));
  std::vector<RouteTrace> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  for (std::int64_t m = 0; m <= m_max; ++m) out.push_back(trajectory_of_infinity(source, m, StopCondition{n}));
  return out;
}

}  // namespace bump
