#pragma once

// Bumping routes of the probe m+1/2 in row and lazy parametrizations, the
// trajectory of a maximal entry inserted after m steps, hitting times of
// columns, projective samples and bumping trees.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bump/tableau.hpp"

namespace bump {

/// Entry number i (1-based) of an insertion stream.
using EntrySource = std::function<Entry(std::int64_t)>;

/// Source reading a finite sequence; indices past the end throw std::out_of_range.
EntrySource finite_source(std::vector<Entry> w);

struct RouteEvent {
  std::int64_t t = 0;
  Box box;

  friend bool operator==(const RouteEvent&, const RouteEvent&) = default;
};

std::ostream& operator<<(std::ostream& os, const RouteEvent& e);

/// Stop rules for an open-ended trajectory. The run always ends at t_max;
/// it ends earlier once the tracked box reaches column target_column or
/// row row_cap (negative values disable those rules).
struct StopCondition {
  std::int64_t t_max = 0;
  int target_column = -1;
  int row_cap = -1;
};

/// Lazy route: one event per position change, the first at t = m.
struct RouteTrace {
  std::int64_t m = 0;
  std::vector<RouteEvent> events;
  /// A requested target column or row cap was not reached by t_max.
  bool censored = false;
  /// Last simulated step.
  std::int64_t t_end = 0;
  /// Lower bounds on the column lengths of the regular shape at t_end for
  /// columns 0..x of the final box (exact for the reference simulations).
  std::vector<int> column_lengths;

  Box box_at(std::int64_t t) const;
  Box final_box() const { return events.back().box; }
  /// x-coordinate of the route in each row reached so far.
  std::vector<int> x_by_row() const;
};

/// Bumping route of the probe m+1/2 through t, as the x-coordinate in each
/// visited row (index = row). The last element is the new box.
std::vector<int> row_route(const StandardTableau& t, std::int64_t m);
std::vector<int> row_route(const InsertionTableau& t, std::int64_t m);

/// Lazy route of m+1/2 through Q(w) for t in [m, t_last] (t_last = |w| when
/// negative), evaluated from the definition: at each t, the new box of
/// Q(w)|<=t <- m+1/2. Throws std::invalid_argument if m > |w|.
RouteTrace lazy_route_oracle(std::span<const Entry> w, std::int64_t m, std::int64_t t_last = -1);

/// Lazy route read off the full route of m+1/2 through q: the first route
/// box holding an entry > t, else the terminal box.
RouteTrace lazy_route_from_row_route(const StandardTableau& q, std::int64_t m, std::int64_t t_last);

/// Position of the maximal entry inserted after m stream entries. Runs on
/// the regular tableau alone: the tracked box moves to the end of the next
/// row exactly when a new box lands on it.
RouteTrace trajectory_of_infinity(const EntrySource& source, std::int64_t m, const StopCondition& stop);

/// Observer called after every step t >= m with the regular tableau and
/// the tracked box.
using TrajectoryObserver = std::function<void(std::int64_t t, const InsertionTableau&, Box)>;
RouteTrace trajectory_of_infinity(const EntrySource& source, std::int64_t m, const StopCondition& stop,
                                  const TrajectoryObserver& observer);

/// Same trajectory computed by inserting an explicit plus-infinity entry.
RouteTrace sentinel_trajectory(const EntrySource& source, std::int64_t m, const StopCondition& stop);

/// Hit of column x: first row Y and first step T at which the route sits
/// in a column <= x. When censored, y and t are lower bounds.
struct ColumnHit {
  int x = 0;
  std::int64_t y = 0;
  std::int64_t t = 0;
  bool censored = false;
};

std::vector<ColumnHit> hitting_times(const RouteTrace& trace, int x_max);

struct ProjectivePoint {
  double z = 0.0;
  std::int64_t row = 0;
  int x = 0;
  /// The route had not reached the row when the trace ended.
  bool missing = false;
};

/// Route column in row floor(2m/z) for each z > 0.
std::vector<ProjectivePoint> projective_route(const RouteTrace& trace, std::span<const double> z_grid);

/// Lazy routes of every probe level 0..m_max through Q(w).
std::vector<RouteTrace> bumping_tree(std::span<const Entry> w, std::int64_t m_max);

}  // namespace bump
